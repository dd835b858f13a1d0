#pragma once

// Bounded cochain complexes of finite free Z-modules, with exact cohomology,
// derived reduction mod j, and both Euler characteristics.

#include "motfilt/fin_ab_group.hpp"
#include "motfilt/int_matrix.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>

namespace homalg {

class ZComplex {
  public:
    // ranks: degree -> rank over a contiguous range (zero ranks allowed).
    // diffs: degree i -> matrix of d^i : C^i -> C^{i+1}, shape rank(i+1) x rank(i).
    // Missing differentials are zero maps.  Checks shapes and d o d = 0.
    ZComplex(int lo, int hi, std::map<int, std::size_t> ranks, std::map<int, IntMatrix> diffs);

    static ZComplex zero();
    // Single free module of the given rank placed in one degree.
    static ZComplex concentrated(int degree, std::size_t rank);
    // [Z --m--> Z] in degrees (degree, degree + 1).
    static ZComplex two_term(int degree, const Int& m);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t rank(int i) const;
    // d^i as a matrix (zero map outside the range).
    IntMatrix diff(int i) const;

    bool operator==(const ZComplex& o) const;

    nlohmann::json to_json() const;
    static ZComplex from_json(const nlohmann::json& j);

  private:
    int lo_ = 0, hi_ = -1; // empty range encodes the zero complex
    std::map<int, std::size_t> ranks_;
    std::map<int, IntMatrix> diffs_;
};

// H^i = ker d^i / im d^{i-1}, exact.  Trivial outside the degree range.
FinAbGroup cohomology(const ZComplex& c, int i);

// C (x)^L Z/j realized as the mapping cone of multiplication by j; j >= 1.
ZComplex derived_mod(const ZComplex& c, const Int& j);

// prod_i |H^i|^{(-1)^i}; every H^i must be finite.
Rat euler_mult(const ZComplex& c);

// sum_i (-1)^i rank C^i.
long euler_rank(const ZComplex& c);

// Degree shift: shift(c, k)^i = c^{i+k}, differential negated k times.
ZComplex shift(const ZComplex& c, int k);

ZComplex direct_sum(const ZComplex& a, const ZComplex& b);

struct MultAddReport {
    Rat torsion_euler;      // euler_mult(C (x)^L Z/j)
    long rank_euler;        // euler_rank(C)
    Rat predicted;          // j^rank_euler
    bool equal = false;
};

// Checks euler_mult(derived_mod(c, j)) == j^euler_rank(c); j >= 1.
MultAddReport euler_multadd_check(const ZComplex& c, const Int& j);

} // namespace homalg
