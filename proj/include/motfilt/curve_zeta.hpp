#pragma once

// Zeta functions of smooth proper curves over F_q: numerator recovery from
// point counts, exact special values at integer arguments, the conductor
// exponent, and the finite-field functional-equation verifier.

#include "motfilt/hodge.hpp"
#include "motfilt/polynomial.hpp"
#include "motfilt/symbolic_real.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace zeta {

using motfilt::HodgeDiamond;
using numring::IntPoly;

class CurveZeta {
  public:
    // Z(t) = P(t) / ((1 - t)(1 - q t)), P of degree 2g with P(0) = 1.
    // P is recovered from counts via log Z = sum (N_m) t^m / m, or taken
    // from the coefficients a_1..a_g and completed by the functional
    // equation a_{2g-i} = q^{g-i} a_i.  Construction validates the exact
    // functional equation and the root magnitudes |1/root| = sqrt(q)
    // (numerically, tolerance 1e-6).
    static CurveZeta from_counts(const Int& q, const std::vector<Int>& counts);
    static CurveZeta from_a_coeffs(const Int& q, const std::vector<Int>& a);
    // Brute-force count of y^2 = x^3 + ax + b (genus 1); q <= 10^4, char >= 5.
    static CurveZeta from_weierstrass(const Int& q, const Int& a, const Int& b);

    const Int& q() const { return q_; }
    long genus() const { return g_; }
    const IntPoly& numerator_poly() const { return p_; }

    // Exact check P(t) = q^g t^{2g} P(1/(qt)).
    bool functional_equation_holds() const;

    Rat numerator_at(const Rat& t) const;

    static CurveZeta from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

  private:
    CurveZeta() = default;
    static CurveZeta validated(Int q, IntPoly p);
    Int q_;
    long g_ = 0;
    IntPoly p_;
    nlohmann::json source_; // echo of the construction input
};

// Number of points of y^2 = x^3 + ax + b over F_q including the point at
// infinity; q = p^k with p >= 5, q <= 10^4, nonsingular model required.
Int count_weierstrass_points(const Int& q, const Int& a, const Int& b);

struct SpecialValue {
    long order = 0;      // vanishing order at s = n (negative = pole)
    Rat coeff;           // exact rational factor
    long logq_power = 0; // the value is coeff * (log q)^logq_power
    SymbolicReal value() const { return SymbolicReal(coeff, 0, logq_power); }
};

// Leading Taylor coefficient of Z(q^{-s}) at s = n, factor by factor: each
// denominator factor vanishing at q^{-n} contributes one pole order and one
// 1/log q.
SpecialValue special_value(const CurveZeta& z, long n);

struct Conductor {
    Int base;
    long exponent = 0; // 2g - 2
};

Conductor bloch_conductor_fq(const CurveZeta& z);

struct FeReport {
    long lhs = 0; // 2 (chi(n) - chi(d-n)) via the Milne exponents
    long rhs = 0; // euler_ell * (2n - d)
    bool pass = false;
};

// Doubled integer identity behind the finite-field functional equation; the
// diamond must be the curve diamond of z (d = 1, matching q and genus).
FeReport verify_thm_fe(const CurveZeta& z, const HodgeDiamond& h, long n);

} // namespace zeta
