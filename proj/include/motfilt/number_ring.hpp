#pragma once

// Monogenic number rings O = Z[x]/(f), f monic irreducible.  Elements are
// integer coordinate vectors in the power basis 1, t, ..., t^{d-1}.

#include "motfilt/fin_ab_group.hpp"
#include "motfilt/int_matrix.hpp"
#include "motfilt/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace numring {

using homalg::FinAbGroup;
using homalg::IntMatrix;

using RingElem = std::vector<Int>; // length = degree

class NumberRing {
  public:
    // Validates monicity and certifies irreducibility; computes the
    // discriminant as (-1)^{d(d-1)/2} res(f, f').
    static NumberRing make(IntPoly f, std::string label = "");

    long degree() const { return degree_; }
    const IntPoly& poly() const { return poly_; }
    const Int& disc() const { return disc_; }
    const std::string& label() const { return label_; }

    // Matrix of multiplication by a on the power basis.
    IntMatrix mult_matrix(const RingElem& a) const;

    // f'(t) as an element (degree of f' is d-1, so no reduction is needed).
    RingElem derivative_elem() const;

    RingElem zero_elem() const { return RingElem(degree_, Int(0)); }

    static NumberRing from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

  private:
    NumberRing() = default;
    IntPoly poly_;
    long degree_ = 0;
    Int disc_;
    std::string label_;
};

// O / (a_1, ..., a_k, j) as an abelian group: cokernel of the stacked
// multiplication matrices together with j * identity when j >= 1.
// j = 0 means no scalar generator; then some a_i must be nonzero.
FinAbGroup quotient_group(const NumberRing& r, const std::vector<RingElem>& gens, const Int& j);

// |O / (f'(t))| = |disc|.
Int different_norm(const NumberRing& r);

// [ (f'(t))^{-1} O : j O ] = |disc| * j^degree, j >= 1.
Int fractional_index(const NumberRing& r, const Int& j);

} // namespace numring
