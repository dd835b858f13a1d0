#pragma once

// Integer polynomials, coefficients stored low degree first.

#include "motfilt/numbers.hpp"

#include <vector>

namespace numring {

using homalg::Int;
using homalg::Rat;

using IntPoly = std::vector<Int>;

// Degree of the stored form after stripping trailing zeros; -1 for the zero
// polynomial.
long poly_degree(const IntPoly& f);
IntPoly poly_trim(IntPoly f);
IntPoly poly_derivative(const IntPoly& f);
Int poly_eval(const IntPoly& f, const Int& x);
IntPoly poly_mul(const IntPoly& f, const IntPoly& g);
// Remainder of f modulo a monic g.
IntPoly poly_rem_monic(IntPoly f, const IntPoly& g);

// Resultant via the Sylvester matrix and exact determinant.
Int resultant(const IntPoly& f, const IntPoly& g);

// Positive divisors of |n|, n != 0.
std::vector<Int> positive_divisors(const Int& n);

enum class Irreducibility { Irreducible, Reducible, Unknown };

// Exact for degree <= 4 (rational root and quadratic-pair search).  For
// degree >= 5 factors f modulo a fixed list of small primes: a single
// irreducible reduction certifies irreducibility, and incompatible factor
// degree patterns across primes rule reducibility out; otherwise Unknown.
// Requires monic f of degree >= 1.
Irreducibility irreducible_over_z(const IntPoly& f);

} // namespace numring
