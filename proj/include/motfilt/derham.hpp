#pragma once

// Exterior powers of the cotangent complex and Hodge-truncated derived
// de Rham data for monogenic number rings and prime fields.

#include "motfilt/hodge.hpp"
#include "motfilt/number_ring.hpp"
#include "motfilt/zcomplex.hpp"

#include <optional>
#include <vector>

namespace derham {

using homalg::FinAbGroup;
using homalg::Int;
using homalg::ZComplex;
using motfilt::HodgeDiamond;
using numring::NumberRing;

struct LambdaPower {
    long exterior_degree = 0;
    long homological_degree = 0;
    FinAbGroup group; // free of rank d for i = 0, torsion of order |disc| for i >= 1
};

// i = 0: the ring itself.  i >= 1: the rank-one presentation has divided-power
// Koszul complex collapsing to [O --f'--> O], so the result is O/(f'(t)) in
// homological degree i-1.
LambdaPower lambda_power(const NumberRing& r, long i);

// The same exterior power as an explicit cochain complex: for i >= 1 the
// two-term [O --f'--> O] in cohomological degrees [-i, 1-i], for i = 0 the
// ring concentrated in degree 0.
ZComplex lambda_power_complex(const NumberRing& r, long i);

// Alternating-sum rank of truncated de Rham cohomology of the generic fiber:
// sum_{i<k, j} (-1)^{i+j} h^{ij}; 0 for k <= 0.
long lomega_rank(const HodgeDiamond& h, long k);

// The honest complex [O --d--> Omega_{O/Z}] realized over free lattices:
// C^0 = Z^{2d} --[D | M_{f'}]--> C^1 = Z^d where D(t^k) = k t^{k-1}.
ZComplex lomega_two_term(const NumberRing& r);

// chi_x of the truncated de Rham complex of F_p over Z: each of the n Hodge
// graded pieces contributes a factor p, so the value is p^n.
Int fp_lomega_euler(const Int& p, long n);

struct DeRhamSummary {
    long n = 0;
    long h0_rank = 0;
    std::optional<FinAbGroup> h1;   // exact for n <= 2
    std::vector<Int> graded_orders; // order-level data for n >= 3
    nlohmann::json to_json() const;
};

// Truncation-level summary for a number ring; exact groups for n <= 2,
// graded-piece orders only beyond that (extensions are not determined).
DeRhamSummary lomega_summary(const NumberRing& r, long n);

} // namespace derham
