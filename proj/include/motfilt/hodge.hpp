#pragma once

// Hodge diamonds: h[i][j] = dim H^j(X, Omega^i) for a smooth proper variety
// of dimension d, tagged with the base context the numbers refer to.

#include "motfilt/numbers.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace motfilt {

using homalg::Int;

enum class DiamondContext { GenericFiberOverQ, OverFq };

class HodgeDiamond {
  public:
    // h must be (d+1) x (d+1) with entries >= 0; q is required (a prime
    // power) in the finite-field context and must be absent otherwise.
    static HodgeDiamond generic_fiber(long d, std::vector<std::vector<long>> h);
    static HodgeDiamond over_fq(long d, std::vector<std::vector<long>> h, Int q);

    // Spec O_F: d = 0, h^{00} = [F:Q], generic fiber context.
    static HodgeDiamond number_ring_point(long field_degree);
    // Genus-g curve over F_q: h = [[1,g],[g,1]].
    static HodgeDiamond curve_over_fq(long g, Int q);
    // Spec F_p viewed over F_p: d = 0, h^{00} = 1.
    static HodgeDiamond point_over_fq(Int q);

    long d() const { return d_; }
    long entry(long i, long j) const { return h_.at(i).at(j); }
    DiamondContext context() const { return context_; }
    const Int& q() const { return q_; }

    bool serre_symmetric() const;
    // sum_{i,j} (-1)^{i+j} h^{ij}.
    long euler_ell() const;

    nlohmann::json to_json() const;
    static HodgeDiamond from_json(const nlohmann::json& j);

  private:
    HodgeDiamond() = default;
    long d_ = 0;
    std::vector<std::vector<long>> h_;
    DiamondContext context_ = DiamondContext::GenericFiberOverQ;
    Int q_ = 0;
};

} // namespace motfilt
