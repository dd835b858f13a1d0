#include "motfilt/derham.hpp"

#include "motfilt/json_util.hpp"

#include <stdexcept>

namespace derham {

using homalg::IntMatrix;

LambdaPower lambda_power(const NumberRing& r, long i) {
    if (i < 0) throw std::invalid_argument("lambda_power: exterior degree must be >= 0");
    LambdaPower out;
    out.exterior_degree = i;
    if (i == 0) {
        out.homological_degree = 0;
        out.group = FinAbGroup::free_of_rank(r.degree());
        return out;
    }
    out.homological_degree = i - 1;
    out.group = numring::quotient_group(r, {r.derivative_elem()}, 0);
    return out;
}

ZComplex lambda_power_complex(const NumberRing& r, long i) {
    if (i < 0) throw std::invalid_argument("lambda_power_complex: exterior degree must be >= 0");
    const long d = r.degree();
    if (i == 0) return ZComplex::concentrated(0, d);
    const int lo = static_cast<int>(-i);
    std::map<int, std::size_t> ranks{{lo, static_cast<std::size_t>(d)},
                                     {lo + 1, static_cast<std::size_t>(d)}};
    std::map<int, IntMatrix> diffs;
    diffs.emplace(lo, r.mult_matrix(r.derivative_elem()));
    return ZComplex(lo, lo + 1, std::move(ranks), std::move(diffs));
}

long lomega_rank(const HodgeDiamond& h, long k) {
    if (k <= 0) return 0;
    long acc = 0;
    const long imax = std::min(h.d(), k - 1);
    for (long i = 0; i <= imax; ++i)
        for (long j = 0; j <= h.d(); ++j)
            acc += ((i + j) % 2 == 0) ? h.entry(i, j) : -h.entry(i, j);
    return acc;
}

ZComplex lomega_two_term(const NumberRing& r) {
    const long d = r.degree();
    IntMatrix diff(d, 2 * d);
    for (long k = 1; k < d; ++k) diff.at(k - 1, k) = k; // d(t^k) = k t^{k-1}
    IntMatrix mf = r.mult_matrix(r.derivative_elem());
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) diff.at(i, d + j) = mf.at(i, j);
    std::map<int, std::size_t> ranks{{0, static_cast<std::size_t>(2 * d)},
                                     {1, static_cast<std::size_t>(d)}};
    std::map<int, IntMatrix> diffs;
    diffs.emplace(0, std::move(diff));
    return ZComplex(0, 1, std::move(ranks), std::move(diffs));
}

Int fp_lomega_euler(const Int& p, long n) {
    if (!homalg::is_prime(p)) throw std::invalid_argument("fp_lomega_euler: p must be prime");
    if (n < 0) throw std::invalid_argument("fp_lomega_euler: n must be >= 0");
    return homalg::ipow(p, static_cast<unsigned long>(n));
}

nlohmann::json DeRhamSummary::to_json() const {
    nlohmann::json out{{"n", n}, {"h0_rank", h0_rank}};
    if (h1) {
        out["h1"] = h1->to_string();
        out["h1_order"] = homalg::int_to_json(h1->order());
    }
    if (!graded_orders.empty()) {
        nlohmann::json orders = nlohmann::json::array();
        for (const auto& o : graded_orders) orders.push_back(homalg::int_to_json(o));
        out["graded_orders"] = orders;
    }
    return out;
}

DeRhamSummary lomega_summary(const NumberRing& r, long n) {
    DeRhamSummary s;
    s.n = n;
    if (n <= 0) {
        s.h1 = FinAbGroup();
        return s;
    }
    s.h0_rank = r.degree();
    if (n == 1) {
        s.h1 = FinAbGroup();
        return s;
    }
    if (n == 2) {
        s.h1 = homalg::cohomology(lomega_two_term(r), 1);
        return s;
    }
    // Hodge graded pieces i = 1..n-1 each have order |disc|; the extensions
    // assembling H^1 are not determined, so only orders are exposed.
    s.graded_orders.assign(static_cast<std::size_t>(n - 1), different_norm(r));
    return s;
}

} // namespace derham
