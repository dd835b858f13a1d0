#include "motfilt/hodge.hpp"

#include "motfilt/json_util.hpp"

#include <stdexcept>

namespace motfilt {

namespace {

void validate_shape(long d, const std::vector<std::vector<long>>& h) {
    if (d < 0) throw std::invalid_argument("HodgeDiamond: dimension must be >= 0");
    if (static_cast<long>(h.size()) != d + 1)
        throw std::invalid_argument("HodgeDiamond: h must have d+1 rows");
    for (const auto& row : h) {
        if (static_cast<long>(row.size()) != d + 1)
            throw std::invalid_argument("HodgeDiamond: h must have d+1 columns");
        for (long x : row)
            if (x < 0) throw std::invalid_argument("HodgeDiamond: negative Hodge number");
    }
}

} // namespace

HodgeDiamond HodgeDiamond::generic_fiber(long d, std::vector<std::vector<long>> h) {
    validate_shape(d, h);
    HodgeDiamond out;
    out.d_ = d;
    out.h_ = std::move(h);
    out.context_ = DiamondContext::GenericFiberOverQ;
    return out;
}

HodgeDiamond HodgeDiamond::over_fq(long d, std::vector<std::vector<long>> h, Int q) {
    validate_shape(d, h);
    Int p;
    unsigned k;
    if (!homalg::is_prime_power(q, p, k))
        throw std::invalid_argument("HodgeDiamond: q must be a prime power");
    HodgeDiamond out;
    out.d_ = d;
    out.h_ = std::move(h);
    out.context_ = DiamondContext::OverFq;
    out.q_ = std::move(q);
    return out;
}

HodgeDiamond HodgeDiamond::number_ring_point(long field_degree) {
    if (field_degree < 1) throw std::invalid_argument("HodgeDiamond: field degree must be >= 1");
    return generic_fiber(0, {{field_degree}});
}

HodgeDiamond HodgeDiamond::curve_over_fq(long g, Int q) {
    if (g < 0) throw std::invalid_argument("HodgeDiamond: genus must be >= 0");
    return over_fq(1, {{1, g}, {g, 1}}, std::move(q));
}

HodgeDiamond HodgeDiamond::point_over_fq(Int q) { return over_fq(0, {{1}}, std::move(q)); }

bool HodgeDiamond::serre_symmetric() const {
    for (long i = 0; i <= d_; ++i)
        for (long j = 0; j <= d_; ++j)
            if (entry(i, j) != entry(d_ - i, d_ - j)) return false;
    return true;
}

long HodgeDiamond::euler_ell() const {
    long acc = 0;
    for (long i = 0; i <= d_; ++i)
        for (long j = 0; j <= d_; ++j) acc += ((i + j) % 2 == 0) ? entry(i, j) : -entry(i, j);
    return acc;
}

nlohmann::json HodgeDiamond::to_json() const {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& row : h_) h.push_back(row);
    nlohmann::json out{{"d", d_}, {"h", h}};
    if (context_ == DiamondContext::OverFq) {
        out["context"] = "over_Fq";
        out["q"] = homalg::int_to_json(q_);
    } else {
        out["context"] = "generic_fiber_over_Q";
    }
    return out;
}

HodgeDiamond HodgeDiamond::from_json(const nlohmann::json& j) {
    if (!j.contains("d") || !j.contains("h") || !j.contains("context"))
        throw std::invalid_argument("diamond: expected {d, h, context[, q]}");
    long d = j["d"].get<long>();
    std::vector<std::vector<long>> h;
    for (const auto& row : j["h"]) h.push_back(row.get<std::vector<long>>());
    std::string ctx = j["context"].get<std::string>();
    if (ctx == "over_Fq") {
        if (!j.contains("q")) throw std::invalid_argument("diamond: over_Fq context requires q");
        return over_fq(d, std::move(h), homalg::int_from_json(j["q"]));
    }
    if (ctx == "generic_fiber_over_Q") {
        if (j.contains("q"))
            throw std::invalid_argument("diamond: generic fiber context must not carry q");
        return generic_fiber(d, std::move(h));
    }
    throw std::invalid_argument("diamond: unknown context '" + ctx + "'");
}

} // namespace motfilt
