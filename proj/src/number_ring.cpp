#include "motfilt/number_ring.hpp"

#include "motfilt/json_util.hpp"
#include "motfilt/smith.hpp"

#include <stdexcept>

namespace numring {

NumberRing NumberRing::make(IntPoly f, std::string label) {
    f = poly_trim(std::move(f));
    const long d = poly_degree(f);
    if (d < 1) throw std::invalid_argument("NumberRing: polynomial must have degree >= 1");
    if (f[d] != 1) throw std::invalid_argument("NumberRing: polynomial must be monic");
    switch (irreducible_over_z(f)) {
        case Irreducibility::Irreducible:
            break;
        case Irreducibility::Reducible:
            throw std::invalid_argument("NumberRing: polynomial is reducible over Z");
        case Irreducibility::Unknown:
            throw std::invalid_argument(
                "NumberRing: could not certify irreducibility (degree >= 5 heuristics exhausted)");
    }
    NumberRing r;
    r.poly_ = std::move(f);
    r.degree_ = d;
    Int res = d == 1 ? Int(1) : resultant(r.poly_, poly_derivative(r.poly_));
    long s = (d * (d - 1) / 2) % 2;
    r.disc_ = s == 0 ? res : -res;
    r.label_ = std::move(label);
    return r;
}

IntMatrix NumberRing::mult_matrix(const RingElem& a) const {
    if (static_cast<long>(a.size()) != degree_)
        throw std::invalid_argument("mult_matrix: element has wrong length");
    IntMatrix m(degree_, degree_);
    // Column k holds the coordinates of t^k * a reduced mod f.
    IntPoly cur(a.begin(), a.end());
    for (long k = 0; k < degree_; ++k) {
        for (long i = 0; i < static_cast<long>(cur.size()); ++i) m.at(i, k) = cur[i];
        if (k + 1 < degree_) {
            IntPoly shifted(cur.size() + 1, Int(0));
            for (std::size_t i = 0; i < cur.size(); ++i) shifted[i + 1] = cur[i];
            cur = poly_rem_monic(std::move(shifted), poly_);
            cur.resize(degree_, Int(0));
        }
    }
    return m;
}

RingElem NumberRing::derivative_elem() const {
    IntPoly fp = poly_derivative(poly_);
    fp.resize(degree_, Int(0));
    return fp;
}

NumberRing NumberRing::from_json(const nlohmann::json& j) {
    if (!j.contains("poly") || !j["poly"].is_array())
        throw std::invalid_argument("ring: expected {\"poly\": [c0, ..., 1], ...}");
    IntPoly f;
    for (const auto& c : j["poly"]) f.push_back(homalg::int_from_json(c));
    std::string label = j.value("label", std::string{});
    return make(std::move(f), std::move(label));
}

nlohmann::json NumberRing::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : poly_) coeffs.push_back(homalg::int_to_json(c));
    nlohmann::json out{{"poly", coeffs}, {"degree", degree_}, {"disc", homalg::int_to_json(disc_)}};
    if (!label_.empty()) out["label"] = label_;
    return out;
}

FinAbGroup quotient_group(const NumberRing& r, const std::vector<RingElem>& gens, const Int& j) {
    if (j < 0) throw std::invalid_argument("quotient_group: j must be >= 0");
    bool have_gen = j >= 1;
    for (const auto& g : gens)
        for (const auto& c : g)
            if (c != 0) have_gen = true;
    if (!have_gen) throw std::domain_error("quotient_group: zero ideal gives an infinite quotient");

    const long d = r.degree();
    IntMatrix stacked(d, 0);
    for (const auto& g : gens) stacked = IntMatrix::hstack(stacked, r.mult_matrix(g));
    if (j >= 1) {
        IntMatrix scaled(d, d);
        for (long i = 0; i < d; ++i) scaled.at(i, i) = j;
        stacked = IntMatrix::hstack(stacked, scaled);
    }
    homalg::SmithResult s = homalg::smith_normal_form(stacked);
    return FinAbGroup::from_diagonal(s.diagonal(), d - s.rank());
}

Int different_norm(const NumberRing& r) { return abs(r.disc()); }

Int fractional_index(const NumberRing& r, const Int& j) {
    if (j < 1) throw std::invalid_argument("fractional_index: j must be >= 1");
    return abs(r.disc()) * homalg::ipow(j, static_cast<unsigned long>(r.degree()));
}

} // namespace numring
