#include "motfilt/zcomplex.hpp"

#include "motfilt/json_util.hpp"
#include "motfilt/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace homalg {

ZComplex::ZComplex(int lo, int hi, std::map<int, std::size_t> ranks, std::map<int, IntMatrix> diffs)
    : lo_(lo), hi_(hi), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (lo_ > hi_) {
        if (!ranks_.empty() || !diffs_.empty())
            throw std::invalid_argument("ZComplex: data outside an empty degree range");
        lo_ = 0;
        hi_ = -1;
        return;
    }
    for (const auto& [i, r] : ranks_)
        if (i < lo_ || i > hi_) throw std::invalid_argument("ZComplex: rank outside degree range");
    for (int i = lo_; i <= hi_; ++i)
        if (!ranks_.count(i)) ranks_[i] = 0;

    for (const auto& [i, m] : diffs_) {
        if (i < lo_ || i >= hi_) throw std::invalid_argument("ZComplex: differential outside degree range");
        if (m.rows() != ranks_[i + 1] || m.cols() != ranks_[i])
            throw std::invalid_argument("ZComplex: differential shape mismatch");
    }

    // Canonical form: trim zero ranks at both ends, drop zero differentials.
    while (lo_ <= hi_ && ranks_[lo_] == 0) {
        ranks_.erase(lo_);
        diffs_.erase(lo_);
        ++lo_;
    }
    while (hi_ >= lo_ && ranks_[hi_] == 0) {
        ranks_.erase(hi_);
        diffs_.erase(hi_ - 1);
        --hi_;
    }
    if (lo_ > hi_) {
        lo_ = 0;
        hi_ = -1;
        ranks_.clear();
        diffs_.clear();
        return;
    }
    for (auto it = diffs_.begin(); it != diffs_.end();)
        it = it->second.is_zero() ? diffs_.erase(it) : std::next(it);

    for (int i = lo_; i + 1 < hi_; ++i)
        if (!(diff(i + 1) * diff(i)).is_zero())
            throw std::invalid_argument("ZComplex: d o d != 0");
}

ZComplex ZComplex::zero() { return ZComplex(0, -1, {}, {}); }

ZComplex ZComplex::concentrated(int degree, std::size_t rank) {
    if (rank == 0) return zero();
    return ZComplex(degree, degree, {{degree, rank}}, {});
}

ZComplex ZComplex::two_term(int degree, const Int& m) {
    IntMatrix d(1, 1);
    d.at(0, 0) = m;
    return ZComplex(degree, degree + 1, {{degree, 1}, {degree + 1, 1}}, {{degree, d}});
}

std::size_t ZComplex::rank(int i) const {
    auto it = ranks_.find(i);
    return it == ranks_.end() ? 0 : it->second;
}

IntMatrix ZComplex::diff(int i) const {
    auto it = diffs_.find(i);
    if (it != diffs_.end()) return it->second;
    return IntMatrix(rank(i + 1), rank(i));
}

bool ZComplex::operator==(const ZComplex& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && ranks_ == o.ranks_ && diffs_ == o.diffs_;
}

nlohmann::json ZComplex::to_json() const {
    nlohmann::json ranks = nlohmann::json::object();
    for (const auto& [i, r] : ranks_) ranks[std::to_string(i)] = r;
    nlohmann::json diffs = nlohmann::json::object();
    for (const auto& [i, m] : diffs_) diffs[std::to_string(i)] = matrix_to_json(m);
    return {{"degrees", {lo_, hi_}}, {"ranks", ranks}, {"diffs", diffs}};
}

ZComplex ZComplex::from_json(const nlohmann::json& j) {
    if (!j.contains("degrees") || !j["degrees"].is_array() || j["degrees"].size() != 2)
        throw std::invalid_argument("ZComplex: expected degrees [lo, hi]");
    int lo = j["degrees"][0].get<int>();
    int hi = j["degrees"][1].get<int>();
    std::map<int, std::size_t> ranks;
    if (j.contains("ranks"))
        for (const auto& [k, v] : j["ranks"].items()) ranks[std::stoi(k)] = v.get<std::size_t>();
    std::map<int, IntMatrix> diffs;
    if (j.contains("diffs"))
        for (const auto& [k, v] : j["diffs"].items()) diffs.emplace(std::stoi(k), matrix_from_json(v));
    return ZComplex(lo, hi, std::move(ranks), std::move(diffs));
}

namespace {

// Basis of ker(m) as columns, via the right transform of the SNF.
IntMatrix kernel_basis(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    const std::size_t r = s.rank();
    const std::size_t n = m.cols();
    IntMatrix k(n, n - r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = r; j < n; ++j) k.at(i, j - r) = s.v.at(i, j);
    return k;
}

// Solves k * x = b exactly, where the columns of k are a basis of a pure
// sublattice containing the column span of b.
IntMatrix solve_exact(const IntMatrix& k, const IntMatrix& b) {
    SmithResult s = smith_normal_form(k);
    IntMatrix y = s.u * b;
    const std::size_t kc = k.cols();
    IntMatrix z(kc, b.cols());
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            if (i < kc) {
                const Int& d = s.d.at(i, i);
                if (d == 0) {
                    if (y.at(i, j) != 0)
                        throw std::logic_error("solve_exact: inconsistent system");
                    continue;
                }
                if (y.at(i, j) % d != 0) throw std::logic_error("solve_exact: non-integral solution");
                z.at(i, j) = y.at(i, j) / d;
            } else if (y.at(i, j) != 0) {
                throw std::logic_error("solve_exact: image not contained in kernel");
            }
        }
    return s.v * z;
}

} // namespace

FinAbGroup cohomology(const ZComplex& c, int i) {
    if (i < c.lo() || i > c.hi()) return FinAbGroup();
    IntMatrix k = kernel_basis(c.diff(i));
    if (k.cols() == 0) return FinAbGroup();
    if (c.rank(i - 1) == 0) return FinAbGroup::free_of_rank(k.cols());
    IntMatrix x = solve_exact(k, c.diff(i - 1));
    SmithResult s = smith_normal_form(x);
    return FinAbGroup::from_diagonal(s.d.rows() > 0 && s.d.cols() > 0
                                         ? s.diagonal()
                                         : std::vector<Int>{},
                                     k.cols() - s.rank());
}

ZComplex derived_mod(const ZComplex& c, const Int& j) {
    if (j < 1)
        throw std::invalid_argument("derived_mod: j must be >= 1 (Z/0 is not a finite quotient)");
    if (c.lo() > c.hi()) return ZComplex::zero();
    // Mapping cone of j : C -> C, T^i = C^{i+1} (+) C^i, d(a,b) = (-da, ja + db).
    const int lo = c.lo() - 1, hi = c.hi();
    std::map<int, std::size_t> ranks;
    for (int i = lo; i <= hi; ++i) ranks[i] = c.rank(i + 1) + c.rank(i);
    std::map<int, IntMatrix> diffs;
    for (int i = lo; i < hi; ++i) {
        IntMatrix d(ranks[i + 1], ranks[i]);
        const IntMatrix da = c.diff(i + 1);
        const IntMatrix db = c.diff(i);
        const std::size_t a = c.rank(i + 1); // shifted summand width
        const std::size_t rt = c.rank(i + 2);
        for (std::size_t r = 0; r < da.rows(); ++r)
            for (std::size_t s = 0; s < da.cols(); ++s) d.at(r, s) = -da.at(r, s);
        for (std::size_t r = 0; r < a; ++r) d.at(rt + r, r) = j;
        for (std::size_t r = 0; r < db.rows(); ++r)
            for (std::size_t s = 0; s < db.cols(); ++s) d.at(rt + r, a + s) = db.at(r, s);
        diffs.emplace(i, std::move(d));
    }
    return ZComplex(lo, hi, std::move(ranks), std::move(diffs));
}

Rat euler_mult(const ZComplex& c) {
    Rat acc = 1;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        FinAbGroup h = cohomology(c, i);
        if (!h.is_finite())
            throw std::domain_error("euler_mult: cohomology is not torsion in degree " +
                                    std::to_string(i));
        if ((i % 2 + 2) % 2 == 0)
            acc *= h.order();
        else
            acc /= h.order();
    }
    return acc;
}

long euler_rank(const ZComplex& c) {
    long acc = 0;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        long r = static_cast<long>(c.rank(i));
        acc += ((i % 2 + 2) % 2 == 0) ? r : -r;
    }
    return acc;
}

ZComplex shift(const ZComplex& c, int k) {
    if (c.lo() > c.hi()) return ZComplex::zero();
    std::map<int, std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    const bool flip = ((k % 2) + 2) % 2 == 1;
    for (int i = c.lo(); i <= c.hi(); ++i) ranks[i - k] = c.rank(i);
    for (int i = c.lo(); i < c.hi(); ++i) {
        IntMatrix d = c.diff(i);
        if (flip)
            for (std::size_t r = 0; r < d.rows(); ++r) d.negate_row(r);
        diffs.emplace(i - k, std::move(d));
    }
    return ZComplex(c.lo() - k, c.hi() - k, std::move(ranks), std::move(diffs));
}

ZComplex direct_sum(const ZComplex& a, const ZComplex& b) {
    if (a.lo() > a.hi()) return b;
    if (b.lo() > b.hi()) return a;
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    std::map<int, std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    for (int i = lo; i <= hi; ++i) ranks[i] = a.rank(i) + b.rank(i);
    for (int i = lo; i < hi; ++i) {
        IntMatrix d(ranks[i + 1], ranks[i]);
        const IntMatrix da = a.diff(i);
        const IntMatrix db = b.diff(i);
        for (std::size_t r = 0; r < da.rows(); ++r)
            for (std::size_t s = 0; s < da.cols(); ++s) d.at(r, s) = da.at(r, s);
        for (std::size_t r = 0; r < db.rows(); ++r)
            for (std::size_t s = 0; s < db.cols(); ++s)
                d.at(da.rows() + r, da.cols() + s) = db.at(r, s);
        diffs.emplace(i, std::move(d));
    }
    return ZComplex(lo, hi, std::move(ranks), std::move(diffs));
}

MultAddReport euler_multadd_check(const ZComplex& c, const Int& j) {
    MultAddReport rep;
    rep.torsion_euler = euler_mult(derived_mod(c, j));
    rep.rank_euler = euler_rank(c);
    rep.predicted = rpow(Rat(j), rep.rank_euler);
    rep.equal = rep.torsion_euler == rep.predicted;
    return rep;
}

} // namespace homalg
