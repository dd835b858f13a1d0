#include "motfilt/fin_ab_group.hpp"

#include "motfilt/smith.hpp"

#include <stdexcept>

namespace homalg {

FinAbGroup FinAbGroup::from_diagonal(const std::vector<Int>& diag, std::size_t extra_free) {
    FinAbGroup g;
    g.free_rank_ = extra_free;
    for (const auto& d : diag) {
        Int a = abs(d);
        if (a == 0) {
            ++g.free_rank_;
        } else if (a > 1) {
            if (!g.factors_.empty() && a % g.factors_.back() != 0)
                throw std::invalid_argument("FinAbGroup: diagonal is not a divisibility chain");
            g.factors_.push_back(a);
        }
    }
    return g;
}

FinAbGroup FinAbGroup::free_of_rank(std::size_t r) {
    FinAbGroup g;
    g.free_rank_ = r;
    return g;
}

FinAbGroup FinAbGroup::cyclic(const Int& n) {
    if (n < 1) throw std::invalid_argument("FinAbGroup::cyclic: modulus must be >= 1");
    FinAbGroup g;
    if (n > 1) g.factors_.push_back(n);
    return g;
}

Int FinAbGroup::order() const {
    if (free_rank_ > 0) throw std::domain_error("FinAbGroup::order: group is infinite");
    Int n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& o) const {
    // Re-canonicalize the merged torsion via SNF of the diagonal presentation.
    std::vector<Int> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    IntMatrix pres(all.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) pres.at(i, i) = all[i];
    return from_diagonal(smith_normal_form(pres).diagonal(), free_rank_ + o.free_rank_);
}

std::string FinAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank_ == 1)
        s = "Z";
    else if (free_rank_ > 1)
        s = "Z^" + std::to_string(free_rank_);
    for (const auto& d : factors_) {
        if (!s.empty()) s += " x ";
        s += "Z/" + d.str();
    }
    return s;
}

} // namespace homalg
