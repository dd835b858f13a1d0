#pragma once

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank (+) Z/d1 (+) ... (+) Z/dk with 2 <= d1 | d2 | ... | dk.

#include "motfilt/numbers.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homalg {

class FinAbGroup {
  public:
    FinAbGroup() = default;

    // Canonicalizes a diagonal: drops units, zeros count toward the free rank.
    // The nonzero entries must already form a divisibility chain.
    static FinAbGroup from_diagonal(const std::vector<Int>& diag, std::size_t extra_free = 0);
    static FinAbGroup free_of_rank(std::size_t r);
    static FinAbGroup cyclic(const Int& n); // n >= 1; Z/1 is trivial

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    // Product of the invariant factors; the group must be finite.
    Int order() const;

    FinAbGroup direct_sum(const FinAbGroup& o) const;

    bool operator==(const FinAbGroup& o) const = default;

    // "0", "Z", "Z^2", "Z/6", "Z x Z/2 x Z/4", ...
    std::string to_string() const;

  private:
    std::size_t free_rank_ = 0;
    std::vector<Int> factors_;
};

} // namespace homalg
