#pragma once

// The acceptance suite: every headline identity the library is responsible
// for, run end to end with pinned expected values and per-criterion time
// budgets.  Shared by the acceptance test binary and the CLI selftest.

#include "motfilt/numbers.hpp"
#include "motfilt/zcomplex.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace selftest {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eed5eedULL;

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    long budget_ms = 0;
    double elapsed_ms = 0;
    std::vector<std::string> failures; // first few, for diagnostics
};

// Runs the criteria whose id contains `only` (all when empty), in order.
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed,
                                     const std::string& only = "");

// Random strictly perfect three-degree complex with small entries; used by
// the Euler-characteristic criterion and reusable from property tests.
homalg::ZComplex random_perfect_complex(std::mt19937_64& rng);

} // namespace selftest
