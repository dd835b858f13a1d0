#pragma once

// Exact elements of Q[pi^{1/2}, pi^{-1/2}, log q, (log q)^{-1}]: a rational
// coefficient times pi^{half_pi_power/2} times (log q)^{logq_power}.

#include "motfilt/numbers.hpp"

#include <optional>
#include <string>

namespace zeta {

using homalg::Int;
using homalg::Rat;

struct SymbolicReal {
    Rat coeff = 0;
    long half_pi_power = 0;
    long logq_power = 0;

    SymbolicReal() = default;
    SymbolicReal(Rat c, long half_pi = 0, long logq = 0);

    SymbolicReal operator*(const SymbolicReal& o) const;
    bool operator==(const SymbolicReal& o) const = default;

    // Decimal rendering at the requested precision (>= 50 digits supported);
    // q is required whenever logq_power != 0.
    std::string to_decimal(unsigned digits, const std::optional<Int>& q = std::nullopt) const;
    double approx(const std::optional<Int>& q = std::nullopt) const;

    std::string to_string() const; // e.g. "3/2 * pi^{-1} * (log q)^{-1}"
};

struct GammaLeading {
    long order = 0; // 0 at regular points, -1 at the poles (even n <= 0)
    SymbolicReal value;
};

// Order and leading Taylor coefficient at s = n of pi^{-s/2} Gamma(s/2).
GammaLeading gamma_r_leading(long n);

} // namespace zeta
