#include "motfilt/symbolic_real.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <sstream>
#include <stdexcept>

namespace zeta {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<200>>;

Real rat_to_real(const Rat& x) { return Real(numerator(x)) / Real(denominator(x)); }

Real evaluate(const SymbolicReal& s, const std::optional<Int>& q) {
    Real v = rat_to_real(s.coeff);
    if (s.half_pi_power != 0) {
        Real pi = boost::math::constants::pi<Real>();
        v *= pow(pi, Real(s.half_pi_power) / 2);
    }
    if (s.logq_power != 0) {
        if (!q) throw std::invalid_argument("SymbolicReal: rendering needs q for log q powers");
        v *= pow(log(Real(*q)), s.logq_power);
    }
    return v;
}

} // namespace

SymbolicReal::SymbolicReal(Rat c, long half_pi, long logq)
    : coeff(std::move(c)), half_pi_power(half_pi), logq_power(logq) {
    if (coeff == 0) {
        half_pi_power = 0;
        logq_power = 0;
    }
}

SymbolicReal SymbolicReal::operator*(const SymbolicReal& o) const {
    return SymbolicReal(coeff * o.coeff, half_pi_power + o.half_pi_power,
                        logq_power + o.logq_power);
}

std::string SymbolicReal::to_decimal(unsigned digits, const std::optional<Int>& q) const {
    if (digits > 190) throw std::invalid_argument("SymbolicReal: precision capped at 190 digits");
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits)) << evaluate(*this, q);
    return os.str();
}

double SymbolicReal::approx(const std::optional<Int>& q) const {
    return static_cast<double>(evaluate(*this, q));
}

std::string SymbolicReal::to_string() const {
    if (coeff == 0) return "0";
    std::string s = homalg::rat_str(coeff);
    if (half_pi_power != 0) {
        s += " * pi^";
        if (half_pi_power % 2 == 0)
            s += "{" + std::to_string(half_pi_power / 2) + "}";
        else
            s += "{" + std::to_string(half_pi_power) + "/2}";
    }
    if (logq_power != 0) s += " * (log q)^{" + std::to_string(logq_power) + "}";
    return s;
}

GammaLeading gamma_r_leading(long n) {
    GammaLeading out;
    if (n % 2 == 0 && n <= 0) {
        // Gamma(s/2) ~ 2 (-1)^k / (k! (s-n)) at s = n = -2k.
        const long k = -n / 2;
        out.order = -1;
        Rat c = Rat(2) / Rat(homalg::factorial(k));
        if (k % 2 == 1) c = -c;
        out.value = SymbolicReal(c, -n, 0);
        return out;
    }
    out.order = 0;
    if (n % 2 == 0) {
        // n = 2m >= 2: Gamma(m) = (m-1)!, no sqrt(pi) factor.
        out.value = SymbolicReal(Rat(homalg::factorial(n / 2 - 1)), -n, 0);
        return out;
    }
    // Odd n: Gamma(n/2) = r * sqrt(pi) by the recursion from Gamma(1/2).
    const long t = (n - 1) / 2; // n/2 = 1/2 + t
    Rat r = 1;
    if (t > 0)
        for (long i = 0; i < t; ++i) r *= Rat(2 * i + 1, 2); // * (1/2 + i)
    else
        for (long i = 1; i <= -t; ++i) r /= Rat(1 - 2 * i, 2); // / (1/2 - i)
    out.value = SymbolicReal(r, 1 - n, 0);
    return out;
}

} // namespace zeta
