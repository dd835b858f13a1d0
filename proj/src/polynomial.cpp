#include "motfilt/polynomial.hpp"

#include "motfilt/int_matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace numring {

using homalg::IntMatrix;

long poly_degree(const IntPoly& f) {
    for (std::size_t i = f.size(); i > 0; --i)
        if (f[i - 1] != 0) return static_cast<long>(i - 1);
    return -1;
}

IntPoly poly_trim(IntPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

IntPoly poly_derivative(const IntPoly& f) {
    IntPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(Int(i) * f[i]);
    return poly_trim(std::move(d));
}

Int poly_eval(const IntPoly& f, const Int& x) {
    Int acc = 0;
    for (std::size_t i = f.size(); i > 0; --i) acc = acc * x + f[i - 1];
    return acc;
}

IntPoly poly_mul(const IntPoly& f, const IntPoly& g) {
    if (f.empty() || g.empty()) return {};
    IntPoly h(f.size() + g.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
    }
    return poly_trim(std::move(h));
}

IntPoly poly_rem_monic(IntPoly f, const IntPoly& g) {
    const long dg = poly_degree(g);
    if (dg < 0 || g[dg] != 1) throw std::invalid_argument("poly_rem_monic: divisor must be monic");
    f = poly_trim(std::move(f));
    while (poly_degree(f) >= dg) {
        const long df = poly_degree(f);
        Int c = f[df];
        for (long i = 0; i <= dg; ++i) f[df - dg + i] -= c * g[i];
        f = poly_trim(std::move(f));
    }
    return f;
}

Int resultant(const IntPoly& fin, const IntPoly& gin) {
    IntPoly f = poly_trim(fin), g = poly_trim(gin);
    const long d = poly_degree(f), e = poly_degree(g);
    if (d < 0 || e < 0) throw std::invalid_argument("resultant: zero polynomial");
    if (d == 0 && e == 0) return 1;
    IntMatrix s(d + e, d + e);
    for (long i = 0; i < e; ++i)
        for (long k = 0; k <= d; ++k) s.at(i, i + k) = f[d - k];
    for (long i = 0; i < d; ++i)
        for (long k = 0; k <= e; ++k) s.at(e + i, i + k) = g[e - k];
    return s.det();
}

std::vector<Int> positive_divisors(const Int& n) {
    if (n == 0) throw std::invalid_argument("positive_divisors: zero");
    Int a = abs(n);
    std::vector<Int> lo, hi;
    for (Int d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            lo.push_back(d);
            if (d * d != a) hi.push_back(a / d);
        }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

namespace {

bool has_integer_root(const IntPoly& f) {
    // Rational root theorem for monic f: any rational root is an integer
    // dividing the constant term.
    if (f[0] == 0) return true;
    for (const Int& d : positive_divisors(f[0])) {
        if (poly_eval(f, d) == 0) return true;
        if (poly_eval(f, -d) == 0) return true;
    }
    return false;
}

bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

// Monic quartic splits as (x^2+ax+b)(x^2+cx+e) with integer coefficients?
bool quartic_splits_quadratic(const IntPoly& f) {
    const Int &f3 = f[3], &f2 = f[2], &f1 = f[1], &f0 = f[0];
    std::vector<Int> bs;
    for (const Int& d : positive_divisors(f0)) {
        bs.push_back(d);
        bs.push_back(-d);
    }
    for (const Int& b : bs) {
        Int e = f0 / b;
        Int disc = f3 * f3 - 4 * (f2 - b - e);
        Int s;
        if (!is_perfect_square(disc, s)) continue;
        for (int sign : {1, -1}) {
            Int twice_a = f3 + sign * s;
            if (twice_a % 2 != 0) continue;
            Int a = twice_a / 2, c = f3 - a;
            if (a * e + b * c == f1) return true;
        }
    }
    return false;
}

// --- factor degree analysis modulo small primes (degree >= 5 path) ---

using FpPoly = std::vector<long>; // coefficients in [0, p)

FpPoly fp_reduce(const IntPoly& f, long p) {
    FpPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = static_cast<long>(((f[i] % p) + p) % p);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

long fp_deg(const FpPoly& f) { return static_cast<long>(f.size()) - 1; }

// Divides f by monic g in F_p[x]; returns remainder, quotient in qout.
FpPoly fp_divmod(FpPoly f, const FpPoly& g, long p, FpPoly& qout) {
    qout.assign(f.size(), 0);
    while (fp_deg(f) >= fp_deg(g)) {
        long shift = fp_deg(f) - fp_deg(g);
        long c = f.back();
        qout[shift] = c;
        for (long i = 0; i <= fp_deg(g); ++i)
            f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    while (!qout.empty() && qout.back() == 0) qout.pop_back();
    return f;
}

// Multiset of irreducible factor degrees of monic f in F_p[x], by trial
// division with monic polynomials of increasing degree.
std::vector<long> fp_factor_degrees(FpPoly f, long p) {
    std::vector<long> degrees;
    long k = 1;
    while (fp_deg(f) > 0) {
        if (2 * k > fp_deg(f)) {
            degrees.push_back(fp_deg(f));
            break;
        }
        // Enumerate monic degree-k polynomials by odometer.
        std::vector<long> c(k, 0);
        bool advanced = true;
        bool found = false;
        while (advanced) {
            FpPoly g(c.begin(), c.end());
            g.push_back(1);
            FpPoly q;
            FpPoly r = fp_divmod(f, g, p, q);
            if (r.empty()) {
                degrees.push_back(k);
                f = q;
                found = true;
                break;
            }
            advanced = false;
            for (long i = 0; i < k; ++i) {
                if (++c[i] < p) {
                    advanced = true;
                    break;
                }
                c[i] = 0;
            }
        }
        if (!found) ++k;
    }
    return degrees;
}

std::set<long> proper_subset_sums(const std::vector<long>& degs, long total) {
    std::set<long> sums{0};
    for (long d : degs) {
        std::set<long> next = sums;
        for (long s : sums) next.insert(s + d);
        sums = next;
    }
    sums.erase(0);
    sums.erase(total);
    return sums;
}

} // namespace

Irreducibility irreducible_over_z(const IntPoly& fin) {
    IntPoly f = poly_trim(fin);
    const long d = poly_degree(f);
    if (d < 1 || f[d] != 1)
        throw std::invalid_argument("irreducible_over_z: expected a monic polynomial of degree >= 1");
    if (d == 1) return Irreducibility::Irreducible;
    if (has_integer_root(f)) return Irreducibility::Reducible;
    if (d <= 3) return Irreducibility::Irreducible;
    if (d == 4)
        return quartic_splits_quadratic(f) ? Irreducibility::Reducible
                                           : Irreducibility::Irreducible;

    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::set<long> candidates;
    for (long k = 2; k <= d - 2; ++k) candidates.insert(k); // degree 1 ruled out above
    for (long p : primes) {
        FpPoly fp = fp_reduce(f, p);
        if (fp_deg(fp) != d) continue; // cannot happen for monic f; defensive
        std::vector<long> degs = fp_factor_degrees(fp, p);
        if (degs.size() == 1) return Irreducibility::Irreducible;
        std::set<long> sums = proper_subset_sums(degs, d);
        std::set<long> kept;
        std::set_intersection(candidates.begin(), candidates.end(), sums.begin(), sums.end(),
                              std::inserter(kept, kept.begin()));
        candidates = kept;
        if (candidates.empty()) return Irreducibility::Irreducible;
    }
    return Irreducibility::Unknown;
}

} // namespace numring
