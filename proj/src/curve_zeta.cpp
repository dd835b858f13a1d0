#include "motfilt/curve_zeta.hpp"

#include "motfilt/json_util.hpp"
#include "motfilt/motfilt.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace zeta {

using homalg::Int;
using homalg::Rat;

namespace {

// Reciprocal roots of P are the roots of x^{2g} P(1/x); all must have
// absolute value sqrt(q).  Durand-Kerner iteration, degree <= 2g is small.
bool weil_bound_holds(const IntPoly& p, const Int& q) {
    const std::size_t deg = p.size() - 1;
    if (deg == 0) return true;
    std::vector<std::complex<double>> c(deg + 1); // monic, highest first is c[0]
    for (std::size_t i = 0; i <= deg; ++i) c[i] = static_cast<double>(p[i]);
    // roots of sum_i p[i] x^{deg-i} (coefficients reversed, monic since p[0]=1)
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (std::size_t i = 0; i <= deg; ++i) acc = acc * x + c[i];
        return acc;
    };
    const double target = std::sqrt(static_cast<double>(q));
    std::vector<std::complex<double>> r(deg);
    std::complex<double> u(0.4, 0.9);
    u /= std::abs(u);
    std::complex<double> rot = u;
    for (auto& x : r) {
        x = (1.17 * target + 0.5) * rot;
        rot *= u;
    }
    for (int it = 0; it < 1000; ++it) {
        double moved = 0;
        for (std::size_t i = 0; i < deg; ++i) {
            std::complex<double> den = 1;
            for (std::size_t k = 0; k < deg; ++k)
                if (k != i) den *= (r[i] - r[k]);
            std::complex<double> step = eval(r[i]) / den;
            r[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14) break;
    }
    for (const auto& x : r)
        if (std::abs(std::abs(x) - target) > 1e-6 * std::max(1.0, target)) return false;
    return true;
}

} // namespace

CurveZeta CurveZeta::validated(Int q, IntPoly p) {
    Int pr;
    unsigned k;
    if (!homalg::is_prime_power(q, pr, k))
        throw std::invalid_argument("CurveZeta: q must be a prime power");
    p = numring::poly_trim(std::move(p));
    if (p.empty() || p[0] != 1) throw std::invalid_argument("CurveZeta: numerator must have P(0) = 1");
    const long deg = numring::poly_degree(p);
    if (deg % 2 != 0) throw std::invalid_argument("CurveZeta: numerator degree must be even");
    CurveZeta z;
    z.q_ = std::move(q);
    z.g_ = deg / 2;
    z.p_ = std::move(p);
    if (!z.functional_equation_holds())
        throw std::invalid_argument("CurveZeta: functional equation fails (inconsistent input)");
    if (!weil_bound_holds(z.p_, z.q_))
        throw std::invalid_argument("CurveZeta: reciprocal roots are not on |x| = sqrt(q)");
    return z;
}

bool CurveZeta::functional_equation_holds() const {
    // P(t) = q^g t^{2g} P(1/(qt))  <=>  a_{2g-i} = q^{g-i} a_i for i <= g.
    for (long i = 0; i <= g_; ++i) {
        const Int lhs = p_[static_cast<std::size_t>(2 * g_ - i)];
        const Int rhs = homalg::ipow(q_, static_cast<unsigned long>(g_ - i)) *
                        p_[static_cast<std::size_t>(i)];
        if (lhs != rhs) return false;
    }
    return true;
}

CurveZeta CurveZeta::from_counts(const Int& q, const std::vector<Int>& counts) {
    const long g = static_cast<long>(counts.size());
    // log Z = sum_m N_m t^m / m; stripping the denominator leaves
    // log P = sum_m (N_m - 1 - q^m) t^m / m, and k a_k = sum b_m a_{k-m}.
    std::vector<Rat> a(static_cast<std::size_t>(g) + 1, Rat(0));
    a[0] = 1;
    std::vector<Int> b(static_cast<std::size_t>(g) + 1);
    for (long m = 1; m <= g; ++m)
        b[m] = counts[m - 1] - 1 - homalg::ipow(q, static_cast<unsigned long>(m));
    for (long k = 1; k <= g; ++k) {
        Rat acc = 0;
        for (long m = 1; m <= k; ++m) acc += Rat(b[m]) * a[k - m];
        a[k] = acc / k;
    }
    IntPoly p(static_cast<std::size_t>(2 * g) + 1, Int(0));
    for (long k = 0; k <= g; ++k) {
        if (denominator(a[k]) != 1)
            throw std::invalid_argument("CurveZeta: counts give a non-integral numerator");
        p[k] = numerator(a[k]);
    }
    for (long i = g + 1; i <= 2 * g; ++i)
        p[i] = homalg::ipow(q, static_cast<unsigned long>(i - g)) * p[2 * g - i];
    CurveZeta z = validated(q, std::move(p));
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& n : counts) cj.push_back(homalg::int_to_json(n));
    z.source_ = {{"q", homalg::int_to_json(q)}, {"counts", cj}};
    return z;
}

CurveZeta CurveZeta::from_a_coeffs(const Int& q, const std::vector<Int>& a) {
    const long g = static_cast<long>(a.size());
    IntPoly p(static_cast<std::size_t>(2 * g) + 1, Int(0));
    p[0] = 1;
    for (long i = 1; i <= g; ++i) p[i] = a[i - 1];
    for (long i = g + 1; i <= 2 * g; ++i)
        p[i] = homalg::ipow(q, static_cast<unsigned long>(i - g)) * p[2 * g - i];
    CurveZeta z = validated(q, std::move(p));
    nlohmann::json aj = nlohmann::json::array();
    for (const auto& c : a) aj.push_back(homalg::int_to_json(c));
    z.source_ = {{"q", homalg::int_to_json(q)}, {"a_coeffs", aj}};
    return z;
}

CurveZeta CurveZeta::from_weierstrass(const Int& q, const Int& a, const Int& b) {
    Int n1 = count_weierstrass_points(q, a, b);
    CurveZeta z = from_counts(q, {n1});
    z.source_ = {{"q", homalg::int_to_json(q)},
                 {"model", {{"a", homalg::int_to_json(a)}, {"b", homalg::int_to_json(b)}}}};
    return z;
}

Rat CurveZeta::numerator_at(const Rat& t) const {
    Rat acc = 0;
    for (std::size_t i = p_.size(); i > 0; --i) acc = acc * t + Rat(p_[i - 1]);
    return acc;
}

CurveZeta CurveZeta::from_json(const nlohmann::json& j) {
    // Serialized form: rebuild from the echoed construction input.
    if (j.contains("source")) return from_json(j.at("source"));
    if (!j.contains("q")) throw std::invalid_argument("curve: missing q");
    Int q = homalg::int_from_json(j["q"]);
    if (j.contains("model")) {
        const auto& m = j["model"];
        if (!m.contains("a") || !m.contains("b"))
            throw std::invalid_argument("curve: model needs a and b");
        return from_weierstrass(q, homalg::int_from_json(m["a"]), homalg::int_from_json(m["b"]));
    }
    if (j.contains("counts")) {
        std::vector<Int> counts;
        for (const auto& c : j["counts"]) counts.push_back(homalg::int_from_json(c));
        return from_counts(q, counts);
    }
    if (j.contains("a_coeffs")) {
        std::vector<Int> a;
        for (const auto& c : j["a_coeffs"]) a.push_back(homalg::int_from_json(c));
        return from_a_coeffs(q, a);
    }
    throw std::invalid_argument("curve: expected one of counts, a_coeffs, model");
}

nlohmann::json CurveZeta::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p_) coeffs.push_back(homalg::int_to_json(c));
    return {{"q", homalg::int_to_json(q_)},
            {"genus", g_},
            {"p_coeffs", coeffs},
            {"source", source_}};
}

namespace {

// F_q = F_p[x]/(m) arithmetic on digit vectors, naive but exact.
struct FqField {
    long p;
    unsigned k;
    std::vector<long> modulus; // monic, coefficients in [0,p), size k+1

    std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> c(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        }
        for (long d = static_cast<long>(c.size()) - 1; d >= static_cast<long>(k); --d) {
            long coef = c[d];
            if (coef == 0) continue;
            c[d] = 0;
            for (unsigned i = 0; i < k; ++i)
                c[d - k + i] = ((c[d - k + i] - coef * modulus[i]) % p + p) % p;
        }
        c.resize(k);
        return c;
    }

    std::vector<long> add(std::vector<long> a, const std::vector<long>& b) const {
        for (unsigned i = 0; i < k; ++i) a[i] = (a[i] + b[i]) % p;
        return a;
    }

    std::vector<long> from_int(const Int& v) const {
        std::vector<long> e(k, 0);
        e[0] = static_cast<long>(((v % p) + p) % p);
        return e;
    }

    std::size_t index(const std::vector<long>& a) const {
        std::size_t idx = 0;
        for (unsigned i = k; i > 0; --i) idx = idx * p + a[i - 1];
        return idx;
    }

    // Enumerate all q elements in index order.
    std::vector<std::vector<long>> elements() const {
        std::size_t q = 1;
        for (unsigned i = 0; i < k; ++i) q *= p;
        std::vector<std::vector<long>> out;
        out.reserve(q);
        std::vector<long> cur(k, 0);
        for (std::size_t n = 0; n < q; ++n) {
            out.push_back(cur);
            for (unsigned i = 0; i < k; ++i) {
                if (++cur[i] < p) break;
                cur[i] = 0;
            }
        }
        return out;
    }
};

// Monic irreducible degree-k polynomial over F_p, by exhaustive search.
std::vector<long> find_irreducible(long p, unsigned k) {
    std::vector<long> c(k, 0);
    for (;;) {
        // Candidate m = x^k + sum c_i x^i; irreducible iff it has no monic
        // factor of degree <= k/2.
        std::vector<long> full(c.begin(), c.end());
        full.push_back(1);
        bool reducible = false;
        // Trial divide by all monic polynomials of degree 1..k/2.
        for (unsigned dg = 1; dg <= k / 2 && !reducible; ++dg) {
            std::vector<long> t(dg, 0);
            for (;;) {
                std::vector<long> div(t.begin(), t.end());
                div.push_back(1);
                std::vector<long> rem = full;
                while (rem.size() >= div.size()) {
                    long lead = rem.back();
                    if (lead != 0) {
                        std::size_t shiftn = rem.size() - div.size();
                        for (std::size_t i = 0; i < div.size(); ++i)
                            rem[shiftn + i] = ((rem[shiftn + i] - lead * div[i]) % p + p) % p;
                    }
                    rem.pop_back();
                    while (!rem.empty() && rem.back() == 0) rem.pop_back();
                    if (rem.size() < div.size()) break;
                }
                if (rem.empty()) {
                    reducible = true;
                    break;
                }
                unsigned i = 0;
                for (; i < dg; ++i) {
                    if (++t[i] < p) break;
                    t[i] = 0;
                }
                if (i == dg) break;
            }
        }
        if (!reducible) {
            std::vector<long> m(c.begin(), c.end());
            m.push_back(1);
            return m;
        }
        unsigned i = 0;
        for (; i < k; ++i) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
        if (i == k) throw std::logic_error("find_irreducible: search exhausted");
    }
}

} // namespace

Int count_weierstrass_points(const Int& q, const Int& a, const Int& b) {
    Int p;
    unsigned k;
    if (!homalg::is_prime_power(q, p, k))
        throw std::invalid_argument("count_weierstrass_points: q must be a prime power");
    if (p < 5)
        throw std::invalid_argument("count_weierstrass_points: characteristic must be >= 5");
    if (q > 10000) throw std::invalid_argument("count_weierstrass_points: q is capped at 10^4");

    FqField f;
    f.p = static_cast<long>(p);
    f.k = k;
    f.modulus = k == 1 ? std::vector<long>{0, 1} : find_irreducible(f.p, k);

    const std::vector<long> ae = f.from_int(a), be = f.from_int(b);

    // Nonsingular: 4a^3 + 27b^2 != 0.
    std::vector<long> disc = f.add(f.mul(f.from_int(4), f.mul(ae, f.mul(ae, ae))),
                                   f.mul(f.from_int(27), f.mul(be, be)));
    bool zero = true;
    for (long c : disc)
        if (c != 0) zero = false;
    if (zero) throw std::invalid_argument("count_weierstrass_points: singular model");

    const auto elems = f.elements();
    std::vector<long> sq_count(elems.size(), 0);
    for (const auto& y : elems) ++sq_count[f.index(f.mul(y, y))];
    Int n = 1; // point at infinity
    for (const auto& x : elems) {
        std::vector<long> rhs = f.add(f.mul(x, f.mul(x, x)), f.add(f.mul(ae, x), be));
        n += sq_count[f.index(rhs)];
    }
    return n;
}

SpecialValue special_value(const CurveZeta& z, long n) {
    SpecialValue sv;
    const Rat t0 = homalg::rpow(Rat(z.q()), -n); // q^{-n}
    Rat num = z.numerator_at(t0);
    if (num == 0) throw std::logic_error("special_value: numerator vanishes at an integer point");
    Rat coeff = num;
    for (long a = 0; a <= 1; ++a) {
        if (a == n) {
            // (1 - q^{a-s}) ~ (s - a) log q: one pole order, one 1/log q.
            sv.order -= 1;
            sv.logq_power -= 1;
        } else {
            coeff /= (Rat(1) - homalg::rpow(Rat(z.q()), a - n));
        }
    }
    sv.coeff = coeff;
    return sv;
}

Conductor bloch_conductor_fq(const CurveZeta& z) {
    return Conductor{z.q(), 2 * z.genus() - 2};
}

FeReport verify_thm_fe(const CurveZeta& z, const HodgeDiamond& h, long n) {
    if (h.context() != motfilt::DiamondContext::OverFq)
        throw std::invalid_argument("verify_thm_fe: diamond must be over a finite field");
    if (h.d() != 1) throw std::invalid_argument("verify_thm_fe: curve case needs d = 1");
    if (h.q() != z.q()) throw std::invalid_argument("verify_thm_fe: diamond q differs from curve q");
    if (h.entry(0, 0) != 1 || h.entry(1, 1) != 1 || h.entry(0, 1) != z.genus() ||
        h.entry(1, 0) != z.genus())
        throw std::invalid_argument("verify_thm_fe: diamond does not match the curve genus");
    FeReport rep;
    const long d = 1;
    rep.lhs = 2 * (motfilt::milne_exponent(h, n) - motfilt::milne_exponent(h, d - n));
    rep.rhs = h.euler_ell() * (2 * n - d);
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

} // namespace zeta
