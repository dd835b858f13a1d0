#include "motfilt/motfilt.hpp"

#include "motfilt/zcomplex.hpp"

#include <stdexcept>

namespace motfilt {

FinAbGroup thh_z_homotopy(long i) {
    if (i == 0) return FinAbGroup::free_of_rank(1);
    if (i > 0 && i % 2 == 1) return FinAbGroup::cyclic(Int((i + 1) / 2));
    return FinAbGroup();
}

ThhGroup thh_of_homotopy(const NumberRing& r, long i) {
    ThhGroup out;
    if (i == 0) {
        out.group = FinAbGroup::free_of_rank(r.degree());
        return out;
    }
    if (i > 0 && i % 2 == 1) {
        const Int j((i + 1) / 2);
        numring::RingElem gen = r.derivative_elem();
        for (auto& c : gen) c *= j;
        out.group = numring::quotient_group(r, {gen}, 0);
        out.order = out.group.order();
        return out;
    }
    out.order = Int(1);
    return out;
}

std::string theory_name(Theory t) {
    switch (t) {
        case Theory::THH: return "THH";
        case Theory::TP: return "TP";
        case Theory::TCminus: return "TCminus";
        case Theory::TCplus: return "TCplus";
    }
    throw std::logic_error("theory_name: bad enum");
}

Theory theory_from_name(const std::string& name) {
    if (name == "THH" || name == "thh") return Theory::THH;
    if (name == "TP" || name == "tp") return Theory::TP;
    if (name == "TCminus" || name == "tcminus" || name == "TC-" || name == "tc-")
        return Theory::TCminus;
    if (name == "TCplus" || name == "tcplus" || name == "TC+" || name == "tc+")
        return Theory::TCplus;
    throw std::invalid_argument("unknown theory '" + name + "'");
}

GradedPiece graded_piece(Theory theory, long n, long j) {
    if (j < 0) throw std::invalid_argument("graded_piece: j must be >= 0");
    GradedPiece p;
    p.theory = theory;
    p.n = n;
    p.j = j;
    p.epsilon = j >= 1 ? 1 : 0;
    const std::string modj = j >= 1 ? " (x) Z/" + std::to_string(j) : "";
    std::string body;
    switch (theory) {
        case Theory::THH:
            p.kind = PieceKind::ExteriorPower;
            p.sub_index = n - j;
            p.shift = n + j - p.epsilon;
            body = "LLambda^" + std::to_string(p.sub_index) + " L";
            break;
        case Theory::TP:
            p.kind = PieceKind::DeRhamCompleted;
            p.shift = 2 * n - p.epsilon;
            body = "LOmega^hat";
            break;
        case Theory::TCminus:
            p.kind = PieceKind::DeRhamCompletedTrunc;
            p.sub_index = n - j;
            p.shift = 2 * n - p.epsilon;
            body = "LOmega^hat^{>=" + std::to_string(p.sub_index) + "}";
            break;
        case Theory::TCplus:
            p.kind = PieceKind::DeRhamTruncated;
            p.sub_index = n - j;
            p.shift = 2 * n - p.epsilon;
            body = "LOmega^{<" + std::to_string(p.sub_index) + "}";
            break;
    }
    p.expression = body + modj + " [" + std::to_string(p.shift) + "]";
    return p;
}

std::map<long, FinAbGroup> evaluate_thh_piece(const NumberRing& r, long n, long j) {
    if (j < 0) throw std::invalid_argument("evaluate_thh_piece: j must be >= 0");
    std::map<long, FinAbGroup> out;
    const long i = n - j;
    if (i < 0) return out;
    homalg::ZComplex c = derham::lambda_power_complex(r, i);
    if (j >= 1) c = homalg::derived_mod(c, Int(j));
    const long s = n + j - (j >= 1 ? 1 : 0);
    for (int m = c.lo(); m <= c.hi(); ++m) {
        FinAbGroup g = homalg::cohomology(c, m);
        if (!g.is_trivial()) out.emplace(-static_cast<long>(m) + s, std::move(g));
    }
    return out;
}

Rat c_infinity(const HodgeDiamond& h, long n) {
    if (h.context() != DiamondContext::GenericFiberOverQ)
        throw std::invalid_argument("c_infinity: diamond must describe the generic fiber over Q");
    Rat acc = 1;
    const long imax = std::min(h.d(), n - 1);
    for (long i = 0; i <= imax; ++i) {
        const Rat base(homalg::factorial(n - 1 - i));
        for (long j = 0; j <= h.d(); ++j) {
            const long e = ((i + j) % 2 == 0 ? 1 : -1) * h.entry(i, j);
            acc *= homalg::rpow(base, e);
        }
    }
    return acc;
}

long milne_exponent(const HodgeDiamond& h, long n) {
    if (h.context() != DiamondContext::OverFq)
        throw std::invalid_argument("milne_exponent: diamond must be over a finite field");
    if (n <= 0) return 0;
    long acc = 0;
    const long imax = std::min(h.d(), n);
    for (long i = 0; i <= imax; ++i)
        for (long j = 0; j <= h.d(); ++j) {
            const long term = (n - i) * h.entry(i, j);
            acc += ((i + j) % 2 == 0) ? term : -term;
        }
    return acc;
}

CinfReport verify_cinf_fiber_seq(const HodgeDiamond& h, long n) {
    if (n < 0) throw std::invalid_argument("verify_cinf_fiber_seq: n must be >= 0");
    CinfReport rep;
    rep.product_side = 1;
    for (long j = 1; j <= n - 1; ++j)
        rep.product_side *= homalg::rpow(Rat(j), -derham::lomega_rank(h, n - j));
    rep.closed_form = Rat(1) / c_infinity(h, n);
    rep.equal = rep.product_side == rep.closed_form;
    return rep;
}

} // namespace motfilt
