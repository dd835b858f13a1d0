#pragma once

// Top layer: homotopy of THH over Z and over monogenic number rings,
// symbolic graded pieces of the bifiltration, the archimedean and
// finite-field correcting factors, and the fiber-sequence verifier.

#include "motfilt/derham.hpp"
#include "motfilt/hodge.hpp"
#include "motfilt/number_ring.hpp"

#include <map>
#include <optional>
#include <string>

namespace motfilt {

using homalg::FinAbGroup;
using homalg::Int;
using homalg::Rat;
using numring::NumberRing;

// pi_i THH(Z): Z at i = 0, Z/n at i = 2n-1 > 0, trivial otherwise.
FinAbGroup thh_z_homotopy(long i);

struct ThhGroup {
    FinAbGroup group;
    std::optional<Int> order; // set when the group is finite
};

// pi_i THH(O): free of rank deg(f) at i = 0; the lattice quotient
// O/(j f'(t)) of order |disc| * j^deg at i = 2j-1; trivial at even i > 0.
ThhGroup thh_of_homotopy(const NumberRing& r, long i);

enum class Theory { THH, TP, TCminus, TCplus };

std::string theory_name(Theory t);
Theory theory_from_name(const std::string& name);

enum class PieceKind { ExteriorPower, DeRhamCompleted, DeRhamCompletedTrunc, DeRhamTruncated };

struct GradedPiece {
    Theory theory;
    long n = 0, j = 0;
    int epsilon = 0;    // min(1, j)
    PieceKind kind;
    long sub_index = 0; // n - j where the kind carries one
    long shift = 0;     // homological shift: n+j-eps for THH, 2n-eps otherwise
    std::string expression;
};

// Symbolic descriptor of the weight-j piece of the n-th graded layer.
GradedPiece graded_piece(Theory theory, long n, long j);

// Homotopy groups (degree -> group) of the THH piece over a number ring,
// via the Koszul complex and derived reduction mod j.  Empty when the piece
// vanishes.
std::map<long, FinAbGroup> evaluate_thh_piece(const NumberRing& r, long n, long j);

// prod_{i<n, j} ((n-1-i)!)^{(-1)^{i+j} h^{ij}}; context must be the generic
// fiber.  Always a positive rational.
Rat c_infinity(const HodgeDiamond& h, long n);

// sum_{i<=n, j} (-1)^{i+j} (n-i) h^{ij}; 0 for n <= 0; finite-field context.
long milne_exponent(const HodgeDiamond& h, long n);

struct CinfReport {
    Rat product_side;
    Rat closed_form;
    bool equal = false;
};

// Machine check that the layer-by-layer product of the fiber-sequence
// contributions equals 1/c_infinity: prod_{j=1}^{n-1} j^{-lomega_rank(H,n-j)}.
CinfReport verify_cinf_fiber_seq(const HodgeDiamond& h, long n);

} // namespace motfilt
