#pragma once

// Smith normal form over Z.  For M (m x n) produces unimodular U (m x m),
// V (n x n) with U * M * V = D diagonal, D[k][k] >= 0 and D[k][k] | D[k+1][k+1].

#include "motfilt/int_matrix.hpp"

#include <vector>

namespace homalg {

struct SmithResult {
    IntMatrix u, d, v;

    // Nonzero diagonal entries of d, in chain order.
    std::vector<Int> diagonal() const;
    std::size_t rank() const { return diagonal().size(); }
};

SmithResult smith_normal_form(const IntMatrix& m);

} // namespace homalg
