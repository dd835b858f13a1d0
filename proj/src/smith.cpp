#include "motfilt/smith.hpp"

#include <cassert>

namespace homalg {

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> out;
    const std::size_t n = d.rows() < d.cols() ? d.rows() : d.cols();
    for (std::size_t k = 0; k < n; ++k)
        if (d.at(k, k) != 0) out.push_back(d.at(k, k));
    return out;
}

namespace {

// Smallest nonzero entry (by absolute value) of d in the submatrix with
// corner (k, k); false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = k; i < d.rows(); ++i)
        for (std::size_t j = k; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& d = r.d;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;
    const std::size_t steps = m.rows() < m.cols() ? m.rows() : m.cols();

    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pi, pj;
        if (!find_pivot(d, k, pi, pj)) break;

        // Each retry strictly shrinks |pivot|, so this loop terminates.
        for (bool stable = false; !stable;) {
            find_pivot(d, k, pi, pj);
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                if (d.at(i, k) == 0) continue;
                Int q = d.at(i, k) / d.at(k, k); // truncated division, remainder < |pivot|
                d.add_row_multiple(i, k, -q);
                u.add_row_multiple(i, k, -q);
                if (d.at(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                if (d.at(k, j) == 0) continue;
                Int q = d.at(k, j) / d.at(k, k);
                d.add_col_multiple(j, k, -q);
                v.add_col_multiple(j, k, -q);
                if (d.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the submatrix; fold a bad row in
            // and go around again (the reduction step will shrink the pivot).
            stable = true;
            for (std::size_t i = k + 1; i < d.rows() && stable; ++i)
                for (std::size_t j = k + 1; j < d.cols() && stable; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        d.add_row_multiple(k, i, 1);
                        u.add_row_multiple(k, i, 1);
                        stable = false;
                    }
        }

        if (d.at(k, k) < 0) {
            d.negate_row(k);
            u.negate_row(k);
        }
    }

    assert(u * m * v == d);
    return r;
}

} // namespace homalg
