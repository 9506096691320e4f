#include "mahler/linear_solve.hpp"

#include <stdexcept>

namespace mahler {

LinearSolution solve_linear(std::vector<std::vector<Rational>> A,
                            std::vector<Rational> b) {
    const std::size_t rows = A.size();
    if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");
    const std::size_t cols = rows ? A[0].size() : 0;
    for (const auto& row : A)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    // Forward elimination. Invariant: rows not yet used as pivots are zero
    // in every processed column, so a column skipped here stays free.
    std::vector<long> pivot_row_of_col(cols, -1);
    std::vector<bool> row_used(rows, false);
    for (std::size_t col = 0; col < cols; ++col) {
        // Prefer the sparsest qualifying row to limit fill-in.
        long pivot = -1;
        std::size_t best_nnz = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_used[r] || A[r][col] == 0) continue;
            std::size_t nnz = 0;
            for (std::size_t cc = col; cc < cols; ++cc)
                if (A[r][cc] != 0) ++nnz;
            if (pivot < 0 || nnz < best_nnz) {
                pivot = static_cast<long>(r);
                best_nnz = nnz;
            }
        }
        if (pivot < 0) continue;
        const auto p = static_cast<std::size_t>(pivot);
        row_used[p] = true;
        pivot_row_of_col[col] = pivot;
        Rational inv = 1 / A[p][col];
        for (std::size_t cc = col; cc < cols; ++cc) A[p][cc] *= inv;
        b[p] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_used[r] || A[r][col] == 0) continue;
            Rational factor = A[r][col];
            for (std::size_t cc = col; cc < cols; ++cc) {
                if (A[p][cc] == 0) continue;
                A[r][cc] -= factor * A[p][cc];
            }
            b[r] -= factor * b[p];
        }
    }

    LinearSolution out;
    out.consistent = true;
    for (std::size_t r = 0; r < rows; ++r)
        if (!row_used[r] && b[r] != 0) {
            out.consistent = false;
            break;
        }

    // Back-substitution over pivot columns, highest first.
    auto back_substitute = [&](std::vector<Rational>& x, bool homogeneous) {
        for (std::size_t ci = cols; ci-- > 0;) {
            if (pivot_row_of_col[ci] < 0) continue;
            const auto p = static_cast<std::size_t>(pivot_row_of_col[ci]);
            Rational v = homogeneous ? Rational(0) : b[p];
            for (std::size_t cc = ci + 1; cc < cols; ++cc)
                if (A[p][cc] != 0 && x[cc] != 0) v -= A[p][cc] * x[cc];
            x[ci] = v;
        }
    };

    if (out.consistent) {
        out.particular.assign(cols, Rational(0));
        back_substitute(out.particular, /*homogeneous=*/false);
    }

    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        out.kernel.assign(cols, Rational(0));
        out.kernel[col] = 1;
        back_substitute(out.kernel, /*homogeneous=*/true);
        break;
    }
    return out;
}

}  // namespace mahler
