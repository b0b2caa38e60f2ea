#include "toricgb/hnf.hpp"

#include <cstdlib>
#include <utility>

#include "toricgb/ints.hpp"

namespace toricgb {

IntMat hnf_rows(IntMat m) {
    if (m.empty()) return m;
    const int ncols = static_cast<int>(m[0].size());
    int pivot_row = 0;
    for (int col = 0; col < ncols && pivot_row < static_cast<int>(m.size()); ++col) {
        // Euclid on the column below pivot_row until one nonzero entry remains.
        while (true) {
            int best = -1;
            for (int r = pivot_row; r < static_cast<int>(m.size()); ++r) {
                if (m[r][col] != 0 && (best < 0 || std::llabs(m[r][col]) < std::llabs(m[best][col])))
                    best = r;
            }
            if (best < 0) break;
            std::swap(m[pivot_row], m[best]);
            bool done = true;
            for (int r = pivot_row + 1; r < static_cast<int>(m.size()); ++r) {
                if (m[r][col] == 0) continue;
                long long q = m[r][col] / m[pivot_row][col];
                for (int j = 0; j < ncols; ++j)
                    m[r][j] = checked_sub(m[r][j], checked_mul(q, m[pivot_row][j]));
                if (m[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (m[pivot_row][col] == 0) continue;
        if (m[pivot_row][col] < 0)
            for (int j = 0; j < ncols; ++j) m[pivot_row][j] = -m[pivot_row][j];
        // Reduce entries above the pivot into [0, pivot).
        for (int r = 0; r < pivot_row; ++r) {
            long long piv = m[pivot_row][col];
            long long q = m[r][col] / piv;
            if (m[r][col] % piv < 0) q -= 1;
            if (q == 0) continue;
            for (int j = 0; j < ncols; ++j)
                m[r][j] = checked_sub(m[r][j], checked_mul(q, m[pivot_row][j]));
        }
        ++pivot_row;
    }
    m.resize(pivot_row);
    return m;
}

bool in_row_span(const IntMat& hnf, std::vector<long long> p) {
    for (const auto& row : hnf) {
        int col = 0;
        while (col < static_cast<int>(row.size()) && row[col] == 0) ++col;
        if (col == static_cast<int>(row.size())) continue;
        if (p[col] % row[col] != 0) return false;
        long long q = p[col] / row[col];
        if (q != 0)
            for (int j = 0; j < static_cast<int>(row.size()); ++j)
                p[j] = checked_sub(p[j], checked_mul(q, row[j]));
    }
    for (long long v : p)
        if (v != 0) return false;
    return true;
}

IntMat kernel_basis(const IntMat& m) {
    if (m.empty()) return {};
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    IntMat a = m;
    // u tracks the unimodular column transform: a_current = m * u.
    IntMat u(cols, std::vector<long long>(cols, 0));
    for (int i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_axpy = [&](int dst, int src, long long q) {
        // column dst -= q * column src
        for (int r = 0; r < rows; ++r) a[r][dst] = checked_sub(a[r][dst], checked_mul(q, a[r][src]));
        for (int r = 0; r < cols; ++r) u[r][dst] = checked_sub(u[r][dst], checked_mul(q, u[r][src]));
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(u[r][i], u[r][j]);
    };

    int lead = 0;
    for (int row = 0; row < rows && lead < cols; ++row) {
        while (true) {
            int best = -1;
            for (int c = lead; c < cols; ++c)
                if (a[row][c] != 0 && (best < 0 || std::llabs(a[row][c]) < std::llabs(a[row][best])))
                    best = c;
            if (best < 0) break;
            col_swap(lead, best);
            bool done = true;
            for (int c = lead + 1; c < cols; ++c) {
                if (a[row][c] == 0) continue;
                col_axpy(c, lead, a[row][c] / a[row][lead]);
                if (a[row][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[row][lead] != 0) ++lead;
    }

    IntMat kernel;
    for (int c = lead; c < cols; ++c) {
        std::vector<long long> v(cols);
        for (int r = 0; r < cols; ++r) v[r] = u[r][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace toricgb
