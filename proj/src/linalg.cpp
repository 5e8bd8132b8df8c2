#include "sympcheck/linalg.hpp"

#include "sympcheck/error.hpp"

#include <utility>

namespace sympcheck::linalg {

namespace {

/// Row-reduces in place; returns pivot columns.
std::vector<int> row_reduce(RationalMatrix& m)
{
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && sgn(m[p][c]) == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r])
            x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0)
                continue;
            Rational f = m[i][c];
            for (int k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(RationalMatrix m)
{
    return static_cast<int>(row_reduce(m).size());
}

std::optional<RationalVector> left_kernel_vector(const RationalMatrix& m)
{
    const int rows = static_cast<int>(m.size());
    if (rows == 0)
        return std::nullopt;
    const int cols = static_cast<int>(m[0].size());
    // Kernel of the transpose.
    RationalMatrix t(cols, RationalVector(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            t[j][i] = m[i][j];
    auto pivots = row_reduce(t);
    if (static_cast<int>(pivots.size()) == rows)
        return std::nullopt;
    std::vector<bool> is_pivot(rows, false);
    for (int c : pivots)
        is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col])
        ++free_col;
    RationalVector v(rows);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = -t[r][free_col];
    return v;
}

Rational determinant(RationalMatrix m)
{
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && sgn(m[p][c]) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0)
                continue;
            Rational f = m[i][c] / m[c][c];
            for (int k = c; k < n; ++k)
                m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

Inertia inertia(RationalMatrix a)
{
    Inertia out;
    for (const auto& row : a)
        if (row.size() != a.size())
            throw Error(ErrorCode::InvalidArgument, "inertia needs a square matrix");

    while (!a.empty()) {
        const int n = static_cast<int>(a.size());
        int pivot = -1;
        for (int i = 0; i < n && pivot < 0; ++i)
            if (sgn(a[i][i]) != 0)
                pivot = i;
        if (pivot < 0) {
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (sgn(a[i][j]) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) {
                out.nullity += n;
                break;
            }
            // e_i <- e_i + e_j; new a_ii = 2 a_ij.
            for (int k = 0; k < n; ++k)
                a[pi][k] += a[pj][k];
            for (int k = 0; k < n; ++k)
                a[k][pi] += a[k][pj];
            pivot = pi;
        }

        const Rational d = a[pivot][pivot];
        (sgn(d) > 0 ? out.positive : out.negative) += 1;

        RationalMatrix next;
        next.reserve(n - 1);
        for (int i = 0; i < n; ++i) {
            if (i == pivot)
                continue;
            RationalVector row;
            row.reserve(n - 1);
            for (int j = 0; j < n; ++j) {
                if (j == pivot)
                    continue;
                row.push_back(a[i][j] - a[i][pivot] * a[pivot][j] / d);
            }
            next.push_back(std::move(row));
        }
        a = std::move(next);
    }
    return out;
}

}  // namespace sympcheck::linalg
