#include "crn/matrix.hpp"

#include <cstddef>

namespace crn {

QMatrix to_rational(const IMatrix& m) {
    QMatrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
    return out;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rational inv = 1 / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational factor = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

int rank(const IMatrix& m) { return rank(to_rational(m)); }

QMatrix left_nullspace_rref(const QMatrix& m) {
    if (m.empty()) return {};
    size_t rows = m.size(), cols = m[0].size();
    // Transpose, then the right kernel of M^T is the left kernel of M.
    QMatrix t(cols, std::vector<Rational>(rows));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    QMatrix r = t;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(rows, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    QMatrix basis;
    for (size_t free = 0; free < rows; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(rows, Rational(0));
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -r[k][free];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

Rational det(QMatrix m) {
    size_t n = m.size();
    Rational result = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            result = -result;
        }
        result *= m[col][col];
        Rational inv = 1 / m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rational factor = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
        }
    }
    return result;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    size_t n = m.size();
    QMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<size_t>(pivots.size()) != n || pivots.back() != static_cast<int>(n - 1))
        return std::nullopt;
    QMatrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Interval interval_det(const std::vector<std::vector<Interval>>& m) {
    size_t n = m.size();
    if (n == 0) return Interval(Rational(1));
    if (n == 1) return m[0][0];
    Interval acc;
    bool first = true;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Interval>> minor(n - 1, std::vector<Interval>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        Interval term = m[0][j] * interval_det(minor);
        if (j % 2 == 1) term = -term;
        acc = first ? term : acc + term;
        first = false;
    }
    return acc;
}

}  // namespace crn
