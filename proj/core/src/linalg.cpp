#include "stagger/linalg.hpp"

#include <utility>

namespace stagger {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

QVector QMatrix::column(std::size_t c) const {
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref(m).size();
}

std::vector<QVector> nullspace(QMatrix m) {
    const std::size_t n = m.cols();
    std::vector<QVector> basis;
    if (n == 0) return basis;
    std::vector<std::size_t> pivots = m.rows() ? rref(m) : std::vector<std::size_t>{};
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        QVector v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        for (auto& x : v) {
            if (sgn(x) != 0) {
                Rational s = 1 / x;
                for (auto& y : v) y *= s;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(QMatrix m, const QVector& b) {
    const std::size_t rows = m.rows(), cols = m.cols();
    QMatrix aug(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
        aug(r, cols) = b[r];
    }
    auto pivots = rref(aug);
    QVector x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;
        x[pivots[i]] = aug(i, cols);
    }
    return x;
}

QVector SpanBasis::reduce(QVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto p = pivots_[i];
        if (sgn(v[p]) == 0) continue;
        Rational f = v[p];
        for (std::size_t c = 0; c < dim_; ++c)
            if (sgn(rows_[i][c]) != 0) v[c] -= f * rows_[i][c];
    }
    return v;
}

bool SpanBasis::contains(const QVector& v) const {
    QVector r = reduce(v);
    for (const auto& x : r)
        if (sgn(x) != 0) return false;
    return true;
}

bool SpanBasis::insert(const QVector& v) {
    QVector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(r[p]) == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    // keep existing rows reduced at the new pivot
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        Rational f = row[p];
        for (std::size_t c = 0; c < dim_; ++c) row[c] -= f * r[c];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace stagger
