#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stagger {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Dense row-major matrix over Q. Sizes in this library stay small (a few
/// hundred at most), so dense elimination is adequate.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVector column(std::size_t c) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(QMatrix m);

/// Basis of the right nullspace. Each basis vector is scaled so that its
/// first nonzero entry equals 1, which keeps outputs canonical.
std::vector<QVector> nullspace(QMatrix m);

/// Some x with m * x = b, or nullopt when the system is inconsistent.
std::optional<QVector> solve(QMatrix m, const QVector& b);

/// Incrementally maintained row-echelon basis of a subspace of Q^dim.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    /// Adds v when it is independent of the current span; returns whether it was.
    bool insert(const QVector& v);
    bool contains(const QVector& v) const;
    std::size_t dimension() const noexcept { return rows_.size(); }

private:
    QVector reduce(QVector v) const;

    std::size_t dim_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace stagger
