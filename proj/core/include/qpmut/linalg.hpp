#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qpmut/rational.hpp"

namespace qpmut {

// Dense exact rational matrix, row-major. Sized for desk-scale linear algebra
// (representation spaces of dimension at most a few dozen).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const QMatrix& o) const = default;

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator-() const;
    QMatrix operator*(const Rational& c) const;
    QMatrix transpose() const;

    QMatrix column(std::size_t j) const;
    // Columns [j0, j1).
    QMatrix columns(std::size_t j0, std::size_t j1) const;
    QMatrix rows_slice(std::size_t i0, std::size_t i1) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

QMatrix hcat(const QMatrix& a, const QMatrix& b);
QMatrix vcat(const QMatrix& a, const QMatrix& b);

// Row-reduces in place to reduced row-echelon form with first-nonzero-column
// pivoting; returns the pivot column indices.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Columns form a basis of the kernel {x : m x = 0}.
QMatrix kernel_basis(const QMatrix& m);

// Columns form a basis of the column space: the pivot columns of m, in order.
QMatrix image_basis(const QMatrix& m);

// Any X with a X = b, or nullopt if the system is inconsistent.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

// Throws check_error if singular.
QMatrix inverse(const QMatrix& m);

bool is_invertible(const QMatrix& m);

// Extends the independent columns of u to a basis of the ambient space by
// greedily appending standard basis vectors; returns the square matrix [u | c].
QMatrix extend_to_square(const QMatrix& u);

}  // namespace qpmut
