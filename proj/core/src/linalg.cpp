#include "qpmut/linalg.hpp"

#include <algorithm>

#include "qpmut/errors.hpp"

namespace qpmut {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix sum shape mismatch");
    QMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix diff shape mismatch");
    QMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

QMatrix QMatrix::operator-() const {
    QMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
    QMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMatrix QMatrix::column(std::size_t j) const { return columns(j, j + 1); }

QMatrix QMatrix::columns(std::size_t j0, std::size_t j1) const {
    QMatrix r(rows_, j1 - j0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = j0; j < j1; ++j) r.at(i, j - j0) = at(i, j);
    return r;
}

QMatrix QMatrix::rows_slice(std::size_t i0, std::size_t i1) const {
    QMatrix r(i1 - i0, cols_);
    for (std::size_t i = i0; i < i1; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i - i0, j) = at(i, j);
    return r;
}

QMatrix hcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw dimension_error("hcat row mismatch");
    QMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

QMatrix vcat(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) throw dimension_error("vcat column mismatch");
    QMatrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        }
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

QMatrix kernel_basis(const QMatrix& m) {
    QMatrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMatrix k(m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::size_t fc = free_cols[f];
        k.at(fc, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) k.at(pivots[i], f) = -r.at(i, fc);
    }
    return k;
}

QMatrix image_basis(const QMatrix& m) {
    QMatrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    QMatrix b(m.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) b.at(i, j) = m.at(i, pivots[j]);
    return b;
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw dimension_error("solve shape mismatch");
    QMatrix aug = hcat(a, b);
    std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t p : pivots) {
        if (p >= a.cols()) return std::nullopt;
    }
    QMatrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, a.cols() + j);
    return x;
}

bool is_invertible(const QMatrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("inverse of non-square matrix");
    QMatrix aug = hcat(m, QMatrix::identity(m.rows()));
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != m.rows()) throw check_error("inverse of singular matrix");
    return aug.columns(m.cols(), 2 * m.cols());
}

QMatrix extend_to_square(const QMatrix& u) {
    const std::size_t n = u.rows();
    QMatrix t = u;
    std::size_t r = rank(t);
    if (r != u.cols()) throw check_error("extend_to_square: dependent input columns");
    for (std::size_t j = 0; j < n && t.cols() < n; ++j) {
        QMatrix e(n, 1);
        e.at(j, 0) = 1;
        QMatrix cand = hcat(t, e);
        if (rank(cand) > t.cols()) t = cand;
    }
    if (t.cols() != n) throw check_error("extend_to_square failed");
    return t;
}

}  // namespace qpmut
