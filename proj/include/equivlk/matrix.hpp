#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "equivlk/errors.hpp"

namespace equivlk {

// Dense row-major matrix over a commutative ring T (Rational, CycloNumber, ...).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1L);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& o) {
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == T()) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    T trace() const {
        T t{};
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

// Coefficients c_0..c_d of det(X - A), c_d = 1 (Faddeev-LeVerrier; T must
// support division by small integers).
template <class T>
std::vector<T> characteristic_polynomial(const Matrix<T>& a) {
    const size_t d = a.rows();
    std::vector<T> c(d + 1);
    c[d] = T(1L);
    Matrix<T> m(d, d);
    for (size_t k = 1; k <= d; ++k) {
        Matrix<T> next = a * m;
        for (size_t i = 0; i < d; ++i) next(i, i) += c[d - k + 1];
        m = std::move(next);
        T tr = (a * m).trace();
        c[d - k] = -tr / T(static_cast<long>(k));
    }
    return c;
}

// Evaluates sum_j poly[j] A^j.
template <class T>
Matrix<T> evaluate_polynomial(const std::vector<T>& poly, const Matrix<T>& a) {
    const size_t d = a.rows();
    Matrix<T> acc(d, d);
    for (size_t j = poly.size(); j-- > 0;) {
        acc = acc * a;
        for (size_t i = 0; i < d; ++i) acc(i, i) += poly[j];
    }
    return acc;
}

// Row-reduces over a field; returns indices of rows of `rows` that are
// linearly independent (greedy, in order).
template <class T>
std::vector<size_t> independent_rows(const std::vector<std::vector<T>>& rows) {
    std::vector<std::vector<T>> echelon;
    std::vector<size_t> leads;
    std::vector<size_t> picked;
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<T> v = rows[r];
        for (size_t e = 0; e < echelon.size(); ++e) {
            const size_t lead = leads[e];
            if (v[lead] == T()) continue;
            T f = v[lead] / echelon[e][lead];
            for (size_t j = lead; j < v.size(); ++j) v[j] -= f * echelon[e][j];
        }
        size_t lead = 0;
        while (lead < v.size() && v[lead] == T()) ++lead;
        if (lead == v.size()) continue;
        echelon.push_back(std::move(v));
        leads.push_back(lead);
        picked.push_back(r);
    }
    return picked;
}

template <class T>
size_t rank(const std::vector<std::vector<T>>& rows) {
    return independent_rows(rows).size();
}

// Solves A x = b for square invertible A over a field.
template <class T>
std::vector<T> solve(Matrix<T> a, std::vector<T> b) {
    const size_t n = a.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a(piv, col) == T()) ++piv;
        if (piv == n) throw DivisionByZero("singular linear system");
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        T inv = T(1L) / a(col, col);
        for (size_t j = col; j < n; ++j) a(col, j) *= inv;
        b[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == T()) continue;
            T f = a(r, col);
            for (size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    return b;
}

template <class T>
T determinant(Matrix<T> a) {
    const size_t n = a.rows();
    T det(1L);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a(piv, col) == T()) ++piv;
        if (piv == n) return T();
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        T inv = T(1L) / a(col, col);
        for (size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == T()) continue;
            T f = a(r, col) * inv;
            for (size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

}  // namespace equivlk
