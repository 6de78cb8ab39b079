#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "equivlk/bigfloat.hpp"
#include "equivlk/cyclo.hpp"
#include "equivlk/errors.hpp"
#include "equivlk/group.hpp"
#include "equivlk/padic.hpp"
#include "equivlk/rational.hpp"

namespace equivlk {

// Exact-zero tests used to skip work in products.
inline bool ring_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const CycloNumber& x) { return x.is_zero(); }
inline bool ring_is_zero(const PAdic& x) { return x.is_exact_zero(); }
inline bool ring_is_zero(const BigComplex& x) { return x.is_zero(); }

// Element sum_g c_g g of R[G]; coefficients indexed by group element.
template <class R>
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(GroupPtr g) : group_(std::move(g)), c_(static_cast<size_t>(group_->order())) {}
    GroupRingElement(GroupPtr g, std::vector<R> coeffs) : group_(std::move(g)), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<size_t>(group_->order())) throw PreconditionError("group ring element has wrong length");
    }
    static GroupRingElement scalar(GroupPtr g, const R& s) {
        GroupRingElement e(g);
        e.c_[static_cast<size_t>(e.group_->identity())] = s;
        return e;
    }
    static GroupRingElement basis(GroupPtr g, int x, const R& s = R(1L)) {
        GroupRingElement e(std::move(g));
        e.c_.at(static_cast<size_t>(x)) = s;
        return e;
    }

    const GroupPtr& group() const { return group_; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](int g) const { return c_[static_cast<size_t>(g)]; }
    R& operator[](int g) { return c_[static_cast<size_t>(g)]; }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!ring_is_zero(x)) return false;
        return true;
    }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    GroupRingElement& operator*=(const R& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(GroupRingElement a, const R& s) { return a *= s; }
    friend GroupRingElement operator*(const R& s, GroupRingElement a) {
        for (auto& x : a.c_) x = s * x;
        return a;
    }
    GroupRingElement operator-() const {
        GroupRingElement r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        a.check(b);
        const FiniteGroup& g = *a.group_;
        GroupRingElement r(a.group_);
        for (int x = 0; x < g.order(); ++x) {
            const R& ax = a.c_[static_cast<size_t>(x)];
            if (ring_is_zero(ax)) continue;
            for (int y = 0; y < g.order(); ++y) {
                const R& by = b.c_[static_cast<size_t>(y)];
                if (ring_is_zero(by)) continue;
                r.c_[static_cast<size_t>(g.mul(x, y))] += ax * by;
            }
        }
        return r;
    }
    GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.c_ == b.c_; }
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

    // The anti-involution g -> g^-1.
    GroupRingElement sharp() const {
        GroupRingElement r(group_);
        for (int x = 0; x < group_->order(); ++x) r.c_[static_cast<size_t>(group_->inv(x))] = c_[static_cast<size_t>(x)];
        return r;
    }

    template <class S, class F>
    GroupRingElement<S> map(F&& f) const {
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(f(x));
        return GroupRingElement<S>(group_, std::move(out));
    }

private:
    void check(const GroupRingElement& o) const {
        if (group_ != o.group_ && (group_ == nullptr || o.group_ == nullptr || group_->order() != o.group_->order()))
            throw PreconditionError("group ring elements over different groups");
    }

    GroupPtr group_;
    std::vector<R> c_;
};

// Rectangular matrix over R[G], row-major.
template <class R>
class GroupRingMatrix {
public:
    using Element = GroupRingElement<R>;

    GroupRingMatrix() = default;
    GroupRingMatrix(GroupPtr g, size_t rows, size_t cols) : group_(g), rows_(rows), cols_(cols), e_(rows * cols, Element(g)) {}
    static GroupRingMatrix identity(GroupPtr g, size_t n) {
        GroupRingMatrix m(g, n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Element::scalar(g, R(1L));
        return m;
    }

    const GroupPtr& group() const { return group_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    Element& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Element& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    GroupRingMatrix& operator+=(const GroupRingMatrix& o) {
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    GroupRingMatrix& operator-=(const GroupRingMatrix& o) {
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend GroupRingMatrix operator+(GroupRingMatrix a, const GroupRingMatrix& b) { return a += b; }
    friend GroupRingMatrix operator-(GroupRingMatrix a, const GroupRingMatrix& b) { return a -= b; }
    friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("group ring matrix dimension mismatch");
        GroupRingMatrix r(a.group_, a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    // Left multiplication of every entry by x.
    friend GroupRingMatrix operator*(const Element& x, GroupRingMatrix m) {
        for (auto& e : m.e_) e = x * e;
        return m;
    }
    friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const GroupRingMatrix& a, const GroupRingMatrix& b) { return !(a == b); }

    GroupRingMatrix transpose() const {
        GroupRingMatrix r(group_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    // Transpose with sharp applied entrywise; an anti-automorphism of M_n(R[G]).
    GroupRingMatrix sharp_transpose() const {
        GroupRingMatrix r(group_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).sharp();
        return r;
    }
    // Submatrix on the given rows (all columns).
    GroupRingMatrix select_rows(const std::vector<size_t>& idx) const {
        GroupRingMatrix r(group_, idx.size(), cols_);
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
        return r;
    }

    template <class S, class F>
    GroupRingMatrix<S> map(F&& f) const {
        GroupRingMatrix<S> r(group_, rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).template map<S>(f);
        return r;
    }

private:
    GroupPtr group_;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Element> e_;
};

using QGElement = GroupRingElement<Rational>;
using CGElement = GroupRingElement<CycloNumber>;
using QGMatrix = GroupRingMatrix<Rational>;
using CGMatrix = GroupRingMatrix<CycloNumber>;

inline CGElement to_cyclo(const QGElement& x) {
    return x.map<CycloNumber>([](const Rational& q) { return CycloNumber(q); });
}
inline CGMatrix to_cyclo(const QGMatrix& m) {
    return m.map<CycloNumber>([](const Rational& q) { return CycloNumber(q); });
}
// Throws PreconditionError when some coefficient is irrational.
inline QGElement to_rational(const CGElement& x) {
    return x.map<Rational>([](const CycloNumber& c) { return c.to_rational(); });
}
inline QGMatrix to_rational(const CGMatrix& m) {
    return m.map<Rational>([](const CycloNumber& c) { return c.to_rational(); });
}
inline bool is_rational(const CGElement& x) {
    for (const auto& c : x.coeffs())
        if (!c.is_rational()) return false;
    return true;
}
inline bool is_rational(const CGMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!is_rational(m(i, j))) return false;
    return true;
}

}  // namespace equivlk
