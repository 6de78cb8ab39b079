#pragma once

#include <cstdint>
#include <vector>

#include "equivlk/rational.hpp"

namespace equivlk {

// Arithmetic in the chain ring Z/p^N with p^N < 2^62.
class ZpN {
public:
    ZpN(long p, long n);

    long p() const { return p_; }
    long n() const { return n_; }
    int64_t modulus() const { return mod_; }

    int64_t reduce(int64_t x) const;
    int64_t reduce(const Integer& x) const;
    // Image of a p-integral rational; throws PreconditionError otherwise.
    int64_t reduce(const Rational& q) const;
    int64_t add(int64_t a, int64_t b) const { return reduce(a + b); }
    int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
    int64_t mul(int64_t a, int64_t b) const;
    int64_t pow_p(long k) const;  // p^k mod p^N (0 once k >= N)
    // p-adic valuation in [0, N]; N means zero.
    long val(int64_t a) const;
    // Inverse of a unit.
    int64_t inv(int64_t a) const;
    // a = p^val(a) * unit(a); unit(0) = 1.
    int64_t unit_part(int64_t a) const;

private:
    long p_;
    long n_;
    int64_t mod_;
};

using ModVec = std::vector<int64_t>;
using ModMat = std::vector<ModVec>;  // list of rows

struct SmithForm {
    // U A V = D with U, V invertible over Z/p^N; D diagonal with entries p^{vals[i]}.
    std::vector<long> vals;  // length min(rows, cols); N means the diagonal entry is zero mod p^N
    ModMat u;
    ModMat v;
    ModMat v_inv;
};

SmithForm smith_form(const ZpN& ring, const ModMat& a, size_t cols);

// Kernel of the row-vector map c -> c * B (B has `cols` columns): generating rows.
ModMat left_kernel(const ZpN& ring, const ModMat& b, size_t cols);

// Z/p^N-submodule of (Z/p^N)^dim kept in Howell form, so that membership is
// decided by a single reduction pass.
class HowellSpan {
public:
    HowellSpan(const ZpN& ring, size_t dim);

    void add(ModVec v);
    void add_all(const ModMat& rows) {
        for (const auto& r : rows) add(r);
    }
    bool contains(ModVec v) const;
    bool contains_all(const ModMat& rows) const;
    // Size of the module as a power of p.
    long log_order() const;
    const ModMat& rows() const { return rows_; }
    size_t dim() const { return dim_; }

    friend bool operator==(const HowellSpan& a, const HowellSpan& b) {
        return a.contains_all(b.rows_) && b.contains_all(a.rows_);
    }

private:
    // reduces v against current rows; returns true if v became zero
    bool reduce(ModVec& v) const;
    void insert(ModVec v);

    ZpN ring_;
    size_t dim_;
    ModMat rows_;  // sorted by pivot column, pivot entries p^k
    std::vector<size_t> pivots_;
};

// Smith normal form invariant factors over Z (nonnegative, d_1 | d_2 | ...;
// zeros for rank deficiency), length min(rows, cols).
std::vector<Integer> integer_smith_invariants(std::vector<std::vector<Integer>> a);

}  // namespace equivlk
