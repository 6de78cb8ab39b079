#include "equivlk/zmod.hpp"

#include <algorithm>
#include <utility>

#include "equivlk/errors.hpp"

namespace equivlk {

ZpN::ZpN(long p, long n) : p_(p), n_(n), mod_(1) {
    if (p < 2 || n < 1) throw PreconditionError("invalid modulus p^N");
    for (long i = 0; i < n; ++i) {
        if (mod_ > (int64_t{1} << 62) / p) throw BoundExceeded("p^N exceeds 2^62");
        mod_ *= p;
    }
}

int64_t ZpN::reduce(int64_t x) const {
    x %= mod_;
    return x < 0 ? x + mod_ : x;
}

int64_t ZpN::reduce(const Integer& x) const {
    Integer r = x % Integer(static_cast<long>(mod_));
    if (r < 0) r += static_cast<long>(mod_);
    return r.get_si();
}

int64_t ZpN::reduce(const Rational& q) const {
    if (mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(p_)))
        throw PreconditionError("rational " + to_string(q) + " is not p-integral for p = " + std::to_string(p_));
    int64_t num = reduce(Integer(q.get_num()));
    int64_t den = reduce(Integer(q.get_den()));
    return mul(num, inv(den));
}

int64_t ZpN::mul(int64_t a, int64_t b) const {
    __int128 r = static_cast<__int128>(a) * b % mod_;
    if (r < 0) r += mod_;
    return static_cast<int64_t>(r);
}

int64_t ZpN::pow_p(long k) const {
    if (k >= n_) return 0;
    int64_t r = 1;
    for (long i = 0; i < k; ++i) r *= p_;
    return r;
}

long ZpN::val(int64_t a) const {
    a = reduce(a);
    if (a == 0) return n_;
    long v = 0;
    while (a % p_ == 0) {
        a /= p_;
        ++v;
    }
    return v;
}

int64_t ZpN::inv(int64_t a) const {
    // extended Euclid on (a, mod)
    __int128 t = 0, newt = 1;
    __int128 r = mod_, newr = reduce(a);
    while (newr != 0) {
        __int128 q = r / newr;
        std::tie(t, newt) = std::make_pair(newt, t - q * newt);
        std::tie(r, newr) = std::make_pair(newr, r - q * newr);
    }
    if (r != 1) throw DivisionByZero("non-unit in Z/p^N");
    if (t < 0) t += mod_;
    return static_cast<int64_t>(t);
}

int64_t ZpN::unit_part(int64_t a) const {
    a = reduce(a);
    if (a == 0) return 1;
    while (a % p_ == 0) a /= p_;
    return a;
}

namespace {

ModMat identity_mat(size_t n) {
    ModMat m(n, ModVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// row_i -= f * row_j
void row_axpy(const ZpN& ring, ModVec& dst, const ModVec& src, int64_t f) {
    if (f == 0) return;
    for (size_t k = 0; k < dst.size(); ++k)
        if (src[k] != 0) dst[k] = ring.sub(dst[k], ring.mul(f, src[k]));
}

}  // namespace

SmithForm smith_form(const ZpN& ring, const ModMat& a_in, size_t cols) {
    const size_t rows = a_in.size();
    ModMat a = a_in;
    for (auto& r : a) {
        if (r.size() != cols) throw PreconditionError("ragged matrix");
        for (auto& x : r) x = ring.reduce(x);
    }
    SmithForm sf;
    sf.u = identity_mat(rows);
    sf.v = identity_mat(cols);
    sf.v_inv = identity_mat(cols);
    const size_t diag = std::min(rows, cols);
    for (size_t t = 0; t < diag; ++t) {
        // pivot of minimal valuation in the trailing block
        long best = ring.n();
        size_t bi = t, bj = t;
        for (size_t i = t; i < rows && best > 0; ++i)
            for (size_t j = t; j < cols; ++j) {
                long v = ring.val(a[i][j]);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (best == ring.n()) {
            for (size_t k = t; k < diag; ++k) sf.vals.push_back(ring.n());
            break;
        }
        std::swap(a[t], a[bi]);
        std::swap(sf.u[t], sf.u[bi]);
        if (bj != t) {
            for (auto& r : a) std::swap(r[t], r[bj]);
            for (auto& r : sf.v) std::swap(r[t], r[bj]);
            std::swap(sf.v_inv[t], sf.v_inv[bj]);
        }
        // scale pivot row to make the pivot exactly p^best
        int64_t uinv = ring.inv(ring.unit_part(a[t][t]));
        for (auto& x : a[t]) x = ring.mul(x, uinv);
        for (auto& x : sf.u[t]) x = ring.mul(x, uinv);
        const int64_t pk = ring.pow_p(best);
        // clear column below
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            int64_t f = a[i][t] / pk;  // exact: val(a[i][t]) >= best
            row_axpy(ring, a[i], a[t], f);
            row_axpy(ring, sf.u[i], sf.u[t], f);
        }
        // clear row to the right with column operations
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            int64_t f = a[t][j] / pk;
            for (size_t i = 0; i < rows; ++i)
                if (a[i][t] != 0) a[i][j] = ring.sub(a[i][j], ring.mul(f, a[i][t]));
            for (size_t i = 0; i < cols; ++i)
                if (sf.v[i][t] != 0) sf.v[i][j] = ring.sub(sf.v[i][j], ring.mul(f, sf.v[i][t]));
            // V^{-1} <- (I + f e_t e_j^T) V^{-1}
            for (size_t k = 0; k < cols; ++k)
                if (sf.v_inv[j][k] != 0) sf.v_inv[t][k] = ring.add(sf.v_inv[t][k], ring.mul(f, sf.v_inv[j][k]));
        }
        sf.vals.push_back(best);
    }
    return sf;
}

ModMat left_kernel(const ZpN& ring, const ModMat& b, size_t cols) {
    const size_t rows = b.size();
    SmithForm sf = smith_form(ring, b, cols);
    ModMat out;
    for (size_t i = 0; i < rows; ++i) {
        long v = i < sf.vals.size() ? sf.vals[i] : ring.n();
        int64_t scale = ring.pow_p(ring.n() - v);
        if (scale == 0) continue;
        ModVec g(rows);
        for (size_t k = 0; k < rows; ++k) g[k] = ring.mul(scale, sf.u[i][k]);
        out.push_back(std::move(g));
    }
    return out;
}

HowellSpan::HowellSpan(const ZpN& ring, size_t dim) : ring_(ring), dim_(dim) {}

bool HowellSpan::reduce(ModVec& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const size_t c = pivots_[r];
        if (v[c] == 0) continue;
        const int64_t piv = rows_[r][c];
        if (v[c] % piv != 0) return false;
        row_axpy(ring_, v, rows_[r], v[c] / piv);
    }
    return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

void HowellSpan::insert(ModVec v) {
    std::vector<ModVec> pending{std::move(v)};
    auto queue_saturation = [&](const ModVec& row, size_t lead) {
        long k = ring_.val(row[lead]);
        if (k == 0) return;
        ModVec s = row;
        int64_t f = ring_.pow_p(ring_.n() - k);
        for (auto& x : s) x = ring_.mul(x, f);
        pending.push_back(std::move(s));
    };
    auto normalize = [&](ModVec& w, size_t lead) {
        int64_t uinv = ring_.inv(ring_.unit_part(w[lead]));
        for (auto& x : w) x = ring_.mul(x, uinv);
    };
    while (!pending.empty()) {
        ModVec w = std::move(pending.back());
        pending.pop_back();
        for (auto& x : w) x = ring_.reduce(x);
        for (;;) {
            size_t lead = 0;
            while (lead < dim_ && w[lead] == 0) ++lead;
            if (lead == dim_) break;
            auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
            const size_t idx = static_cast<size_t>(pos - pivots_.begin());
            if (pos == pivots_.end() || *pos != lead) {
                normalize(w, lead);
                queue_saturation(w, lead);
                pivots_.insert(pos, lead);
                rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(w));
                break;
            }
            ModVec& row = rows_[idx];
            if (ring_.val(w[lead]) >= ring_.val(row[lead])) {
                row_axpy(ring_, w, row, w[lead] / row[lead]);
                continue;
            }
            // w has the better pivot: it takes the slot, the old row is reduced by it
            normalize(w, lead);
            std::swap(w, row);
            queue_saturation(row, lead);
            row_axpy(ring_, w, row, w[lead] / row[lead]);
        }
    }
}

void HowellSpan::add(ModVec v) {
    if (v.size() != dim_) throw PreconditionError("vector dimension mismatch");
    insert(std::move(v));
}

bool HowellSpan::contains(ModVec v) const {
    if (v.size() != dim_) throw PreconditionError("vector dimension mismatch");
    for (auto& x : v) x = ring_.reduce(x);
    return reduce(v);
}

bool HowellSpan::contains_all(const ModMat& rows) const {
    return std::all_of(rows.begin(), rows.end(), [this](const ModVec& r) { return contains(r); });
}

long HowellSpan::log_order() const {
    long total = 0;
    for (size_t r = 0; r < rows_.size(); ++r) total += ring_.n() - ring_.val(rows_[r][pivots_[r]]);
    return total;
}

std::vector<Integer> integer_smith_invariants(std::vector<std::vector<Integer>> a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    const size_t diag = std::min(rows, cols);
    std::vector<Integer> d;
    for (size_t t = 0; t < diag; ++t) {
        for (;;) {
            // smallest nonzero |entry| in trailing block
            size_t bi = rows, bj = cols;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) {
                for (size_t k = t; k < diag; ++k) d.push_back(0);
                return d;
            }
            std::swap(a[t], a[bi]);
            for (auto& r : a) std::swap(r[t], r[bj]);
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                if (q != 0)
                    for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                if (q != 0)
                    for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility condition with the trailing block
            bool divides = true;
            for (size_t i = t + 1; i < rows && divides; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                        for (size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        d.push_back(abs(a[t][t]));
    }
    return d;
}

}  // namespace equivlk
