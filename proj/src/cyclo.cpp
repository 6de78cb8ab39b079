#include "equivlk/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>

#include "equivlk/errors.hpp"

namespace equivlk {

namespace {

long canonical_conductor(long n) {
    if (n % 4 == 2) n /= 2;
    return n;
}

// Per-conductor reduction data: red[j] = x^j mod Phi_n for 0 <= j < n.
struct Tables {
    long n = 1;
    long phi = 1;
    std::vector<long> poly;
    std::vector<std::vector<long>> red;
};

std::vector<long> poly_divexact(const std::vector<long>& a, const std::vector<long>& b) {
    // b monic. Returns a / b exactly.
    std::vector<long> rem = a;
    size_t db = b.size() - 1;
    if (rem.size() < b.size()) return {0};
    std::vector<long> q(rem.size() - db, 0);
    for (size_t i = rem.size(); i-- > db;) {
        long c = rem[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    return q;
}

std::vector<long> compute_cyclotomic(long n) {
    // x^n - 1 divided by Phi_d for all proper divisors d.
    std::vector<long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divexact(p, cyclotomic_polynomial(d));
    return p;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

const Tables& tables(long n) {
    static std::map<long, std::unique_ptr<Tables>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto t = std::make_unique<Tables>();
    t->n = n;
    t->poly = cyclotomic_polynomial(n);
    t->phi = static_cast<long>(t->poly.size()) - 1;
    const size_t phi = static_cast<size_t>(t->phi);
    t->red.assign(static_cast<size_t>(n), std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    if (phi == 0) throw InternalError("degenerate cyclotomic polynomial");
    for (long j = 0; j < n; ++j) {
        t->red[static_cast<size_t>(j)] = cur;
        // multiply by x and reduce
        long top = cur[phi - 1];
        for (size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (size_t i = 0; i < phi; ++i) cur[i] -= top * t->poly[i];
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = cache.emplace(n, std::move(t));
    return *it->second;
}

// Reduces sum_k c[k] x^k (any length) modulo x^n - 1 and Phi_n.
std::vector<Rational> reduce_power_sum(long n, const std::vector<Rational>& c) {
    const Tables& t = tables(n);
    std::vector<Rational> out(static_cast<size_t>(t.phi));
    for (size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        const auto& r = t.red[k % static_cast<size_t>(n)];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0) out[i] += c[k] * r[i];
    }
    return out;
}

// Lifted coefficients of an element of Q(zeta_d) into Q(zeta_n), d | n.
std::vector<Rational> lift(long d, const std::vector<Rational>& c, long n) {
    if (d == n) return c;
    const long step = n / d;
    std::vector<Rational> big(static_cast<size_t>(n));
    for (size_t k = 0; k < c.size(); ++k) big[k * static_cast<size_t>(step)] = c[k];
    return reduce_power_sum(n, big);
}

// Solver for writing an element of Q(zeta_n) in the basis of the subfield Q(zeta_d).
struct SubfieldSolver {
    std::vector<size_t> pivots;           // phi(d) rows of the lifted basis
    std::vector<std::vector<Rational>> inv;  // inverse of the pivot submatrix
};

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) throw InternalError("singular subfield basis");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = 1 / a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

const SubfieldSolver& subfield_solver(long n, long d) {
    static std::map<std::pair<long, long>, std::unique_ptr<SubfieldSolver>> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({n, d});
        if (it != cache.end()) return *it->second;
    }
    const long phin = tables(n).phi;
    const long phid = tables(d).phi;
    // columns: lifted basis vectors zeta_d^k
    std::vector<std::vector<Rational>> cols;
    for (long k = 0; k < phid; ++k) {
        std::vector<Rational> e(static_cast<size_t>(phid));
        e[static_cast<size_t>(k)] = 1;
        cols.push_back(lift(d, e, n));
    }
    // pick pivot rows greedily via elimination on the transposed system
    auto solver = std::make_unique<SubfieldSolver>();
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(phin), std::vector<Rational>(static_cast<size_t>(phid)));
    for (long i = 0; i < phin; ++i)
        for (long k = 0; k < phid; ++k) rows[static_cast<size_t>(i)][static_cast<size_t>(k)] = cols[static_cast<size_t>(k)][static_cast<size_t>(i)];
    std::vector<std::vector<Rational>> echelon;
    for (size_t i = 0; i < rows.size() && static_cast<long>(solver->pivots.size()) < phid; ++i) {
        std::vector<Rational> r = rows[i];
        for (const auto& e : echelon) {
            size_t lead = 0;
            while (sgn(e[lead]) == 0) ++lead;
            if (sgn(r[lead]) != 0) {
                Rational f = r[lead] / e[lead];
                for (size_t j = 0; j < r.size(); ++j) r[j] -= f * e[j];
            }
        }
        bool nonzero = false;
        for (const auto& x : r) nonzero = nonzero || sgn(x) != 0;
        if (nonzero) {
            echelon.push_back(r);
            solver->pivots.push_back(i);
        }
    }
    std::vector<std::vector<Rational>> sq;
    for (size_t i : solver->pivots) sq.push_back(rows[i]);
    solver->inv = invert(sq);
    std::lock_guard<std::mutex> lock(m);
    auto [it, inserted] = cache.emplace(std::make_pair(n, d), std::move(solver));
    return *it->second;
}

std::optional<std::vector<Rational>> try_descend(long n, const std::vector<Rational>& c, long d) {
    const SubfieldSolver& s = subfield_solver(n, d);
    const size_t phid = s.pivots.size();
    std::vector<Rational> y(phid);
    for (size_t k = 0; k < phid; ++k)
        for (size_t j = 0; j < phid; ++j)
            if (sgn(s.inv[k][j]) != 0) y[k] += s.inv[k][j] * c[s.pivots[j]];
    if (lift(d, y, n) != c) return std::nullopt;
    return y;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<long>> cache;
    static std::recursive_mutex m;
    std::lock_guard<std::recursive_mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw PreconditionError("cyclotomic polynomial index must be positive");
    std::vector<long> p = (n == 1) ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
    return cache.emplace(n, std::move(p)).first->second;
}

CycloNumber::CycloNumber() : n_(1), c_(1) {}

CycloNumber::CycloNumber(long value) : n_(1), c_{Rational(value)} {}

CycloNumber::CycloNumber(const Rational& value) : n_(1), c_{value} {}

CycloNumber::CycloNumber(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

CycloNumber CycloNumber::root_of_unity(long k, long n) {
    if (n < 1) throw PreconditionError("root of unity order must be positive");
    k = mod_floor(k, n);
    long g = gcd_long(k, n);
    if (k == 0) return CycloNumber(1L);
    k /= g;
    n /= g;
    std::vector<Rational> c(static_cast<size_t>(n));
    c[static_cast<size_t>(k)] = 1;
    return from_power_sum(n, c);
}

CycloNumber CycloNumber::from_power_sum(long n, const std::vector<Rational>& c) {
    if (n < 1) throw PreconditionError("conductor must be positive");
    if (n % 4 == 2) {
        // zeta_{2m}^k = (-1)^k zeta_m^{k (m+1)/2}
        const long m = n / 2;
        std::vector<Rational> d(static_cast<size_t>(m));
        for (size_t k = 0; k < c.size(); ++k) {
            if (sgn(c[k]) == 0) continue;
            long kk = static_cast<long>(k);
            long e = m == 1 ? 0 : mod_floor(kk * ((m + 1) / 2), m);
            if (kk % 2 == 0)
                d[static_cast<size_t>(e)] += c[k];
            else
                d[static_cast<size_t>(e)] -= c[k];
        }
        return from_power_sum(m, d);
    }
    CycloNumber x(n, reduce_power_sum(n, c));
    x.normalize();
    return x;
}

CycloNumber CycloNumber::from_basis(long n, std::vector<Rational> c) {
    if (static_cast<long>(c.size()) != euler_phi(n)) throw PreconditionError("coefficient count must equal phi(n)");
    if (n % 4 == 2) {
        std::vector<Rational> full(c.begin(), c.end());
        return from_power_sum(n, full);
    }
    CycloNumber x(n, std::move(c));
    x.normalize();
    return x;
}

void CycloNumber::normalize() {
    bool rational = true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) {
            rational = false;
            break;
        }
    if (rational) {
        c_.resize(1);
        n_ = 1;
        return;
    }
    // Q(zeta_a) cap Q(zeta_b) = Q(zeta_gcd), so greedy prime stripping finds the minimum.
    bool moved = true;
    while (moved && n_ > 1) {
        moved = false;
        for (long p : prime_divisors(n_)) {
            long d = canonical_conductor(n_ / p);
            if (d == n_) continue;
            if (auto y = try_descend(n_, c_, d)) {
                n_ = d;
                c_ = std::move(*y);
                moved = true;
                break;
            }
        }
    }
}

std::vector<Rational> CycloNumber::coeffs_in(long m) const {
    m = canonical_conductor(m);
    if (m % n_ != 0) throw PreconditionError("target field does not contain this element");
    return lift(n_, c_, m);
}

bool CycloNumber::is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }

bool CycloNumber::is_one() const { return n_ == 1 && c_[0] == 1; }

Rational CycloNumber::to_rational() const {
    if (n_ != 1) throw PreconditionError("cyclotomic value is not rational: " + to_string());
    return c_[0];
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    if (n_ == 1 && o.n_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    long m = lcm_long(n_, o.n_);
    std::vector<Rational> a = lift(n_, c_, m);
    std::vector<Rational> b = lift(o.n_, o.c_, m);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    n_ = m;
    c_ = std::move(a);
    normalize();
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
    if (o.n_ == 1) {
        for (auto& x : c_) x *= o.c_[0];
        if (sgn(o.c_[0]) == 0) {
            n_ = 1;
            c_.assign(1, Rational(0));
        }
        return *this;
    }
    if (n_ == 1) {
        Rational s = c_[0];
        *this = o;
        for (auto& x : c_) x *= s;
        if (sgn(s) == 0) {
            n_ = 1;
            c_.assign(1, Rational(0));
        }
        return *this;
    }
    long m = lcm_long(n_, o.n_);
    std::vector<Rational> a = lift(n_, c_, m);
    std::vector<Rational> b = lift(o.n_, o.c_, m);
    std::vector<Rational> prod(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
    }
    n_ = m;
    c_ = reduce_power_sum(m, prod);
    normalize();
    return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

CycloNumber CycloNumber::operator-() const {
    CycloNumber r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
    if (n_ == 1) return CycloNumber(Rational(1) / c_[0]);
    // Solve (multiplication-by-x matrix) y = 1.
    const size_t phi = c_.size();
    std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
    for (size_t k = 0; k < phi; ++k) {
        std::vector<Rational> shifted(phi + k);
        for (size_t i = 0; i < phi; ++i) shifted[i + k] = c_[i];
        std::vector<Rational> col = reduce_power_sum(n_, shifted);
        for (size_t i = 0; i < phi; ++i) a[i][k] = col[i];
    }
    a[0][phi] = 1;
    for (size_t col = 0; col < phi; ++col) {
        size_t piv = col;
        while (piv < phi && sgn(a[piv][col]) == 0) ++piv;
        if (piv == phi) throw InternalError("singular multiplication matrix for nonzero cyclotomic");
        std::swap(a[piv], a[col]);
        Rational s = 1 / a[col][col];
        for (auto& x : a[col]) x *= s;
        for (size_t r = 0; r < phi; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col];
            for (size_t j = col; j <= phi; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<Rational> y(phi);
    for (size_t i = 0; i < phi; ++i) y[i] = a[i][phi];
    CycloNumber r(n_, std::move(y));
    r.normalize();
    return r;
}

CycloNumber CycloNumber::galois_conjugate(long t) const {
    if (n_ != 1 && gcd_long(mod_floor(t, n_), n_) != 1)
        throw PreconditionError("Galois exponent " + std::to_string(t) + " not coprime to conductor " + std::to_string(n_));
    if (n_ == 1) return *this;
    std::vector<Rational> big(static_cast<size_t>(n_));
    for (size_t k = 0; k < c_.size(); ++k)
        big[static_cast<size_t>(mod_floor(static_cast<long>(k) * t, n_))] += c_[k];
    return CycloNumber(n_, reduce_power_sum(n_, big));
}

std::string CycloNumber::to_string() const {
    if (n_ == 1) return equivlk::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        if (!first) os << (sgn(c_[k]) > 0 ? " + " : " - ");
        else if (sgn(c_[k]) < 0) os << "-";
        Rational a = abs(c_[k]);
        if (k == 0)
            os << equivlk::to_string(a);
        else {
            if (a != 1) os << equivlk::to_string(a) << "*";
            os << "z" << n_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

CycloNumber galois_conjugate(const CycloNumber& x, long t, long n) {
    if (n < 1 || gcd_long(mod_floor(t, n), n) != 1)
        throw PreconditionError("Galois exponent " + std::to_string(t) + " not coprime to " + std::to_string(n));
    if (n % x.conductor() != 0 && canonical_conductor(n) % x.conductor() != 0)
        throw PreconditionError("element does not lie in Q(zeta_" + std::to_string(n) + ")");
    return x.galois_conjugate(t);
}

BigComplex embed_complex(const CycloNumber& x, long bits) {
    const long work = bits + 16;
    const long n = x.conductor();
    BigComplex acc(work);
    BigFloat two_pi = BigFloat::pi(work) * BigFloat(2L, work);
    for (size_t k = 0; k < x.coeffs().size(); ++k) {
        const Rational& c = x.coeffs()[k];
        if (sgn(c) == 0) continue;
        BigFloat theta = two_pi * BigFloat(static_cast<long>(k), work) / BigFloat(n, work);
        acc += unit_circle(theta) * BigFloat(c, work);
    }
    return BigComplex(BigFloat(acc.re), BigFloat(acc.im));
}

}  // namespace equivlk
