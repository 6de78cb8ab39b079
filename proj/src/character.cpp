#include "equivlk/character.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "equivlk/errors.hpp"
#include "equivlk/rational.hpp"

namespace equivlk {

namespace {

using i64 = int64_t;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>((static_cast<__int128>(a) * b) % p); }

i64 powmod(i64 a, i64 e, i64 p) {
    i64 r = 1;
    a %= p;
    if (a < 0) a += p;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
    }
    return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

i64 md(i64 a, i64 p) {
    a %= p;
    return a < 0 ? a + p : a;
}

// Column vectors spanning {x : A x = 0} for a d x d matrix mod p.
std::vector<std::vector<i64>> nullspace(std::vector<std::vector<i64>> a, i64 p) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<long> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const i64 inv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = mulmod(x, inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const i64 f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] = md(a[i][j] - mulmod(f, a[r][j], p), p);
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<i64>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<i64> x(cols, 0);
        x[free] = 1;
        for (size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) x[c] = md(-a[static_cast<size_t>(pivot_of_col[c])][free], p);
        basis.push_back(std::move(x));
    }
    return basis;
}

// Coordinates of the columns of A*B in the basis B (B: k x d, columns independent).
std::vector<std::vector<i64>> restrict_to(const std::vector<std::vector<i64>>& a, const std::vector<std::vector<i64>>& basis, i64 p) {
    const size_t k = a.size();
    const size_t d = basis.size();
    // Augmented system [B | A B] reduced by rows.
    std::vector<std::vector<i64>> aug(k, std::vector<i64>(2 * d, 0));
    for (size_t t = 0; t < d; ++t) {
        for (size_t i = 0; i < k; ++i) {
            aug[i][t] = basis[t][i];
            i64 s = 0;
            for (size_t j = 0; j < k; ++j) s = md(s + mulmod(a[i][j], basis[t][j], p), p);
            aug[i][d + t] = s;
        }
    }
    size_t r = 0;
    for (size_t c = 0; c < d; ++c) {
        size_t piv = r;
        while (piv < k && aug[piv][c] == 0) ++piv;
        if (piv == k) throw InternalError("restriction basis is degenerate");
        std::swap(aug[piv], aug[r]);
        const i64 inv = invmod(aug[r][c], p);
        for (auto& x : aug[r]) x = mulmod(x, inv, p);
        for (size_t i = 0; i < k; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            const i64 f = aug[i][c];
            for (size_t j = 0; j < 2 * d; ++j) aug[i][j] = md(aug[i][j] - mulmod(f, aug[r][j], p), p);
        }
        ++r;
    }
    std::vector<std::vector<i64>> res(d, std::vector<i64>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t t = 0; t < d; ++t) res[i][t] = aug[i][d + t];
    return res;
}

// Splits the invariant subspace `basis` into eigenspaces of A restricted to it.
std::vector<std::vector<std::vector<i64>>> eigenspaces(const std::vector<std::vector<i64>>& a, const std::vector<std::vector<i64>>& basis, i64 p) {
    const size_t d = basis.size();
    const size_t k = a.size();
    auto r = restrict_to(a, basis, p);
    std::vector<std::vector<std::vector<i64>>> out;
    size_t found = 0;
    for (i64 lambda = 0; lambda < p && found < d; ++lambda) {
        auto m = r;
        for (size_t i = 0; i < d; ++i) m[i][i] = md(m[i][i] - lambda, p);
        auto ns = nullspace(m, p);
        if (ns.empty()) continue;
        std::vector<std::vector<i64>> space;
        for (const auto& y : ns) {
            std::vector<i64> v(k, 0);
            for (size_t t = 0; t < d; ++t)
                for (size_t i = 0; i < k; ++i) v[i] = md(v[i] + mulmod(y[t], basis[t][i], p), p);
            space.push_back(std::move(v));
        }
        found += space.size();
        out.push_back(std::move(space));
    }
    if (found != d) throw InternalError("class algebra does not split modulo p");
    return out;
}

long next_prime_one_mod(long e, long lower) {
    for (long p = lower + 1;; ++p)
        if ((p - 1) % e == 0 && is_prime(p)) return p;
}

i64 primitive_root(i64 p) {
    const auto fac = prime_divisors(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : fac) ok = ok && powmod(g, (p - 1) / q, p) != 1;
        if (ok) return g;
    }
    throw InternalError("no primitive root");
}

std::string value_key(const Character& c) {
    std::string s;
    for (const auto& v : c.values) {
        s += std::to_string(v.conductor()) + ":";
        for (const auto& q : v.coeffs()) s += q.get_str() + ",";
        s += ";";
    }
    return s;
}

using Vec = std::vector<CycloNumber>;

Vec left_mul(const FiniteGroup& g, int x, const Vec& v) {
    Vec r(v.size());
    for (int h = 0; h < g.order(); ++h) r[static_cast<size_t>(g.mul(x, h))] = v[static_cast<size_t>(h)];
    return r;
}

Vec product(const FiniteGroup& g, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (int x = 0; x < g.order(); ++x) {
        if (a[static_cast<size_t>(x)].is_zero()) continue;
        for (int y = 0; y < g.order(); ++y) {
            if (b[static_cast<size_t>(y)].is_zero()) continue;
            r[static_cast<size_t>(g.mul(x, y))] += a[static_cast<size_t>(x)] * b[static_cast<size_t>(y)];
        }
    }
    return r;
}

std::vector<Vec> ideal_rows(const FiniteGroup& g, const Vec& v) {
    std::vector<Vec> rows;
    for (int x = 0; x < g.order(); ++x) rows.push_back(left_mul(g, x, v));
    return rows;
}

}  // namespace

size_t CharacterTable::index_of(const std::vector<CycloNumber>& values) const {
    for (size_t i = 0; i < chars.size(); ++i)
        if (chars[i].values == values) return i;
    throw InternalError("character not found in table");
}

size_t CharacterTable::contragredient(size_t chi) const {
    std::vector<CycloNumber> v;
    for (const auto& x : chars[chi].values) v.push_back(x.complex_conjugate());
    return index_of(v);
}

size_t CharacterTable::galois_twist(size_t chi, long t) const {
    if (gcd_long(t, classes.exponent) != 1) throw PreconditionError("twist must be coprime to the group exponent");
    std::vector<CycloNumber> v;
    for (const auto& x : chars[chi].values) v.push_back(galois_conjugate(x, t, classes.exponent));
    return index_of(v);
}

CharacterTable character_table(GroupPtr gp, long max_order) {
    const FiniteGroup& g = *gp;
    if (g.order() > max_order)
        throw BoundExceeded("character table requested for order " + std::to_string(g.order()) + " > " + std::to_string(max_order));
    CharacterTable t;
    t.group = gp;
    t.classes = conjugacy_classes(g);
    const auto& cl = t.classes;
    const size_t k = cl.classes.size();
    const long m = g.order();
    const long e = cl.exponent;
    const i64 p = next_prime_one_mod(e, std::max<long>(m, 4));

    // Class multiplication coefficients: M_i[j][l] = #{x in C_i : x^-1 g_l in C_j}.
    std::vector<std::vector<std::vector<i64>>> mats(k, std::vector<std::vector<i64>>(k, std::vector<i64>(k, 0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t l = 0; l < k; ++l)
            for (int x : cl.classes[i]) {
                const int y = g.mul(g.inv(x), cl.representative[l]);
                ++mats[i][static_cast<size_t>(cl.class_of[static_cast<size_t>(y)])][l];
            }

    std::vector<std::vector<i64>> full;
    for (size_t i = 0; i < k; ++i) {
        std::vector<i64> u(k, 0);
        u[i] = 1;
        full.push_back(u);
    }
    std::vector<std::vector<std::vector<i64>>> pending{full};
    std::vector<std::vector<i64>> omegas;
    std::mt19937_64 rng(0x5eed);
    while (!pending.empty()) {
        auto space = std::move(pending.back());
        pending.pop_back();
        if (space.size() == 1) {
            omegas.push_back(space[0]);
            continue;
        }
        bool split = false;
        for (int attempt = 0; attempt < 64 && !split; ++attempt) {
            std::vector<std::vector<i64>> a(k, std::vector<i64>(k, 0));
            for (size_t i = 0; i < k; ++i) {
                const i64 c = attempt < static_cast<int>(k) && attempt > 0 ? (i == static_cast<size_t>(attempt) ? 1 : 0)
                                                                            : static_cast<i64>(rng() % static_cast<uint64_t>(p));
                if (c == 0) continue;
                for (size_t r = 0; r < k; ++r)
                    for (size_t s = 0; s < k; ++s) a[r][s] = md(a[r][s] + mulmod(c, mats[i][r][s], p), p);
            }
            auto parts = eigenspaces(a, space, p);
            if (parts.size() > 1) {
                for (auto& part : parts) pending.push_back(std::move(part));
                split = true;
            }
        }
        if (!split) throw InternalError("could not separate class-algebra eigenspaces");
    }
    if (omegas.size() != k) throw InternalError("wrong number of characters");

    const i64 w = powmod(primitive_root(p), (p - 1) / e, p);
    for (auto& om : omegas) {
        const i64 inv0 = invmod(om[0], p);
        for (auto& x : om) x = mulmod(x, inv0, p);
        i64 s = 0;
        for (size_t j = 0; j < k; ++j) {
            const i64 sz = static_cast<i64>(cl.classes[j].size());
            s = md(s + mulmod(mulmod(om[j], om[static_cast<size_t>(cl.inverse_class[j])], p), invmod(sz, p), p), p);
        }
        const i64 d2 = mulmod(m % p, invmod(s, p), p);
        long deg = 0;
        for (long d = 1; d * d <= m; ++d)
            if (d * d % p == d2) deg = d;
        if (deg == 0) throw InternalError("character degree not recovered");
        std::vector<i64> chimod(k);
        for (size_t j = 0; j < k; ++j)
            chimod[j] = mulmod(mulmod(om[j], deg, p), invmod(static_cast<i64>(cl.classes[j].size()), p), p);
        Character chi;
        chi.degree = deg;
        for (size_t j = 0; j < k; ++j) {
            const int rep = cl.representative[j];
            const long o = g.element_order(rep);
            const i64 z = powmod(w, e / o, p);
            std::vector<Rational> mult(static_cast<size_t>(o));
            for (long kk = 0; kk < o; ++kk) {
                i64 acc = 0;
                int gl = g.identity();
                for (long l = 0; l < o; ++l) {
                    const i64 val = chimod[static_cast<size_t>(cl.class_of[static_cast<size_t>(gl)])];
                    acc = md(acc + mulmod(val, powmod(z, md(-kk * l, o), p), p), p);
                    gl = g.mul(gl, rep);
                }
                acc = mulmod(acc, invmod(o, p), p);
                if (acc > deg) throw InternalError("eigenvalue multiplicity out of range");
                mult[static_cast<size_t>(kk)] = Rational(acc);
            }
            chi.values.push_back(CycloNumber::from_power_sum(o, mult));
        }
        t.chars.push_back(std::move(chi));
    }

    std::sort(t.chars.begin(), t.chars.end(), [](const Character& a, const Character& b) {
        const bool ta = std::all_of(a.values.begin(), a.values.end(), [](const CycloNumber& x) { return x.is_one(); });
        const bool tb = std::all_of(b.values.begin(), b.values.end(), [](const CycloNumber& x) { return x.is_one(); });
        if (ta != tb) return ta;
        if (a.degree != b.degree) return a.degree < b.degree;
        return value_key(a) < value_key(b);
    });

    // Exact verification.
    long sumsq = 0;
    for (const auto& c : t.chars) sumsq += c.degree * c.degree;
    if (sumsq != m) throw InternalError("sum of squared degrees differs from the group order");
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a; b < k; ++b) {
            CycloNumber s;
            for (size_t j = 0; j < k; ++j)
                s += CycloNumber(static_cast<long>(cl.classes[j].size())) * t.chars[a].values[j] * t.chars[b].values[j].complex_conjugate();
            if (s != CycloNumber(a == b ? m : 0)) throw InternalError("character orthogonality fails");
        }
    return t;
}

Irrep irreducible_representation(const CharacterTable& table, size_t chi) {
    const FiniteGroup& g = *table.group;
    const long n = table.chars.at(chi).degree;
    const int m = g.order();
    Irrep rep;
    rep.chi = chi;
    if (n == 1) {
        for (int x = 0; x < m; ++x) {
            Matrix<CycloNumber> r(1, 1);
            r(0, 0) = table.value(chi, x);
            rep.matrices.push_back(std::move(r));
        }
        return rep;
    }

    // Central idempotent e_chi = (n/|G|) sum_g chi(g^-1) g.
    Vec v(static_cast<size_t>(m));
    const CycloNumber scale(make_rational(n, m));
    for (int x = 0; x < m; ++x) v[static_cast<size_t>(x)] = scale * table.value(chi, g.inv(x));
    auto rank_of = [&](const Vec& u) { return static_cast<long>(rank(ideal_rows(g, u))) / n; };
    long r = n;

    // Idempotents of cyclic subgroups, one list per subgroup.
    std::vector<Vec> cyclic_idempotents;
    std::set<std::vector<int>> seen;
    for (int h = 0; h < m; ++h) {
        const long o = g.element_order(h);
        if (o == 1) continue;
        std::vector<int> sub;
        for (long l = 0; l < o; ++l) sub.push_back(g.pow(h, l));
        std::sort(sub.begin(), sub.end());
        if (!seen.insert(sub).second) continue;
        for (long kk = 0; kk < o; ++kk) {
            Vec idem(static_cast<size_t>(m));
            for (long l = 0; l < o; ++l)
                idem[static_cast<size_t>(g.pow(h, l))] = CycloNumber::root_of_unity(-kk * l, o) * CycloNumber(make_rational(1, o));
            cyclic_idempotents.push_back(std::move(idem));
        }
    }
    while (r > 1) {
        bool improved = false;
        for (int x = 0; x < m && !improved; ++x) {
            Vec vx(static_cast<size_t>(m));
            for (int y = 0; y < m; ++y) vx[static_cast<size_t>(g.mul(y, x))] = v[static_cast<size_t>(y)];
            for (const auto& idem : cyclic_idempotents) {
                Vec cand = product(g, vx, idem);
                const long rc = rank_of(cand);
                if (rc > 0 && rc < r) {
                    v = std::move(cand);
                    r = rc;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) throw InternalError("minimal left ideal construction stalled");
    }

    // Basis of the left ideal Q(zeta)[G] v and coordinates through pivot columns.
    auto rows = ideal_rows(g, v);
    auto picked = independent_rows(rows);
    if (static_cast<long>(picked.size()) != n) throw InternalError("left ideal has the wrong dimension");
    std::vector<Vec> basis;
    std::vector<int> basis_elems;
    for (size_t i : picked) {
        basis.push_back(rows[i]);
        basis_elems.push_back(static_cast<int>(i));
    }
    std::vector<Vec> cols(static_cast<size_t>(m), Vec(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c) cols[static_cast<size_t>(c)][static_cast<size_t>(i)] = basis[static_cast<size_t>(i)][static_cast<size_t>(c)];
    auto pivots = independent_rows(cols);
    const size_t nn = static_cast<size_t>(n);
    Matrix<CycloNumber> bpt(nn, nn);  // (B_P)^T
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = 0; j < nn; ++j) bpt(j, i) = basis[i][pivots[j]];
    Matrix<CycloNumber> inv(nn, nn);
    for (size_t j = 0; j < nn; ++j) {
        std::vector<CycloNumber> unit(nn);
        unit[j] = CycloNumber(1);
        auto col = solve(bpt, unit);
        for (size_t i = 0; i < nn; ++i) inv(i, j) = col[i];
    }
    for (int x = 0; x < m; ++x) {
        Matrix<CycloNumber> rho(nn, nn);
        for (size_t j = 0; j < nn; ++j) {
            // x * b_j = (x g_j) v = row of index x*g_j
            const Vec& w = rows[static_cast<size_t>(g.mul(x, basis_elems[j]))];
            for (size_t i = 0; i < nn; ++i) {
                CycloNumber c;
                for (size_t q = 0; q < nn; ++q) c += inv(i, q) * w[pivots[q]];
                rho(i, j) = c;
            }
        }
        rep.matrices.push_back(std::move(rho));
    }
    for (int x = 0; x < m; ++x) {
        if (rep.matrices[static_cast<size_t>(x)].trace() != table.value(chi, x)) throw InternalError("irrep trace mismatch");
        for (int y = 0; y < m; ++y)
            if (rep.matrices[static_cast<size_t>(x)] * rep.matrices[static_cast<size_t>(y)] != rep.matrices[static_cast<size_t>(g.mul(x, y))])
                throw InternalError("irrep is not a homomorphism");
    }
    return rep;
}

}  // namespace equivlk
