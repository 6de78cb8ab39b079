#include "equivlk/fitting.hpp"

#include <algorithm>
#include <numeric>

#include "equivlk/errors.hpp"
#include "equivlk/sampling.hpp"

namespace equivlk {

namespace {

// Lexicographic b-subsets of {0..a-1}.
std::vector<std::vector<size_t>> subsets(size_t a, size_t b) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur(b);
    std::iota(cur.begin(), cur.end(), 0);
    if (b > a) return out;
    while (true) {
        out.push_back(cur);
        size_t i = b;
        while (i > 0 && cur[i - 1] == a - b + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (size_t j = i; j < b; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Integer binomial(size_t a, size_t b) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

void check_presentation(const Presentation& pr) {
    if (!pr.group) throw PreconditionError("presentation needs a group");
    if (pr.p < 3 || !is_prime(pr.p)) throw PreconditionError("presentation prime must be odd");
    if (pr.h.rows() < 1 || pr.h.cols() < 1) throw PreconditionError("presentation matrix must be non-empty");
    for (size_t i = 0; i < pr.h.rows(); ++i)
        for (size_t j = 0; j < pr.h.cols(); ++j)
            for (const auto& c : pr.h(i, j).coeffs())
                if (sgn(c) != 0 && valuation(c, pr.p) < 0) throw PreconditionError("presentation entries must be p-integral");
}

}  // namespace

FittClass fitting_invariant(const GroupAlgebra& a, const Presentation& pr, size_t max_minors) {
    check_presentation(pr);
    FittClass f;
    const size_t rows = pr.h.rows();
    const size_t cols = pr.h.cols();
    f.quadratic = rows == cols;
    if (rows < cols) {
        f.zero_class = true;
        CentralVector zero;
        zero.components.assign(a.num_characters(), CycloNumber());
        f.generators.push_back(std::move(zero));
        return f;
    }
    f.lower_bound = rows > cols;
    if (binomial(rows, cols) > static_cast<unsigned long>(max_minors))
        throw BoundExceeded("presentation has more than " + std::to_string(max_minors) + " maximal minors");
    const CGMatrix h = to_cyclo(pr.h);
    for (const auto& s : subsets(rows, cols)) f.generators.push_back(reduced_norm(a, h.select_rows(s)));
    return f;
}

long FiniteGModule::log_order() const { return std::accumulate(exps.begin(), exps.end(), 0L); }

FiniteGModule cokernel_module(const Presentation& pr, long max_log_order) {
    check_presentation(pr);
    const FiniteGroup& g = *pr.group;
    const size_t m = static_cast<size_t>(g.order());
    const size_t a = pr.h.rows();
    const size_t b = pr.h.cols();
    const size_t dim = b * m;
    const ZpN ring(pr.p, pr.prec);
    if (a < b) throw PreconditionError("cokernel is infinite (fewer relations than generators)");

    // coordinate (j, x) -> j*m + x; relation rows g·h_i
    ModMat rel;
    for (size_t i = 0; i < a; ++i)
        for (int x = 0; x < g.order(); ++x) {
            ModVec row(dim, 0);
            for (size_t j = 0; j < b; ++j) {
                const auto& e = pr.h(i, j);
                for (int y = 0; y < g.order(); ++y) {
                    if (sgn(e[y]) == 0) continue;
                    const size_t col = j * m + static_cast<size_t>(g.mul(x, y));
                    row[col] = ring.add(row[col], ring.reduce(e[y]));
                }
            }
            rel.push_back(std::move(row));
        }
    SmithForm sf = smith_form(ring, rel, dim);
    if (sf.vals.size() < dim) throw PreconditionError("cokernel is infinite");
    for (long v : sf.vals)
        if (v >= pr.prec) throw PreconditionError("cokernel is infinite or not killed by p^N");

    FiniteGModule mod;
    mod.group = pr.group;
    mod.p = pr.p;
    mod.prec = pr.prec;
    std::vector<size_t> kept;
    for (size_t k = 0; k < dim; ++k)
        if (sf.vals[k] > 0) {
            kept.push_back(k);
            mod.exps.push_back(sf.vals[k]);
        }
    if (mod.log_order() > max_log_order)
        throw BoundExceeded("cokernel order p^" + std::to_string(mod.log_order()) + " exceeds p^" + std::to_string(max_log_order));

    // action of g in Smith coordinates: row k = e_k V^-1 T_g V
    for (int x = 0; x < g.order(); ++x) {
        ModMat act;
        for (size_t k : kept) {
            const ModVec& vinv = sf.v_inv[k];
            ModVec moved(dim, 0);
            for (size_t j = 0; j < b; ++j)
                for (int y = 0; y < g.order(); ++y) {
                    const int64_t c = vinv[j * m + static_cast<size_t>(y)];
                    if (c) moved[j * m + static_cast<size_t>(g.mul(x, y))] = c;
                }
            ModVec row;
            for (size_t l : kept) {
                int64_t s = 0;
                for (size_t t = 0; t < dim; ++t)
                    if (moved[t]) s = ring.add(s, ring.mul(moved[t], sf.v[t][l]));
                row.push_back(s % ring.pow_p(mod.exps[row.size()]));
            }
            act.push_back(std::move(row));
        }
        mod.action.push_back(std::move(act));
    }
    return mod;
}

HowellSpan annihilator_bruteforce(const FiniteGModule& mod) {
    const ZpN ring(mod.p, mod.prec);
    const size_t m = static_cast<size_t>(mod.group->order());
    const size_t r = mod.rank();
    // x_g unknowns; condition for generator e_k, component l: sum_g x_g A_g[k][l] = 0 mod p^{exps[l]}
    ModMat sys(m, ModVec(r * r, 0));
    for (size_t x = 0; x < m; ++x)
        for (size_t k = 0; k < r; ++k)
            for (size_t l = 0; l < r; ++l)
                sys[x][k * r + l] = ring.mul(mod.action[x][k][l], ring.pow_p(mod.prec - mod.exps[l]));
    HowellSpan span(ring, m);
    if (r == 0) {
        for (size_t x = 0; x < m; ++x) {
            ModVec e(m, 0);
            e[x] = 1;
            span.add(e);
        }
        return span;
    }
    span.add_all(left_kernel(ring, sys, r * r));
    return span;
}

ModVec reduce_element(const ZpN& ring, const QGElement& x) {
    ModVec v;
    for (const auto& c : x.coeffs()) v.push_back(ring.reduce(c));
    return v;
}

HowellSpan central_span(const ZpN& ring, const GroupAlgebra& a, const std::vector<QGElement>& gens) {
    const auto& cl = a.table().classes;
    HowellSpan span(ring, static_cast<size_t>(a.group()->order()));
    for (const auto& x : gens)
        for (const auto& cls : cl.classes) {
            QGElement s(a.group());
            for (int y : cls) s[y] = Rational(1);
            span.add(reduce_element(ring, s * x));
        }
    return span;
}

HowellSpan left_ideal_span(const ZpN& ring, const std::vector<QGElement>& gens) {
    if (gens.empty()) throw PreconditionError("need at least one generator");
    const GroupPtr& g = gens.front().group();
    HowellSpan span(ring, static_cast<size_t>(g->order()));
    for (const auto& x : gens)
        for (int y = 0; y < g->order(); ++y) span.add(reduce_element(ring, QGElement::basis(g, y) * x));
    return span;
}

std::vector<QGElement> fitt_elements(const GroupAlgebra& a, const FittClass& f) {
    std::vector<QGElement> out;
    for (const auto& v : f.generators) out.push_back(to_rational(central_recompose(a, v)));
    return out;
}

bool denominator_trivial(const FiniteGroup& g, long p) {
    if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
    return commutator_subgroup(g).size() % static_cast<size_t>(p) != 0;
}

Integer denominator_sample(const FiniteGroup& g, long p) {
    if (denominator_trivial(g, p)) return 1;
    return pow_integer(p, valuation(Integer(g.order()), p));
}

AnnihilationVerdict annihilation_check(const GroupAlgebra& a, const Presentation& pr, const std::optional<QGElement>& x, long max_log_order) {
    AnnihilationVerdict verdict;
    const FiniteGModule mod = cokernel_module(pr, max_log_order);
    verdict.module_log_order = mod.log_order();
    const HowellSpan ann = annihilator_bruteforce(mod);
    const FittClass fc = fitting_invariant(a, pr);
    verdict.fitt_generators = fc.generators;
    const ZpN ring(pr.p, pr.prec);
    const Rational hp(denominator_sample(*pr.group, pr.p));
    const auto elems = fitt_elements(a, fc);
    for (size_t i = 0; i < elems.size(); ++i) {
        QGElement t = elems[i] * hp;
        if (x) t = *x * t;
        bool integral = true;
        for (const auto& c : t.coeffs()) integral = integral && (sgn(c) == 0 || valuation(c, pr.p) >= 0);
        if (!integral) {
            verdict.annihilates = false;
            verdict.failing_generator = i;
            verdict.detail = "generator " + std::to_string(i) + " is not p-integral";
            return verdict;
        }
        if (!ann.contains(reduce_element(ring, t))) {
            verdict.annihilates = false;
            verdict.failing_generator = i;
            verdict.detail = "generator " + std::to_string(i) + " does not annihilate the cokernel";
            return verdict;
        }
    }
    verdict.detail = "all " + std::to_string(elems.size()) + " generators annihilate a module of order p^" + std::to_string(mod.log_order());
    return verdict;
}

bool is_p_integral(const CGMatrix& m, long p) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            for (const auto& c : m(i, j).coeffs())
                for (const auto& q : c.coeffs())
                    if (sgn(q) != 0 && valuation(q, p) < 0) return false;
    return true;
}

IntegrityProbe adjoint_integrality_probe(const GroupAlgebra& a, long p, long trials, std::mt19937_64& rng, size_t max_n) {
    IntegrityProbe probe;
    probe.expected_trivial = denominator_trivial(*a.group(), p);
    for (long t = 0; t < trials; ++t) {
        const size_t n = static_cast<size_t>(draw(rng, 1, static_cast<long>(max_n)));
        QGMatrix h = random_matrix(rng, a.group(), n, n);
        ++probe.trials;
        if (is_p_integral(generalized_adjoint(a, h), p)) {
            ++probe.integral;
        } else if (!probe.witness) {
            probe.witness = h;
        }
    }
    return probe;
}

QGElement commutative_determinant(const QGMatrix& m) {
    const size_t n = m.rows();
    if (n != m.cols()) throw PreconditionError("determinant needs a square matrix");
    if (n == 1) return m(0, 0);
    QGElement det(m.group());
    for (size_t j = 0; j < n; ++j) {
        QGMatrix minor(m.group(), n - 1, n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        QGElement term = m(0, j) * commutative_determinant(minor);
        if (j % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

std::vector<QGElement> classical_fitting_generators(const Presentation& pr) {
    check_presentation(pr);
    if (!pr.group->is_abelian()) throw PreconditionError("classical Fitting ideal needs an abelian group");
    const size_t rows = pr.h.rows();
    const size_t cols = pr.h.cols();
    if (rows < cols) return {QGElement(pr.group)};
    std::vector<QGElement> out;
    for (const auto& s : subsets(rows, cols)) out.push_back(commutative_determinant(pr.h.select_rows(s)));
    return out;
}

}  // namespace equivlk
