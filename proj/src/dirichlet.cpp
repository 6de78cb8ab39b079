#include "equivlk/dirichlet.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "equivlk/errors.hpp"
#include "equivlk/zmod.hpp"

namespace equivlk {

namespace {

long powmod(long a, long e, long m) {
    Integer r;
    Integer base = mod_floor(a, m);
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), Integer(m).get_mpz_t());
    return r.get_si();
}

long ipow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

long primitive_root_prime_power(long p, long e) {
    const long pe = ipow(p, e);
    const auto fac = prime_divisors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : fac) ok = ok && powmod(g, (p - 1) / q, p) != 1;
        if (!ok) continue;
        if (e == 1) return g;
        return powmod(g, p - 1, p * p) != 1 ? g : (g + p) % pe;
    }
    return 1;  // p = 2 is handled by the caller
}

struct Generator {
    long g;
    long order;
};

// Standard generators of (Z/f)^x: a primitive root for each odd prime power,
// -1 and 5 for powers of 2, glued by the Chinese remainder theorem.
std::vector<Generator> unit_generators(long f) {
    std::vector<Generator> gens;
    for (long p : prime_divisors(f)) {
        long e = 0;
        long pe = 1;
        while (f % (pe * p) == 0) {
            pe *= p;
            ++e;
        }
        const long rest = f / pe;
        auto lift = [&](long local) {
            // x = local mod pe, x = 1 mod rest
            for (long x = local; x < f; x += pe)
                if (x % rest == 1 % rest) return x;
            return local;
        };
        if (p == 2) {
            if (e >= 2) gens.push_back({lift(pe - 1), 2});
            if (e >= 3) gens.push_back({lift(5), pe / 4});
        } else {
            gens.push_back({lift(primitive_root_prime_power(p, e)), pe / p * (p - 1)});
        }
    }
    return gens;
}

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

DirichletChar::DirichletChar(long modulus, long order, std::vector<long> exps) : f_(modulus), n_(order), e_(std::move(exps)) {
    if (f_ < 1 || n_ < 1) throw PreconditionError("character modulus and order must be positive");
    if (static_cast<long>(e_.size()) != f_) throw PreconditionError("character table has the wrong size");
    long g = n_;
    for (long a = 0; a < f_; ++a) {
        long& x = e_[static_cast<size_t>(a)];
        const bool unit = gcd_long(a, f_) == 1;
        if (!unit) {
            x = -1;
            continue;
        }
        if (x < 0) throw PreconditionError("character value missing on a unit");
        x = mod_floor(x, n_);
        g = gcd_long(g, x);
    }
    if (g > 1) {
        n_ /= g;
        for (auto& x : e_)
            if (x >= 0) x /= g;
    }
    // multiplicativity
    for (long a = 1; a < f_; ++a) {
        if (e_[static_cast<size_t>(a)] < 0) continue;
        for (long b = a; b < f_; ++b) {
            if (e_[static_cast<size_t>(b)] < 0) continue;
            if (e_[static_cast<size_t>(a * b % f_)] != (e_[static_cast<size_t>(a)] + e_[static_cast<size_t>(b)]) % n_)
                throw PreconditionError("exponent table is not multiplicative");
        }
    }
    conductor_ = f_;
    for (long d = 1; d <= f_; ++d) {
        if (f_ % d) continue;
        bool ok = true;
        for (long a = 1 % d; a < f_ && ok; a += d)
            if (e_[static_cast<size_t>(a)] > 0) ok = false;
        if (ok) {
            conductor_ = d;
            break;
        }
    }
    parity_ = 1;
    if (f_ > 2) parity_ = e_[static_cast<size_t>(f_ - 1)] == 0 ? 1 : -1;
}

DirichletChar DirichletChar::trivial(long modulus) {
    std::vector<long> e(static_cast<size_t>(modulus), 0);
    return DirichletChar(modulus, 1, e);
}

CycloNumber DirichletChar::value(long a) const {
    const long e = exponent(a);
    return e < 0 ? CycloNumber() : CycloNumber::root_of_unity(e, n_);
}

DirichletChar DirichletChar::primitive() const {
    if (conductor_ == f_) return *this;
    const long d = conductor_;
    std::vector<long> e(static_cast<size_t>(d), -1);
    for (long b = 0; b < d; ++b) {
        if (gcd_long(b, d) != 1) continue;
        for (long a = b; a < f_ + d; a += d)
            if (gcd_long(a, f_) == 1) {
                e[static_cast<size_t>(b)] = exponent(a);
                break;
            }
    }
    return DirichletChar(d, n_, e);
}

DirichletChar DirichletChar::power(long t) const {
    std::vector<long> e = e_;
    for (auto& x : e)
        if (x >= 0) x = mod_floor(x * mod_floor(t, n_), n_);
    return DirichletChar(f_, n_, e);
}

DirichletChar DirichletChar::induce(long modulus) const {
    if (modulus % f_) throw PreconditionError("can only induce to a multiple of the modulus");
    std::vector<long> e(static_cast<size_t>(modulus));
    for (long a = 0; a < modulus; ++a) e[static_cast<size_t>(a)] = gcd_long(a, modulus) == 1 ? exponent(a) : -1;
    return DirichletChar(modulus, n_, e);
}

std::string DirichletChar::label() const {
    std::string s = "mod" + std::to_string(f_) + ":o" + std::to_string(n_) + "[";
    bool first = true;
    for (long a = 1; a < std::max<long>(f_, 2); ++a) {
        if (exponent(a) < 0) continue;
        s += (first ? "" : ",") + std::to_string(exponent(a));
        first = false;
    }
    return s + "]";
}

std::vector<DirichletChar> enumerate_characters(long f, long max_modulus) {
    if (f < 1) throw PreconditionError("modulus must be positive");
    if (f > max_modulus) throw BoundExceeded("modulus " + std::to_string(f) + " exceeds " + std::to_string(max_modulus));
    const auto gens = unit_generators(f);
    long big_n = 1;
    for (const auto& g : gens) big_n = lcm_long(big_n, g.order);
    // discrete-log coordinates of every unit
    std::vector<std::vector<long>> coord(static_cast<size_t>(f));
    std::vector<long> c(gens.size(), 0);
    while (true) {
        long a = 1 % f;
        for (size_t i = 0; i < gens.size(); ++i) a = a * powmod(gens[i].g, c[i], f) % f;
        coord[static_cast<size_t>(a)] = c;
        size_t i = gens.size();
        while (i > 0 && ++c[i - 1] == gens[i - 1].order) c[--i] = 0;
        if (i == 0) break;
    }
    std::vector<DirichletChar> out;
    std::vector<long> j(gens.size(), 0);
    while (true) {
        std::vector<long> e(static_cast<size_t>(f), -1);
        for (long a = 0; a < f; ++a) {
            if (gcd_long(a, f) != 1) continue;
            long s = 0;
            for (size_t i = 0; i < gens.size(); ++i) s += j[i] * coord[static_cast<size_t>(a)][i] * (big_n / gens[i].order);
            e[static_cast<size_t>(a)] = s % big_n;
        }
        out.emplace_back(f, big_n, e);
        size_t i = gens.size();
        while (i > 0 && ++j[i - 1] == gens[i - 1].order) j[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

std::vector<DirichletChar> primitive_characters(long f) {
    std::vector<DirichletChar> out;
    for (auto& chi : enumerate_characters(f))
        if (chi.is_primitive()) out.push_back(std::move(chi));
    return out;
}

Rational bernoulli_number(long n) {
    if (n < 0) throw PreconditionError("Bernoulli index must be nonnegative");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    while (static_cast<long>(bernoulli_cache.size()) <= n) {
        const long m = static_cast<long>(bernoulli_cache.size());
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        Rational s;
        Integer binom = 1;
        for (long k = 0; k < m; ++k) {
            s += Rational(binom) * bernoulli_cache[static_cast<size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        bernoulli_cache.push_back(-s / Rational(m + 1));
    }
    return bernoulli_cache[static_cast<size_t>(n)];
}

Rational bernoulli_polynomial(long n, const Rational& x) {
    Rational s;
    Integer binom = 1;
    Rational xp = 1;
    std::vector<Rational> powers(static_cast<size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        powers[static_cast<size_t>(k)] = xp;
        xp *= x;
    }
    for (long k = 0; k <= n; ++k) {
        s += Rational(binom) * bernoulli_number(k) * powers[static_cast<size_t>(n - k)];
        binom = binom * (n - k) / (k + 1);
    }
    return s;
}

CycloNumber gen_bernoulli(long r, const DirichletChar& chi_in) {
    if (r < 1) throw PreconditionError("r must be at least 1");
    const DirichletChar chi = chi_in.primitive();
    const long f = chi.modulus();
    std::vector<Rational> by_exp(static_cast<size_t>(chi.order()));
    for (long a = 1; a <= f; ++a) {
        const long e = chi.exponent(a);
        if (e < 0) continue;
        by_exp[static_cast<size_t>(e)] += bernoulli_polynomial(r, make_rational(a, f));
    }
    Rational scale(pow_integer(f, r - 1));
    for (auto& x : by_exp) x *= scale;
    return CycloNumber::from_power_sum(chi.order(), by_exp);
}

CycloNumber euler_factor(long r, const DirichletChar& chi, const std::vector<long>& removed) {
    const DirichletChar prim = chi.primitive();
    std::vector<long> s = removed;
    for (long v : prime_divisors(chi.modulus())) s.push_back(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    CycloNumber prod(1);
    for (long v : s) {
        if (!is_prime(v)) throw PreconditionError("removed set must consist of primes");
        if (prim.conductor() % v == 0) continue;
        prod *= CycloNumber(1) - prim.value(v) * CycloNumber(Rational(pow_integer(v, r - 1)));
    }
    return prod;
}

CycloNumber l_value_exact(long r, const DirichletChar& chi, const std::vector<long>& removed) {
    if (r < 1) throw PreconditionError("r must be at least 1");
    return -gen_bernoulli(r, chi) * CycloNumber(make_rational(1, r)) * euler_factor(r, chi, removed);
}

GrossVerdict gross_equivariance_check(long r, long f, const std::vector<long>& removed) {
    GrossVerdict v;
    for (const auto& chi : enumerate_characters(f)) {
        const CycloNumber base = l_value_exact(r, chi, removed);
        for (long t = 1; t <= chi.order(); ++t) {
            if (gcd_long(t, chi.order()) != 1) continue;
            ++v.checked;
            const CycloNumber lhs = galois_conjugate(base, t, chi.order());
            const CycloNumber rhs = l_value_exact(r, chi.power(t), removed);
            if (lhs != rhs) {
                v.holds = false;
                v.detail = "mismatch for " + chi.label() + " and t = " + std::to_string(t);
                return v;
            }
        }
    }
    v.detail = std::to_string(v.checked) + " conjugate pairs agree";
    return v;
}

namespace {

void check_removed_covers(long f, const std::vector<long>& removed) {
    for (long p : prime_divisors(f))
        if (!(p == 2 && f % 4 != 0) && std::find(removed.begin(), removed.end(), p) == removed.end())
            throw PreconditionError("S must contain every prime ramified in the cyclotomic field of conductor " + std::to_string(f));
}

size_t unit_index(const std::vector<long>& residues, long f, long a) {
    const long x = f == 1 ? 1 : mod_floor(a, f);
    auto it = std::lower_bound(residues.begin(), residues.end(), x);
    if (it == residues.end() || *it != x) throw PreconditionError(std::to_string(a) + " is not a unit mod " + std::to_string(f));
    return static_cast<size_t>(it - residues.begin());
}

}  // namespace

StickelbergerElement stickelberger(long r, long f, const std::vector<long>& removed) {
    check_removed_covers(f, removed);
    auto g = unit_group(f);
    const auto residues = unit_group_residues(f);
    const long m = g->order();
    CGElement theta(g);
    for (const auto& chi : enumerate_characters(f)) {
        const CycloNumber val = l_value_exact(r, chi.conj().primitive(), removed);
        if (val.is_zero()) continue;
        const CycloNumber scale = val * CycloNumber(make_rational(1, m));
        for (size_t i = 0; i < residues.size(); ++i) theta[static_cast<int>(i)] += scale * chi.value(residues[i]).complex_conjugate();
    }
    if (!is_rational(theta)) throw InternalError("Stickelberger element is not rational");
    return StickelbergerElement{f, r, removed, to_rational(theta)};
}

QGElement stickelberger_partial_zeta(long r, long f) {
    auto g = unit_group(f);
    const auto residues = unit_group_residues(f);
    QGElement theta(g);
    const Rational scale = Rational(pow_integer(f, r - 1)) / Rational(-r);
    for (long a : residues) {
        const Rational z = scale * bernoulli_polynomial(r, f == 1 ? Rational(1) : make_rational(a, f));
        long inv = 1;
        while (f > 1 && (inv * a) % f != 1) ++inv;
        theta[static_cast<int>(unit_index(residues, f, inv))] += z;
    }
    return theta;
}

bool admissible_twist(long c, long r, long f, const std::vector<long>& removed) {
    if (c == 0 || gcd_long(c, f) != 1) return false;
    for (long v : removed)
        if (c % v == 0) return false;
    for (long l = 2; l <= r + 1; ++l)
        if (is_prime(l) && r % (l - 1) == 0 && c % l == 0) return false;
    return true;
}

QGElement twisted_annihilator(long c, long r, long f) {
    auto g = unit_group(f);
    const auto residues = unit_group_residues(f);
    QGElement x = QGElement::scalar(g, Rational(pow_integer(c, r)));
    x[static_cast<int>(unit_index(residues, f, c))] -= Rational(1);
    return x;
}

bool integrality_check(const StickelbergerElement& theta, long c) {
    QGElement x = twisted_annihilator(c, theta.r, theta.f);
    if (x.group()->order() != theta.theta.group()->order()) throw InternalError("group mismatch");
    QGElement prod = QGElement(theta.theta.group(), x.coeffs()) * theta.theta;
    for (const auto& q : prod.coeffs())
        if (!is_integral(q)) return false;
    return true;
}

namespace {

Integer teichmueller_root(long n, long p, long prec) {
    long g = 2;
    const auto fac = prime_divisors(p - 1);
    for (;; ++g) {
        bool ok = true;
        for (long q : fac) ok = ok && powmod(g, (p - 1) / q, p) != 1;
        if (ok) break;
    }
    const Integer mod = pow_integer(p, prec);
    Integer x = powmod(g, (p - 1) / n, p);
    for (long i = 0; i < prec; ++i) mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
    return x;
}

}  // namespace

std::optional<PAdic> padic_image(const CycloNumber& x, long p, long prec) {
    const long n = x.conductor();
    if ((p - 1) % n != 0) return std::nullopt;
    const Integer t = teichmueller_root(n, p, prec);
    const Integer mod = pow_integer(p, prec);
    PAdic acc = PAdic::zero(p, prec);
    Integer tp = 1;
    for (const auto& c : x.coeffs()) {
        if (sgn(c) != 0) acc += PAdic(c, p, prec) * PAdic(Rational(tp), p, prec);
        tp = tp * t % mod;
    }
    return acc;
}

std::string padic_embedding_note(long p) {
    return "zeta_n -> Teichmueller lift of g^((p-1)/n), g the least primitive root mod " + std::to_string(p);
}

FractionalIdealSkeleton fractional_ideal_skeleton(long r, long f, const std::vector<long>& removed, long p, long prec) {
    if (r < 2 || r % 2 != 0) throw PreconditionError("the skeleton needs an even r >= 2");
    if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
    FractionalIdealSkeleton sk;
    sk.f = f;
    sk.r = r;
    sk.p = p;
    sk.removed = removed;
    for (const auto& chi : enumerate_characters(f)) {
        if (!chi.is_even()) continue;
        CycloNumber v = l_value_exact(r, chi.conj(), removed);
        sk.components.push_back(SkeletonComponent{chi, v, padic_image(v, p, prec)});
    }
    return sk;
}

std::vector<GroupRingElement<PAdic>> easy_annihilators(long r, long f, long p, const std::vector<long>& primes, long prec) {
    if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
    auto g = unit_group(f);
    const auto residues = unit_group_residues(f);
    std::vector<GroupRingElement<PAdic>> out;
    for (long v : primes) {
        if (!is_prime(v)) throw PreconditionError(std::to_string(v) + " is not prime");
        if (v == p) throw PreconditionError("v must differ from p");
        if (f % v == 0) throw PreconditionError(std::to_string(v) + " is ramified in the cyclotomic field of conductor " + std::to_string(f));
        GroupRingElement<PAdic> x(g);
        x[g->identity()] += PAdic(1, p, prec);
        const Rational twist = Rational(1) / Rational(pow_integer(v, r - 1));
        x[static_cast<int>(unit_index(residues, f, v))] -= PAdic(twist, p, prec);
        out.push_back(std::move(x));
    }
    return out;
}

KGroupModule kgroup_finite_field(long q, long d, long r) {
    if (q < 2 || prime_divisors(q).size() != 1) throw PreconditionError("q must be a prime power");
    if (d < 1 || r < 1) throw PreconditionError("d and r must be positive");
    const Integer qr = pow_integer(q, r);
    std::vector<std::vector<Integer>> rel(static_cast<size_t>(d), std::vector<Integer>(static_cast<size_t>(d), 0));
    for (long i = 0; i < d; ++i) {
        rel[static_cast<size_t>(i)][static_cast<size_t>(i)] -= qr;
        rel[static_cast<size_t>(i)][static_cast<size_t>((i + 1) % d)] += 1;
    }
    KGroupModule mod;
    mod.order = 1;
    for (const auto& x : integer_smith_invariants(rel)) {
        if (x == 0) throw InternalError("finite field K-group came out infinite");
        if (x != 1) mod.invariants.push_back(x);
        mod.order *= x;
    }
    return mod;
}

}  // namespace equivlk
