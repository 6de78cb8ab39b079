#include "equivlk/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "equivlk/errors.hpp"

namespace equivlk {

namespace {

// Real and complex flavours of the few operations Euler-Maclaurin needs.
BigFloat power(const BigFloat& base, const BigFloat& s) { return pow(base, -s); }
BigComplex power(const BigFloat& base, const BigComplex& s) { return pow(base, -s); }
BigFloat shifted(const BigFloat& s, long k) { return s + BigFloat(k, s.bits()); }
BigComplex shifted(const BigComplex& s, long k) { return BigComplex(s.re + BigFloat(k, s.bits()), s.im); }
BigFloat magnitude(const BigFloat& x) { return abs(x); }
BigFloat magnitude(const BigComplex& x) { return abs(x); }
BigFloat real_part(const BigFloat& x) { return x; }
BigFloat real_part(const BigComplex& x) { return x.re; }
BigFloat with_prec(const BigFloat& x, long bits) {
    BigFloat y(bits);
    mpfr_set(y.get(), x.get(), MPFR_RNDN);
    return y;
}
BigComplex with_prec(const BigComplex& x, long bits) { return BigComplex(with_prec(x.re, bits), with_prec(x.im, bits)); }

struct EmPlan {
    long n_direct;
    long wp;
};

EmPlan plan(double re_s, double abs_s, long bits) {
    EmPlan p;
    p.n_direct = 16 + bits / 5 + static_cast<long>(2 * abs_s);
    const double growth = std::max(0.0, 1.0 - re_s) * std::log2(static_cast<double>(p.n_direct + 1));
    p.wp = bits + 32 + static_cast<long>(std::ceil(growth)) + 8;
    return p;
}

template <class T>
struct EmResult {
    T value;
    T derivative;
};

// Euler-Maclaurin for zeta_H(s, a); with want_derivative also d/ds, tracking
// P_j(s) = s (s+1) ... (s+2j-2) together with P_j'(s).
template <class T>
EmResult<T> euler_maclaurin(const T& s_in, const Rational& a, long bits, bool want_derivative) {
    if (sgn(a) <= 0 || a > 1) throw PreconditionError("Hurwitz parameter must lie in (0, 1]");
    const double re = real_part(s_in).to_double();
    const double mag = magnitude(s_in).to_double();
    if (std::abs(re - 1.0) < 1e-30 && magnitude(shifted(s_in, -1)).is_zero()) throw PreconditionError("Hurwitz zeta has a pole at s = 1");
    const EmPlan pl = plan(re, mag, bits);
    const long wp = pl.wp;
    const T s = with_prec(s_in, wp);
    const BigFloat av(a, wp);
    T sum = with_prec(T(BigFloat(0L, wp)), wp);
    T dsum = sum;
    for (long k = 0; k < pl.n_direct; ++k) {
        const BigFloat base = BigFloat(k, wp) + av;
        T t = power(base, s);
        sum += t;
        if (want_derivative) dsum -= t * log(base);
    }
    const BigFloat x = BigFloat(pl.n_direct, wp) + av;
    const BigFloat logx = log(x);
    const T sm1 = shifted(s, -1);
    const T xs = power(x, s);  // x^{-s}
    const T x1s = xs * x;      // x^{1-s}
    sum += x1s / sm1;
    sum += xs * BigFloat(Rational(1, 2), wp);
    if (want_derivative) {
        dsum -= x1s * logx / sm1;
        dsum -= x1s / (sm1 * sm1);
        dsum -= xs * logx * BigFloat(Rational(1, 2), wp);
    }
    const BigFloat eps = BigFloat::pow2(-(bits + 16), wp);
    const BigFloat inv_x2 = BigFloat(1L, wp) / (x * x);
    T p = s;  // P_1
    T dp = with_prec(T(BigFloat(1L, wp)), wp);
    T xpow = xs * (BigFloat(1L, wp) / x);  // x^{-s-1}
    Integer fact = 2;  // (2j)!
    bool converged = false;
    for (long j = 1; j <= 4 * pl.n_direct + 8; ++j) {
        const BigFloat c(bernoulli_number(2 * j) / Rational(fact), wp);
        const T term = p * xpow * c;
        sum += term;
        BigFloat tmag = magnitude(term);
        if (want_derivative) {
            const T dterm = (dp - p * logx) * xpow * c;
            dsum += dterm;
            tmag = tmag + magnitude(dterm);
        }
        if (tmag < eps) {
            converged = true;
            break;
        }
        // P_{j+1} = P_j (s + 2j - 1)(s + 2j)
        for (long i : {2 * j - 1, 2 * j}) {
            const T f = shifted(s, i);
            dp = dp * f + p;
            p = p * f;
        }
        xpow = xpow * inv_x2;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    if (!converged) throw NonConvergent("Euler-Maclaurin tail did not converge");
    return {with_prec(sum, bits), with_prec(dsum, bits)};
}

BigComplex char_value(const DirichletChar& chi, long a, long bits) {
    const long e = chi.exponent(a);
    if (e < 0) return BigComplex(bits);
    return unit_circle(BigFloat::pi(bits) * BigFloat(make_rational(2 * e, chi.order()), bits));
}

std::vector<long> dedupe(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

BigFloat factorial(long k, long bits) {
    Integer f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return BigFloat(f, bits);
}

// Leading Laurent coefficient of L_R(t) at the integer t0, with its order.
LaurentLead real_gamma_lead(long t0, long bits) {
    const BigFloat pi = BigFloat::pi(bits);
    if (t0 <= 0 && t0 % 2 == 0) {
        const long k = -t0 / 2;
        BigFloat c = pow(pi, k) * BigFloat(2L, bits) / factorial(k, bits);
        if (k % 2) c = -c;
        return {-1, c};
    }
    const BigFloat half_t(make_rational(t0, 2), bits);
    return {0, pow(pi, -half_t) * gamma(half_t)};
}

LaurentLead complex_gamma_lead(long s0, long bits) {
    const BigFloat two_pi = BigFloat::pi(bits) * BigFloat(2L, bits);
    if (s0 <= 0) {
        const long k = -s0;
        BigFloat c = pow(two_pi, k) * BigFloat(2L, bits) / factorial(k, bits);
        if (k % 2) c = -c;
        return {-1, c};
    }
    return {0, BigFloat(2L, bits) * pow(two_pi, -s0) * gamma(BigFloat(s0, bits))};
}

bool gamma_pole(const BigFloat& t) { return t.is_integer() && t.sign() <= 0; }

}  // namespace

BigFloat hurwitz_zeta(const BigFloat& s, const Rational& a, long bits) { return euler_maclaurin(s, a, bits, false).value; }

BigComplex hurwitz_zeta(const BigComplex& s, const Rational& a, long bits) { return euler_maclaurin(s, a, bits, false).value; }

BigFloat hurwitz_zeta_derivative(const BigFloat& s, const Rational& a, long bits) { return euler_maclaurin(s, a, bits, true).derivative; }

BigComplex l_numeric(const BigComplex& s, const DirichletChar& chi, const std::vector<long>& removed, long bits) {
    if (s.re <= BigFloat(1L, bits)) throw NonConvergent("the Dirichlet series needs Re s > 1");
    const long wp = bits + 8;
    const long f = chi.modulus();
    const bool real = s.im.is_zero();
    BigComplex z(wp);
    for (long a = 1; a <= f; ++a) {
        if (chi.exponent(a) < 0) continue;
        const Rational x = make_rational(a, f);
        const BigComplex h = real ? BigComplex(hurwitz_zeta(with_prec(s.re, wp), x, wp)) : hurwitz_zeta(with_prec(s, wp), x, wp);
        z += char_value(chi, a, wp) * h;
    }
    z = z * pow(BigFloat(f, wp), -with_prec(s, wp));
    for (long v : dedupe(removed)) {
        if (!is_prime(v)) throw PreconditionError("removed set must consist of primes");
        if (f % v == 0) continue;
        BigComplex one(BigFloat(1L, wp));
        z = z * (one - char_value(chi, v, wp) * pow(BigFloat(v, wp), -with_prec(s, wp)));
    }
    return with_prec(z, bits);
}

BigComplex l_derivative_numeric(const BigFloat& s, const DirichletChar& chi, long bits) {
    const long wp = bits + 8;
    const long f = chi.modulus();
    const BigFloat sw = with_prec(s, wp);
    BigComplex z(wp);
    BigComplex dz(wp);
    for (long a = 1; a <= f; ++a) {
        if (chi.exponent(a) < 0) continue;
        const auto em = euler_maclaurin(sw, make_rational(a, f), wp, true);
        const BigComplex c = char_value(chi, a, wp);
        z += c * em.value;
        dz += c * em.derivative;
    }
    const BigFloat fs = pow(BigFloat(f, wp), -sw);
    return with_prec((dz - z * log(BigFloat(f, wp))) * fs, bits);
}

LValueRecord l_value_record_exact(long r, const DirichletChar& chi, const std::vector<long>& removed) {
    LValueRecord rec;
    rec.chi = chi;
    rec.point = std::to_string(1 - r);
    rec.removed = dedupe(removed);
    rec.kind = LValueKind::exact_negative;
    rec.exact = l_value_exact(r, chi, removed);
    return rec;
}

LValueRecord l_value_numeric(const BigComplex& s, const DirichletChar& chi, const std::vector<long>& removed, long bits) {
    LValueRecord rec;
    rec.chi = chi;
    rec.point = s.im.is_zero() ? s.re.to_string(20) : s.to_string(20);
    rec.removed = dedupe(removed);
    rec.kind = LValueKind::numeric;
    rec.numeric = l_numeric(s, chi, removed, bits);
    rec.bits = bits;
    return rec;
}

LValueRecord l_value_numeric(long s, const DirichletChar& chi, const std::vector<long>& removed, long bits) {
    LValueRecord rec = l_value_numeric(BigComplex(BigFloat(s, bits)), chi, removed, bits);
    rec.point = std::to_string(s);
    return rec;
}

std::vector<LValueRecord> equivariant_l_vector_exact(long r, long f, const std::vector<long>& removed) {
    std::vector<LValueRecord> out;
    for (const auto& chi : enumerate_characters(f)) out.push_back(l_value_record_exact(r, chi, removed));
    return out;
}

BigComplex gauss_sum(const DirichletChar& chi, long bits) {
    if (!chi.is_primitive()) throw PreconditionError("Gauss sums are taken for primitive characters");
    const long wp = bits + 8;
    const long f = chi.modulus();
    const long n = chi.order();
    const BigFloat pi = BigFloat::pi(wp);
    BigComplex t(wp);
    for (long a = 0; a < f; ++a) {
        const long e = chi.exponent(a);
        if (e < 0) continue;
        // chi(a) e^{2 pi i a/f} = e^{2 pi i (e f + a n)/(n f)}
        t += unit_circle(pi * BigFloat(make_rational(2 * (e * f + a * n), n * f), wp));
    }
    return with_prec(t, bits);
}

BigComplex root_number(const DirichletChar& chi, long bits) {
    const long wp = bits + 8;
    BigComplex w = gauss_sum(chi, wp) * (BigFloat(1L, wp) / sqrt(BigFloat(chi.modulus(), wp)));
    if (!chi.is_even()) w = BigComplex(w.im, -w.re);  // divide by i
    return with_prec(w, bits);
}

GammaData gamma_data(const DirichletChar& chi) {
    return chi.is_even() ? GammaData{PlaceType::real, 1, 0} : GammaData{PlaceType::real, 0, 1};
}

BigFloat archimedean_factor(const GammaData& g, const BigFloat& s_in, long bits) {
    const long wp = bits + 16;
    const BigFloat s = with_prec(s_in, wp);
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat half(Rational(1, 2), wp);
    BigFloat out(1L, wp);
    if (g.type == PlaceType::complex) {
        const long n = g.n_plus + g.n_minus;
        if (n == 0) return with_prec(out, bits);
        if (gamma_pole(s)) throw PreconditionError("Gamma(s) has a pole at s = " + s.to_string(10));
        const BigFloat one = BigFloat(2L, wp) * pow(pi * BigFloat(2L, wp), -s) * gamma(s);
        return with_prec(pow(one, n), bits);
    }
    auto lr = [&](const BigFloat& t) {
        const BigFloat h = t * half;
        if (gamma_pole(h)) throw PreconditionError("L_R has a pole at " + t.to_string(10));
        return pow(pi, -h) * gamma(h);
    };
    if (g.n_plus) out *= pow(lr(s), g.n_plus);
    if (g.n_minus) out *= pow(lr(s + BigFloat(1L, wp)), g.n_minus);
    return with_prec(out, bits);
}

LaurentLead archimedean_leading_term(const GammaData& g, long s0, long bits) {
    const long wp = bits + 16;
    LaurentLead out{0, BigFloat(1L, wp)};
    auto absorb = [&](const LaurentLead& piece, long times) {
        for (long i = 0; i < times; ++i) {
            out.order += piece.order;
            out.coeff *= piece.coeff;
        }
    };
    if (g.type == PlaceType::complex) {
        absorb(complex_gamma_lead(s0, wp), g.n_plus + g.n_minus);
    } else {
        absorb(real_gamma_lead(s0, wp), g.n_plus);
        absorb(real_gamma_lead(s0 + 1, wp), g.n_minus);
    }
    out.coeff = with_prec(out.coeff, bits);
    return out;
}

BigComplex completed_lambda(const BigFloat& s, const DirichletChar& chi, long bits) {
    const long wp = bits + 8;
    return with_prec(l_numeric(BigComplex(with_prec(s, wp)), chi, {}, wp) * archimedean_factor(gamma_data(chi), s, wp), bits);
}

FeResidual fe_residual(const DirichletChar& chi, long s, long bits) {
    if (!chi.is_primitive()) throw PreconditionError("the functional equation is checked for primitive characters");
    if (s < 2) throw PreconditionError("s must be at least 2");
    const long wp = bits + 16;
    FeResidual out;
    out.lhs = completed_lambda(BigFloat(s, wp), chi, wp);
    const DirichletChar cb = chi.conj();
    const LaurentLead lead = archimedean_leading_term(gamma_data(cb), 1 - s, wp);
    BigComplex rhs(wp);
    const CycloNumber exact = l_value_exact(s, cb);
    if (lead.order == 0) {
        rhs = embed_complex(exact, wp) * lead.coeff;
    } else {
        if (!exact.is_zero()) throw InternalError("nonzero L-value at a Gamma pole");
        rhs = l_derivative_numeric(BigFloat(1 - s, wp), cb, wp) * lead.coeff;
        out.derivative_route = true;
    }
    const BigFloat fpow = pow(BigFloat(chi.modulus(), wp), BigFloat(make_rational(1 - 2 * s, 2), wp));
    out.residual = with_prec(out.lhs - root_number(chi, wp) * rhs * fpow, bits);
    out.lhs = with_prec(out.lhs, bits);
    return out;
}

BigComplex fe_transported_l_value(long r, const DirichletChar& chi, long bits) {
    if (!chi.is_primitive()) throw PreconditionError("the functional equation is used for primitive characters");
    if (r < 2) throw PreconditionError("r must be at least 2");
    const long wp = bits + 16;
    const LaurentLead lead = archimedean_leading_term(gamma_data(chi), 1 - r, wp);
    if (lead.order < 0) return BigComplex(bits);
    const DirichletChar cb = chi.conj();
    const BigFloat fpow = pow(BigFloat(chi.modulus(), wp), BigFloat(make_rational(2 * r - 1, 2), wp));
    BigComplex v = root_number(chi, wp) * l_numeric(BigComplex(BigFloat(r, wp)), cb, {}, wp);
    v = v * (archimedean_factor(gamma_data(cb), BigFloat(r, wp), wp) * fpow / lead.coeff);
    return with_prec(v, bits);
}

std::optional<Rational> recognize_rational(const BigFloat& x, long max_den, long tol_bits) {
    const long wp = x.bits();
    const BigFloat tol = BigFloat::pow2(-tol_bits, wp);
    Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    BigFloat y = x;
    for (int it = 0; it < 200; ++it) {
        Integer a;
        mpfr_get_z(a.get_mpz_t(), y.get(), MPFR_RNDD);
        const Integer h = a * h1 + h2;
        const Integer k = a * k1 + k2;
        if (k > max_den) break;
        const Rational cand(h, k);
        if (abs(x - BigFloat(cand, wp)) < tol) return Rational(cand);
        BigFloat frac = y - BigFloat(a, wp);
        if (frac.is_zero()) break;
        y = BigFloat(1L, wp) / frac;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
    }
    return std::nullopt;
}

long predicted_pi_power(long r, const GammaData& g) {
    if (g.type == PlaceType::complex) return (1 - 2 * r) * (g.n_plus + g.n_minus);
    if (r % 2) return (1 - r) * g.n_plus - r * g.n_minus;
    return (1 - r) * g.n_minus - r * g.n_plus;
}

PiRatioVerdict pi_power_ratio_check(long r, const GammaData& g, long bits) {
    if (r < 2) throw PreconditionError("r must be at least 2");
    const long wp = bits + 16;
    PiRatioVerdict v;
    v.pi_power = predicted_pi_power(r, g);
    const BigFloat num = archimedean_factor(g, BigFloat(r, wp), wp);
    const LaurentLead lead = archimedean_leading_term(g, 1 - r, wp);
    const BigFloat q = num / lead.coeff / pow(BigFloat::pi(wp), v.pi_power);
    v.numeric = q.to_string(30);
    if (auto rat = recognize_rational(q, 10000, bits - 16)) {
        v.rational = true;
        v.quotient = *rat;
    }
    return v;
}

}  // namespace equivlk
