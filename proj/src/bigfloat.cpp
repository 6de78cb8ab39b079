#include "equivlk/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <memory>

#include "equivlk/errors.hpp"

namespace equivlk {

BigFloat::BigFloat(long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& value, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(long bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::catalan(long bits) {
    BigFloat r(bits);
    mpfr_const_catalan(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::zeta_ui(unsigned long n, long bits) {
    BigFloat r(bits);
    mpfr_zeta_ui(r.v_, n, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e, long bits) {
    BigFloat r(1L, bits);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

long BigFloat::exponent() const {
    if (is_zero()) return LONG_MIN / 2;
    return mpfr_get_exp(v_);
}

std::string BigFloat::to_string(int digits) const {
    if (digits <= 0) digits = static_cast<int>(static_cast<double>(bits()) * 0.30103) + 1;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    std::unique_ptr<char[]> buf(new char[static_cast<size_t>(digits) + 64]);
    mpfr_snprintf(buf.get(), static_cast<size_t>(digits) + 64, "%.*Re", digits - 1, v_);
    return std::string(buf.get());
}

void BigFloat::ensure_prec(long bits) {
    if (bits > this->bits()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    ensure_prec(o.bits());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    ensure_prec(o.bits());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    ensure_prec(o.bits());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.is_zero()) throw DivisionByZero("BigFloat division by zero");
    ensure_prec(o.bits());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

namespace {

template <class F>
BigFloat unary(const BigFloat& x, F f) {
    BigFloat r(x.bits());
    f(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) {
    if (x.sign() <= 0) throw PreconditionError("log of non-positive value");
    return unary(x, mpfr_log);
}
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat gamma(const BigFloat& x) {
    if (x.is_integer() && x.sign() <= 0) throw PreconditionError("gamma evaluated at a pole");
    return unary(x, mpfr_gamma);
}

BigFloat floor(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_floor(r.get(), x.get());
    return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
    BigFloat r(std::max(base.bits(), exponent.bits()));
    mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& base, long exponent) {
    BigFloat r(base.bits());
    mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    BigFloat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& o) {
    re *= o;
    im *= o;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigFloat den = o.re * o.re + o.im * o.im;
    if (den.is_zero()) throw DivisionByZero("BigComplex division by zero");
    BigFloat r = (re * o.re + im * o.im) / den;
    BigFloat i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string BigComplex::to_string(int digits) const {
    std::string s = re.to_string(digits);
    if (im.sign() >= 0) s += "+";
    return s + im.to_string(digits) + "i";
}

BigFloat abs(const BigComplex& z) {
    BigFloat r(z.bits());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

BigComplex unit_circle(const BigFloat& theta) {
    BigFloat s(theta.bits()), c(theta.bits());
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return BigComplex(std::move(c), std::move(s));
}

BigComplex exp(const BigComplex& z) {
    BigComplex u = unit_circle(z.im);
    return u * exp(z.re);
}

BigComplex pow(const BigFloat& base, const BigComplex& s) {
    if (base.sign() <= 0) throw PreconditionError("complex power of a non-positive base");
    BigFloat lb = log(base);
    return exp(BigComplex(s.re * lb, s.im * lb));
}

}  // namespace equivlk
