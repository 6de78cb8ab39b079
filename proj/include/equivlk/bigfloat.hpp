#pragma once

#include <mpfr.h>

#include <string>

#include "equivlk/rational.hpp"

namespace equivlk {

inline constexpr long kDefaultBits = 128;

// RAII wrapper over an MPFR value. Binary operations round to the larger of
// the two operand precisions. No interval tracking: each step carries the
// usual half-ulp rounding error, so a chain of k operations loses about
// log2(k) bits.
class BigFloat {
public:
    explicit BigFloat(long bits = kDefaultBits);
    BigFloat(long value, long bits);
    BigFloat(double value, long bits);
    BigFloat(const Rational& value, long bits);
    BigFloat(const Integer& value, long bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat pi(long bits);
    static BigFloat catalan(long bits);
    static BigFloat zeta_ui(unsigned long n, long bits);
    // 2^e at the given precision.
    static BigFloat pow2(long e, long bits);

    long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Binary exponent: |x| in [2^(e-1), 2^e). Very negative for zero.
    long exponent() const;
    // Scientific decimal string with the given number of significant digits.
    std::string to_string(int digits = 0) const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

private:
    void ensure_prec(long bits);
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat gamma(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat floor(const BigFloat& x);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(long bits = kDefaultBits) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(0L, r.bits()) {}

    long bits() const { return re.bits() > im.bits() ? re.bits() : im.bits(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigFloat& o);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
    BigComplex operator-() const { return BigComplex(-re, -im); }

    BigComplex conj() const { return BigComplex(re, -im); }
    std::string to_string(int digits = 0) const;
};

BigFloat abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// e^{i theta}
BigComplex unit_circle(const BigFloat& theta);
// base^s for real base > 0.
BigComplex pow(const BigFloat& base, const BigComplex& s);

}  // namespace equivlk
