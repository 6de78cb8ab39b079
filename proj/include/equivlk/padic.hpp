#pragma once

#include <string>

#include "equivlk/rational.hpp"

namespace equivlk {

// Finite-precision element of Q_p (p odd) in the form p^val * unit, where the
// unit is known modulo p^prec (relative precision). A zero carries the
// absolute precision to which it is known to vanish.
//
// Precision bookkeeping: sums lose relative digits on cancellation, and
// absolute_precision() = val + prec drops when dividing by a non-unit, so a
// value never claims more correct digits than it has.
//
// A default-constructed PAdic is an exact zero with no prime attached; it is
// the additive identity for any prime and lets group-ring code zero-initialize.
class PAdic {
public:
    PAdic() = default;
    PAdic(const Rational& q, long p, long prec);
    PAdic(long value, long p, long prec) : PAdic(Rational(value), p, prec) {}

    static PAdic zero(long p, long absolute_prec);
    // p^val * unit where unit is reduced modulo p^prec; unit must be prime to p.
    static PAdic from_unit(long p, long prec, long val, const Integer& unit);

    long prime() const { return p_; }
    long precision() const { return prec_; }
    long valuation() const { return val_; }
    long absolute_precision() const { return val_ + prec_; }
    const Integer& unit() const { return unit_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return p_ == 0; }
    bool is_integral() const { return zero_ || val_ >= 0; }
    bool is_unit() const { return !zero_ && val_ == 0; }

    // Residue modulo p^k of an integral value; requires absolute_precision() >= k.
    Integer residue(long k) const;
    // Base-p digits of the unit, least significant first (prec of them).
    std::vector<long> unit_digits() const;

    PAdic& operator+=(const PAdic& o);
    PAdic& operator-=(const PAdic& o);
    PAdic& operator*=(const PAdic& o);
    PAdic& operator/=(const PAdic& o);
    friend PAdic operator+(PAdic a, const PAdic& b) { return a += b; }
    friend PAdic operator-(PAdic a, const PAdic& b) { return a -= b; }
    friend PAdic operator*(PAdic a, const PAdic& b) { return a *= b; }
    friend PAdic operator/(PAdic a, const PAdic& b) { return a /= b; }
    PAdic operator-() const;

    // Equal as elements known to min of both absolute precisions.
    friend bool operator==(const PAdic& a, const PAdic& b);
    friend bool operator!=(const PAdic& a, const PAdic& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_compatible(const PAdic& o) const;
    void strip();

    long p_ = 0;
    long prec_ = 0;
    long val_ = 0;
    Integer unit_ = 0;
    bool zero_ = true;
};

// The image of q in Q_p; same as the constructor.
inline PAdic padic_from_rational(const Rational& q, long p, long prec) { return PAdic(q, p, prec); }

Integer pow_integer(long base, long e);

}  // namespace equivlk
