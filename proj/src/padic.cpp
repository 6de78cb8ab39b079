#include "equivlk/padic.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "equivlk/errors.hpp"

namespace equivlk {

Integer pow_integer(long base, long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

namespace {

Integer mod_pow(const Integer& x, long p, long k) {
    Integer m = pow_integer(p, k);
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) throw DivisionByZero("p-adic unit not invertible");
    return r;
}

}  // namespace

PAdic::PAdic(const Rational& q, long p, long prec) : p_(p), prec_(prec) {
    if (p < 3 || !is_prime(p)) throw PreconditionError("p-adic prime must be an odd prime, got " + std::to_string(p));
    if (prec < 1) throw PreconditionError("p-adic precision must be positive");
    if (sgn(q) == 0) {
        zero_ = true;
        val_ = prec;
        prec_ = 0;
        return;
    }
    zero_ = false;
    Integer num = q.get_num();
    Integer den = q.get_den();
    val_ = 0;
    while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p))) {
        num /= p;
        ++val_;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
        den /= p;
        --val_;
    }
    Integer m = pow_integer(p, prec);
    unit_ = mod_pow(num * inverse_mod(den, m), p, prec);
}

PAdic PAdic::zero(long p, long absolute_prec) {
    PAdic z;
    z.p_ = p;
    z.val_ = absolute_prec;
    z.prec_ = 0;
    z.zero_ = true;
    return z;
}

PAdic PAdic::from_unit(long p, long prec, long val, const Integer& unit) {
    if (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p)))
        throw PreconditionError("unit part divisible by p");
    PAdic x;
    x.p_ = p;
    x.prec_ = prec;
    x.val_ = val;
    x.zero_ = false;
    x.unit_ = mod_pow(unit, p, prec);
    return x;
}

Integer PAdic::residue(long k) const {
    if (p_ == 0) return 0;
    if (!is_integral()) throw PreconditionError("residue of a non-integral p-adic number");
    if (absolute_precision() < k) throw PreconditionError("insufficient p-adic precision for residue");
    if (zero_) return 0;
    if (val_ >= k) return 0;
    return mod_pow(unit_ * pow_integer(p_, val_), p_, k);
}

std::vector<long> PAdic::unit_digits() const {
    std::vector<long> d;
    Integer u = unit_;
    for (long i = 0; i < prec_; ++i) {
        Integer r = u % p_;
        d.push_back(r.get_si());
        u /= p_;
    }
    return d;
}

void PAdic::check_compatible(const PAdic& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) throw PreconditionError("mixing p-adic numbers of different primes");
}

void PAdic::strip() {
    if (zero_) return;
    while (prec_ > 0 && mpz_divisible_ui_p(unit_.get_mpz_t(), static_cast<unsigned long>(p_))) {
        if (unit_ == 0) {
            zero_ = true;
            val_ += prec_;
            prec_ = 0;
            unit_ = 0;
            return;
        }
        unit_ /= p_;
        ++val_;
        --prec_;
    }
    if (prec_ == 0) {
        zero_ = true;
        unit_ = 0;
    }
}

PAdic& PAdic::operator+=(const PAdic& o) {
    check_compatible(o);
    if (o.p_ == 0) return *this;
    if (p_ == 0) return *this = o;
    const long abs_a = absolute_precision();
    const long abs_b = o.absolute_precision();
    const long abs_r = std::min(abs_a, abs_b);
    if (o.zero_ || zero_) {
        PAdic r = o.zero_ ? *this : o;
        if (r.zero_) return *this = zero(p_, abs_r);
        // shrink relative precision of the nonzero operand to the joint absolute precision
        long new_prec = std::min(r.prec_, abs_r - r.val_);
        if (new_prec <= 0) return *this = zero(p_, abs_r);
        r.prec_ = new_prec;
        r.unit_ = mod_pow(r.unit_, p_, new_prec);
        return *this = r;
    }
    const long v = std::min(val_, o.val_);
    const long prec = abs_r - v;
    if (prec <= 0) return *this = zero(p_, abs_r);
    Integer a = unit_ * pow_integer(p_, val_ - v);
    Integer b = o.unit_ * pow_integer(p_, o.val_ - v);
    unit_ = mod_pow(a + b, p_, prec);
    val_ = v;
    prec_ = prec;
    if (unit_ == 0) return *this = zero(p_, abs_r);
    strip();
    return *this;
}

PAdic PAdic::operator-() const {
    PAdic r(*this);
    if (!r.zero_ && r.p_ != 0) r.unit_ = mod_pow(-r.unit_, p_, prec_);
    return r;
}

PAdic& PAdic::operator-=(const PAdic& o) { return *this += -o; }

PAdic& PAdic::operator*=(const PAdic& o) {
    check_compatible(o);
    if (p_ == 0) return *this;
    if (o.p_ == 0) return *this = o;
    if (zero_ || o.zero_) return *this = zero(p_, val_ + o.val_);
    const long prec = std::min(prec_, o.prec_);
    unit_ = mod_pow(unit_ * o.unit_, p_, prec);
    val_ += o.val_;
    prec_ = prec;
    return *this;
}

PAdic& PAdic::operator/=(const PAdic& o) {
    check_compatible(o);
    if (o.p_ == 0 || o.zero_) throw DivisionByZero("p-adic division by zero");
    if (p_ == 0) return *this;
    if (zero_) {
        val_ -= o.val_;
        return *this;
    }
    const long prec = std::min(prec_, o.prec_);
    Integer m = pow_integer(p_, prec);
    unit_ = mod_pow(unit_ * inverse_mod(o.unit_, m), p_, prec);
    val_ -= o.val_;
    prec_ = prec;
    return *this;
}

bool operator==(const PAdic& a, const PAdic& b) {
    if (a.p_ == 0 && b.p_ == 0) return true;
    if (a.p_ == 0) return b.zero_;
    if (b.p_ == 0) return a.zero_;
    if (a.p_ != b.p_) return false;
    const long k = std::min(a.absolute_precision(), b.absolute_precision());
    // compare a - b to zero at absolute precision k
    PAdic d = a - b;
    return d.zero_ || d.val_ >= k;
}

std::string PAdic::to_string() const {
    if (p_ == 0) return "0";
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^" << val_ << ")";
        return os.str();
    }
    os << unit_.get_str() << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << absolute_precision() << ")";
    return os.str();
}

}  // namespace equivlk
