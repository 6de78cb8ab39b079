#pragma once

#include <string>
#include <vector>

#include "equivlk/bigfloat.hpp"
#include "equivlk/rational.hpp"

namespace equivlk {

// Exact element of the cyclotomic field Q(zeta_n), stored in the power basis
// zeta_n^0 .. zeta_n^{phi(n)-1} modulo the n-th cyclotomic polynomial.
//
// Every value is kept at its minimal conductor: the smallest n (never
// congruent to 2 mod 4, with 1 standing for Q) such that the value lies in
// Q(zeta_n). Structural equality is therefore field equality, whatever
// conductors the operands were built from. zeta_n is embedded in C as
// exp(2 pi i / n).
class CycloNumber {
public:
    CycloNumber();
    CycloNumber(long value);  // NOLINT(google-explicit-constructor)
    CycloNumber(const Rational& value);  // NOLINT(google-explicit-constructor)

    // zeta_n^k for any integer k and n >= 1.
    static CycloNumber root_of_unity(long k, long n);
    // sum_k c[k] zeta_n^k over all k in [0, c.size()), any n >= 1.
    static CycloNumber from_power_sum(long n, const std::vector<Rational>& c);
    // Coefficients in the reduced power basis of Q(zeta_n); requires c.size() == phi(n).
    static CycloNumber from_basis(long n, std::vector<Rational> c);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficients of this value written in Q(zeta_m); m must be a multiple of conductor().
    std::vector<Rational> coeffs_in(long m) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return n_ == 1; }
    Rational to_rational() const;  // throws PreconditionError when not rational

    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    CycloNumber& operator/=(const CycloNumber& o);
    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
    CycloNumber operator-() const;

    friend bool operator==(const CycloNumber& a, const CycloNumber& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    // Throws DivisionByZero for zero.
    CycloNumber inverse() const;
    // Image under zeta -> zeta^t; t must be coprime to conductor().
    CycloNumber galois_conjugate(long t) const;
    CycloNumber complex_conjugate() const { return galois_conjugate(-1); }

    std::string to_string() const;

private:
    CycloNumber(long n, std::vector<Rational> c);
    void normalize();

    long n_;
    std::vector<Rational> c_;
};

// Same as x.galois_conjugate(t) but validates t against the ambient conductor n.
CycloNumber galois_conjugate(const CycloNumber& x, long t, long n);

// Numeric image under zeta_n -> exp(2 pi i/n) at the given working precision.
BigComplex embed_complex(const CycloNumber& x, long bits);

// The n-th cyclotomic polynomial, coefficients from degree 0 upwards.
const std::vector<long>& cyclotomic_polynomial(long n);

}  // namespace equivlk
