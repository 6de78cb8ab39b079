#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace equivlk {

// Exact rational in lowest terms with positive denominator (mpq canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// p-adic valuation of a nonzero integer.
long valuation(const Integer& x, long p);
// p-adic valuation of a nonzero rational (may be negative).
long valuation(const Rational& q, long p);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);
bool is_prime(long n);
// Distinct prime divisors in increasing order.
std::vector<long> prime_divisors(long n);
// Returns x mod m in [0, m).
long mod_floor(long x, long m);

}  // namespace equivlk
