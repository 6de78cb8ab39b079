#include "equivlk/rational.hpp"

#include <numeric>
#include <vector>

#include "equivlk/errors.hpp"

namespace equivlk {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
    std::string str(s);
    Rational q;
    if (str.empty() || q.set_str(str, 10) != 0) throw SchemaError("malformed rational: '" + str + "'");
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + str);
    q.canonicalize();
    return q;
}

long valuation(const Integer& x, long p) {
    if (x == 0) throw PreconditionError("valuation of zero");
    Integer y = abs(x);
    long v = 0;
    while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

long valuation(const Rational& q, long p) {
    return valuation(Integer(q.get_num()), p) - (q.get_den() == 1 ? 0 : valuation(Integer(q.get_den()), p));
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    long result = n;
    for (long p : prime_divisors(n)) result = result / p * (p - 1);
    return result;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    if (n < 0) n = -n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long mod_floor(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace equivlk
