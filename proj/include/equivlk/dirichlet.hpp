#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equivlk/cyclo.hpp"
#include "equivlk/group_ring.hpp"
#include "equivlk/padic.hpp"

namespace equivlk {

inline constexpr long kMaxCharacterModulus = 1000;

// Dirichlet character mod f, stored as a table of exponents: chi(a) = zeta_N^{e[a]}
// with N = order(), and e[a] = -1 when gcd(a, f) > 1.
class DirichletChar {
public:
    DirichletChar(long modulus, long order, std::vector<long> exps);
    static DirichletChar trivial(long modulus = 1);

    long modulus() const { return f_; }
    long order() const { return n_; }
    long conductor() const { return conductor_; }
    int parity() const { return parity_; }  // chi(-1)
    bool is_even() const { return parity_ == 1; }
    bool is_primitive() const { return conductor_ == f_; }
    bool is_trivial() const { return n_ == 1; }
    // Exponent of chi(a) in zeta_order(), or -1 when a is not a unit.
    long exponent(long a) const { return e_[static_cast<size_t>(mod_floor(a, f_))]; }
    CycloNumber value(long a) const;

    // The primitive character inducing this one (modulus = conductor()).
    DirichletChar primitive() const;
    DirichletChar conj() const { return power(-1); }
    DirichletChar power(long t) const;
    // Lift to a multiple of the modulus.
    DirichletChar induce(long modulus) const;

    friend bool operator==(const DirichletChar& a, const DirichletChar& b) { return a.f_ == b.f_ && a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const DirichletChar& a, const DirichletChar& b) { return !(a == b); }

    // e.g. "chi5[1,2]" built from modulus, conductor and exponent table digest
    std::string label() const;

private:
    long f_;
    long n_;
    std::vector<long> e_;
    long conductor_ = 1;
    int parity_ = 1;
};

// All phi(f) characters mod f; the trivial character first, then in
// lexicographic order of exponent tuples on the standard generators.
std::vector<DirichletChar> enumerate_characters(long f, long max_modulus = kMaxCharacterModulus);
// All primitive characters of conductor exactly f.
std::vector<DirichletChar> primitive_characters(long f);

// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli_number(long n);
// Bernoulli polynomial B_n(x).
Rational bernoulli_polynomial(long n, const Rational& x);

// f^{r-1} sum_{a=1}^{f} chi(a) B_r(a/f) for primitive chi (B_{1,trivial} = 1/2).
CycloNumber gen_bernoulli(long r, const DirichletChar& chi);

// Exact L_S(1-r, chi) = -B_{r,chi}/r times the Euler factors (1 - chi(v) v^{r-1})
// for v in S, or dividing the modulus, but not the conductor. An imprimitive
// chi therefore loses the Euler factors its modulus forces.
CycloNumber l_value_exact(long r, const DirichletChar& chi, const std::vector<long>& removed = {});
CycloNumber euler_factor(long r, const DirichletChar& chi, const std::vector<long>& removed);

struct GrossVerdict {
    bool holds = true;
    long checked = 0;
    std::string detail;
};
// sigma_t(L_S(1-r, chi)) == L_S(1-r, chi^t) for every chi mod f and t coprime to its order.
GrossVerdict gross_equivariance_check(long r, long f, const std::vector<long>& removed = {});

// theta_S(1-r) = sum_chi L_S(1-r, conj chi) e_chi in Q[(Z/f)^x]; group element i
// is sigma_a for a = unit_group_residues(f)[i].
struct StickelbergerElement {
    long f = 1;
    long r = 1;
    std::vector<long> removed;
    QGElement theta;
};

StickelbergerElement stickelberger(long r, long f, const std::vector<long>& removed);
// Partial-zeta form sum_a -f^{r-1} B_r(a/f)/r sigma_a^{-1} (S = primes dividing f).
QGElement stickelberger_partial_zeta(long r, long f);
// c coprime to f, to every prime in S, and to every prime l with (l - 1) | r.
bool admissible_twist(long c, long r, long f, const std::vector<long>& removed);
QGElement twisted_annihilator(long c, long r, long f);
// (c^r - sigma_c) theta in Z[G]?
bool integrality_check(const StickelbergerElement& theta, long c);

// Embedding Q(zeta_n) -> Q_p for n | p - 1: zeta_n goes to the Teichmueller
// lift of g^{(p-1)/n}, g the least primitive root mod p.
std::optional<PAdic> padic_image(const CycloNumber& x, long p, long prec);
std::string padic_embedding_note(long p);

struct SkeletonComponent {
    DirichletChar chi;
    CycloNumber value;  // L_S(1-r, conj chi)
    std::optional<PAdic> padic;
};
struct FractionalIdealSkeleton {
    long f = 1;
    long r = 2;
    long p = 3;
    std::vector<long> removed;
    std::vector<SkeletonComponent> components;  // even characters mod f
    bool partial = true;  // the regulator part is not computed
};
FractionalIdealSkeleton fractional_ideal_skeleton(long r, long f, const std::vector<long>& removed, long p, long prec = 12);

// 1 - sigma_v v^{1-r} in Z_p[(Z/f)^x] for each v.
std::vector<GroupRingElement<PAdic>> easy_annihilators(long r, long f, long p, const std::vector<long>& primes, long prec = 12);

struct KGroupModule {
    std::vector<Integer> invariants;  // nontrivial invariant factors
    Integer order;
};
// Z[C_d]/(sigma - q^r) through the Smith form of the circulant relation matrix.
KGroupModule kgroup_finite_field(long q, long d, long r);

}  // namespace equivlk
