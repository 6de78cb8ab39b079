#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equivlk/bigfloat.hpp"
#include "equivlk/dirichlet.hpp"

namespace equivlk {

// Hurwitz zeta sum_{k>=0} (k+a)^{-s}, 0 < a <= 1, by Euler-Maclaurin with
// N direct terms and an adaptive number of Bernoulli corrections. The
// formula continues analytically, so any s != 1 is accepted. Absolute error
// is below 2^{-(bits+8)} for |s| up to a few dozen.
BigFloat hurwitz_zeta(const BigFloat& s, const Rational& a, long bits);
BigComplex hurwitz_zeta(const BigComplex& s, const Rational& a, long bits);
// d/ds of the above.
BigFloat hurwitz_zeta_derivative(const BigFloat& s, const Rational& a, long bits);

// L_S(s, chi) = f^{-s} sum_a chi(a) zeta_H(s, a/f) times the Euler factors
// (1 - chi(v) v^{-s}) for v in S. Requires Re s > 1 (NonConvergent otherwise).
BigComplex l_numeric(const BigComplex& s, const DirichletChar& chi, const std::vector<long>& removed, long bits);
// L'(s, chi) for real s != 1, through the continued Hurwitz formula.
BigComplex l_derivative_numeric(const BigFloat& s, const DirichletChar& chi, long bits);

enum class LValueKind { exact_negative, numeric, leading_term };

struct LValueRecord {
    DirichletChar chi = DirichletChar::trivial();
    std::string point;  // "1-r" values are written as the integer they equal
    std::vector<long> removed;
    LValueKind kind = LValueKind::numeric;
    std::optional<CycloNumber> exact;
    std::optional<BigComplex> numeric;
    long bits = 0;
};

// L_S(1-r, chi) as a record.
LValueRecord l_value_record_exact(long r, const DirichletChar& chi, const std::vector<long>& removed);
LValueRecord l_value_numeric(const BigComplex& s, const DirichletChar& chi, const std::vector<long>& removed, long bits);
LValueRecord l_value_numeric(long s, const DirichletChar& chi, const std::vector<long>& removed, long bits);

// One record per character mod f, all at the same point and S.
std::vector<LValueRecord> equivariant_l_vector_exact(long r, long f, const std::vector<long>& removed);

// tau(chi) = sum_{a mod f} chi(a) e^{2 pi i a/f} and W = tau/(i^delta sqrt f); chi primitive.
BigComplex gauss_sum(const DirichletChar& chi, long bits);
BigComplex root_number(const DirichletChar& chi, long bits);

// Archimedean data of one place: a real place carries n_plus copies of
// L_R(s) = pi^{-s/2} Gamma(s/2) and n_minus copies of L_R(s+1); a complex
// place carries (2 (2 pi)^{-s} Gamma(s))^n with n = n_plus + n_minus.
enum class PlaceType { real, complex };
struct GammaData {
    PlaceType type = PlaceType::real;
    long n_plus = 0;
    long n_minus = 0;
};
GammaData gamma_data(const DirichletChar& chi);

// epsilon_v(s); throws PreconditionError at a pole.
BigFloat archimedean_factor(const GammaData& g, const BigFloat& s, long bits);
// epsilon_v(s) ~ coeff * (s - s0)^order near the integer s0 (order < 0 at poles).
struct LaurentLead {
    long order = 0;
    BigFloat coeff;
};
LaurentLead archimedean_leading_term(const GammaData& g, long s0, long bits);

// Lambda(s, chi) = epsilon_inf(s, chi) L(s, chi) for real s > 1.
BigComplex completed_lambda(const BigFloat& s, const DirichletChar& chi, long bits);

// Lambda(s, chi) - W(chi) f^{1/2-s} Lambda(1-s, conj chi) at an integer s >= 2,
// the right side built from the exact value -B_{s,chi}/s and the symbolic
// leading term of the Gamma factor. When that value vanishes for parity
// reasons, the right side is the Gamma residue times L'(1-s, conj chi).
struct FeResidual {
    BigComplex residual;
    BigComplex lhs;
    bool derivative_route = false;
};
FeResidual fe_residual(const DirichletChar& chi, long s, long bits);

// L(1-r, chi) obtained from the numeric L(r, conj chi) through the functional
// equation; zero when the Gamma factor at 1-r has a pole.
BigComplex fe_transported_l_value(long r, const DirichletChar& chi, long bits);

// Continued-fraction recognition: p/q with q <= max_den and |x - p/q| < 2^{-tol_bits}.
std::optional<Rational> recognize_rational(const BigFloat& x, long max_den, long tol_bits);

long predicted_pi_power(long r, const GammaData& g);
struct PiRatioVerdict {
    bool rational = false;
    long pi_power = 0;
    Rational quotient;
    std::string numeric;  // the quotient as a decimal string
};
// epsilon_v(r) / epsilon*_v(1-r) divided by pi^{predicted power}, tested for rationality.
PiRatioVerdict pi_power_ratio_check(long r, const GammaData& g, long bits);

}  // namespace equivlk
