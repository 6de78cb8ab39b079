#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "equivlk/group_algebra.hpp"
#include "equivlk/zmod.hpp"

namespace equivlk {

inline constexpr size_t kMaxMinors = 5000;
inline constexpr long kDefaultPrecision = 12;
inline constexpr long kMaxModuleLogOrder = 8;

// Cokernel of Z_p[G]^a -> Z_p[G]^b, y -> y h (row vectors), with h an a x b
// matrix of p-integral rationals.
struct Presentation {
    GroupPtr group;
    long p = 3;
    long prec = kDefaultPrecision;
    QGMatrix h;
};

// Reduced norms of the b x b row-minors of h. For a < b the class is zero.
// Non-quadratic inputs (a > b) only give a lower bound for the maximal invariant.
struct FittClass {
    std::vector<CentralVector> generators;
    bool quadratic = false;
    bool zero_class = false;
    bool lower_bound = false;
};

FittClass fitting_invariant(const GroupAlgebra& a, const Presentation& pr, size_t max_minors = kMaxMinors);

// Finite abelian p-group ⊕ Z/p^{exps[k]} with a left G-action: the coordinates
// of g·x are x * action[g] (row vectors, component k read mod p^{exps[k]}).
struct FiniteGModule {
    GroupPtr group;
    long p = 3;
    long prec = kDefaultPrecision;
    std::vector<long> exps;
    std::vector<ModMat> action;

    long log_order() const;
    size_t rank() const { return exps.size(); }
};

// Smith form of the relation lattice over Z/p^N with the induced action. Throws
// PreconditionError when the cokernel is infinite (or not killed by p^N) and
// BoundExceeded when |M| > p^max_log_order.
FiniteGModule cokernel_module(const Presentation& pr, long max_log_order = kMaxModuleLogOrder);

// Ann(M) in (Z/p^N)[G] as a submodule of (Z/p^N)^|G| (coefficient vectors).
HowellSpan annihilator_bruteforce(const FiniteGModule& m);

// Coefficient vector of a p-integral rational group ring element mod p^N.
ModVec reduce_element(const ZpN& ring, const QGElement& x);
// Z/p^N-span of {c·x : c a class sum, x in gens}, i.e. the module generated
// over the centre of Z_p[G] (the two-sided ideal for abelian G).
HowellSpan central_span(const ZpN& ring, const GroupAlgebra& a, const std::vector<QGElement>& gens);
// Z/p^N-span of {g·x : g in G, x in gens}: the left ideal.
HowellSpan left_ideal_span(const ZpN& ring, const std::vector<QGElement>& gens);

// Generators of Fitt as rational central group-ring elements.
std::vector<QGElement> fitt_elements(const GroupAlgebra& a, const FittClass& f);

bool denominator_trivial(const FiniteGroup& g, long p);

// Element of H_p(G) used as the multiplier in annihilation checks: 1 when
// p does not divide |G'|, otherwise the p-part of |G|.
Integer denominator_sample(const FiniteGroup& g, long p);

struct AnnihilationVerdict {
    bool annihilates = true;
    long module_log_order = 0;
    std::vector<CentralVector> fitt_generators;
    std::optional<size_t> failing_generator;
    std::string detail;
};

// Checks that x·h_p·f annihilates the cokernel for every Fitt generator f.
AnnihilationVerdict annihilation_check(const GroupAlgebra& a, const Presentation& pr, const std::optional<QGElement>& x = std::nullopt,
                                       long max_log_order = kMaxModuleLogOrder);

bool is_p_integral(const CGMatrix& m, long p);

struct IntegrityProbe {
    long trials = 0;
    long integral = 0;
    bool expected_trivial = true;  // denominator_trivial(G, p)
    std::optional<QGMatrix> witness;  // first sampled H with non-integral H*
};

// Samples square H over Z[G] (size 1..max_n, coefficients in [-9, 9]) and
// tests p-integrality of the generalized adjoint.
IntegrityProbe adjoint_integrality_probe(const GroupAlgebra& a, long p, long trials, std::mt19937_64& rng, size_t max_n = 3);

// Fitting ideal of the presentation over the commutative ring Z_p[G] (abelian
// G only), from b x b minor determinants expanded along rows.
std::vector<QGElement> classical_fitting_generators(const Presentation& pr);
QGElement commutative_determinant(const QGMatrix& m);

}  // namespace equivlk
