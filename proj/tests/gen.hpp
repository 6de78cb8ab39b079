#pragma once

// Small seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "equivlk/cyclo.hpp"
#include "equivlk/rational.hpp"

namespace testgen {

class Gen {
public:
    explicit Gen(uint64_t seed) : rng_(seed) {}
    long range(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<uint64_t>(hi - lo + 1)); }
    equivlk::Rational rational(long box = 9, long den_box = 5) {
        return equivlk::make_rational(range(-box, box), range(1, den_box));
    }
    // Random element of Q(zeta_n) with small coefficients; sparse-ish.
    equivlk::CycloNumber cyclo(long n) {
        std::vector<equivlk::Rational> c(static_cast<size_t>(n));
        for (auto& x : c)
            if (range(0, 2) != 0) x = rational();
        return equivlk::CycloNumber::from_power_sum(n, c);
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testgen

#include "equivlk/group_ring.hpp"

namespace testgen {

inline equivlk::QGElement random_element(Gen& g, const equivlk::GroupPtr& grp, long box = 9) {
    equivlk::QGElement x(grp);
    for (int i = 0; i < grp->order(); ++i) x[i] = equivlk::Rational(g.range(-box, box));
    return x;
}

inline equivlk::QGMatrix random_matrix(Gen& g, const equivlk::GroupPtr& grp, size_t rows, size_t cols, long box = 9) {
    equivlk::QGMatrix m(grp, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = random_element(g, grp, box);
    return m;
}

}  // namespace testgen
