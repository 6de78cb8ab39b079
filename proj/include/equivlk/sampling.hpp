#pragma once

#include <cstdint>
#include <random>

#include "equivlk/group_ring.hpp"

namespace equivlk {

// Uniform integer in [lo, hi] from a 64-bit Mersenne twister. Uses a plain
// modulus so that draws are identical across standard libraries.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

inline QGElement random_element(std::mt19937_64& rng, const GroupPtr& g, long box = 9) {
    QGElement x(g);
    for (int i = 0; i < g->order(); ++i) x[i] = Rational(draw(rng, -box, box));
    return x;
}

inline QGMatrix random_matrix(std::mt19937_64& rng, const GroupPtr& g, size_t rows, size_t cols, long box = 9) {
    QGMatrix m(g, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = random_element(rng, g, box);
    return m;
}

// Presentation-style matrix: entries mix plain elements, p-multiples and
// multiples of augmentation-type elements 1 - g, plus a random p-multiple on
// the diagonal. Such matrices often have a finite cokernel of small order.
inline QGMatrix presentation_matrix(std::mt19937_64& rng, const GroupPtr& g, size_t rows, size_t cols, long p) {
    QGMatrix h(g, rows, cols);
    const QGElement one = QGElement::scalar(g, Rational(1));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            QGElement x = random_element(rng, g, 3);
            switch (draw(rng, 0, 2)) {
                case 0: x *= Rational(p); break;
                case 1: x = x * (one - QGElement::basis(g, static_cast<int>(draw(rng, 0, g->order() - 1)))); break;
                default: break;
            }
            if (i == j) x += QGElement::scalar(g, Rational(p * draw(rng, 0, 2)));
            h(i, j) = x;
        }
    return h;
}

}  // namespace equivlk
