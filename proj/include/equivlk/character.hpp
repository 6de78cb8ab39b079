#pragma once

#include <cstddef>
#include <vector>

#include "equivlk/cyclo.hpp"
#include "equivlk/group.hpp"
#include "equivlk/matrix.hpp"

namespace equivlk {

inline constexpr long kMaxCharacterTableOrder = 64;

struct Character {
    std::vector<CycloNumber> values;  // one per conjugacy class
    long degree = 1;
};

// Complete list of irreducible characters. The trivial character comes first,
// the rest are ordered by degree and then by a canonical ordering of values.
struct CharacterTable {
    GroupPtr group;
    ConjClassData classes;
    std::vector<Character> chars;

    size_t size() const { return chars.size(); }
    const CycloNumber& value(size_t chi, int g) const { return chars[chi].values[static_cast<size_t>(classes.class_of[static_cast<size_t>(g)])]; }
    // Index of the character g -> chi(g^-1).
    size_t contragredient(size_t chi) const;
    // Index of the character g -> sigma_t(chi(g)).
    size_t galois_twist(size_t chi, long t) const;
    size_t index_of(const std::vector<CycloNumber>& values) const;
};

// Exact character table. Values are computed modulo a prime p = 1 mod exponent
// from the class-algebra eigenvectors, lifted to Q(zeta_e) through eigenvalue
// multiplicities, and then checked exactly (orthogonality, sum of squared
// degrees). Throws BoundExceeded above max_order.
CharacterTable character_table(GroupPtr g, long max_order = kMaxCharacterTableOrder);

// Explicit matrix representation with character chi, realised on a minimal
// left ideal of Q(zeta_e)[G]. Column convention: rho(gh) = rho(g) rho(h).
struct Irrep {
    size_t chi = 0;
    std::vector<Matrix<CycloNumber>> matrices;  // indexed by group element
};

Irrep irreducible_representation(const CharacterTable& table, size_t chi);

}  // namespace equivlk
