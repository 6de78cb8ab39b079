#pragma once

#include <cstddef>
#include <vector>

#include "equivlk/character.hpp"
#include "equivlk/group_ring.hpp"

namespace equivlk {

// An element of the centre of C[G], one value per irreducible character
// (ordered as in the character table).
struct CentralVector {
    std::vector<CycloNumber> components;

    friend bool operator==(const CentralVector& a, const CentralVector& b) { return a.components == b.components; }
    friend bool operator!=(const CentralVector& a, const CentralVector& b) { return !(a == b); }
    friend CentralVector operator*(const CentralVector& a, const CentralVector& b) {
        CentralVector r = a;
        for (size_t i = 0; i < r.components.size(); ++i) r.components[i] *= b.components.at(i);
        return r;
    }
};

// Character table and a full set of irreducible representations of G,
// computed once and shared by the group-ring algorithms.
class GroupAlgebra {
public:
    explicit GroupAlgebra(GroupPtr g);

    const GroupPtr& group() const { return group_; }
    const CharacterTable& table() const { return table_; }
    const Irrep& irrep(size_t chi) const { return irreps_.at(chi); }
    size_t num_characters() const { return table_.size(); }
    long degree(size_t chi) const { return table_.chars.at(chi).degree; }
    // e_chi = (n_chi/|G|) sum_g chi(g^-1) g, in table order.
    const std::vector<CGElement>& central_idempotents() const { return idempotents_; }

private:
    GroupPtr group_;
    CharacterTable table_;
    std::vector<Irrep> irreps_;
    std::vector<CGElement> idempotents_;
};

bool is_central(const CGElement& x);

// component_chi = chi(x)/n_chi, the scalar by which central x acts on V_chi.
// Throws PreconditionError for non-central x.
CentralVector central_decompose(const GroupAlgebra& a, const CGElement& x);
CGElement central_recompose(const GroupAlgebra& a, const CentralVector& v);

// The (n n_chi)-square matrix obtained by applying rho_chi entrywise.
Matrix<CycloNumber> represent(const GroupAlgebra& a, const CGMatrix& h, size_t chi);

struct ReducedCharPoly {
    size_t chi = 0;
    std::vector<CycloNumber> poly;  // alpha_0 .. alpha_{n n_chi}, monic
};

ReducedCharPoly reduced_char_poly(const GroupAlgebra& a, const CGMatrix& h, size_t chi);
// component_chi = (-1)^{n n_chi} alpha_{chi,0} = det rho_chi(H).
CentralVector reduced_norm(const GroupAlgebra& a, const CGMatrix& h);
// H* = sum_j z_j H^{j-1} with z_j central, (z_j)_chi = (-1)^{n n_chi + 1} alpha_{chi,j}.
CGMatrix generalized_adjoint(const GroupAlgebra& a, const CGMatrix& h);

inline CentralVector reduced_norm(const GroupAlgebra& a, const QGMatrix& h) { return reduced_norm(a, to_cyclo(h)); }
inline CGMatrix generalized_adjoint(const GroupAlgebra& a, const QGMatrix& h) { return generalized_adjoint(a, to_cyclo(h)); }

}  // namespace equivlk
