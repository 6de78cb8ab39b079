#include "equivlk/group_algebra.hpp"

#include "equivlk/errors.hpp"

namespace equivlk {

GroupAlgebra::GroupAlgebra(GroupPtr g) : group_(g), table_(character_table(g)) {
    const long m = group_->order();
    for (size_t chi = 0; chi < table_.size(); ++chi) {
        irreps_.push_back(irreducible_representation(table_, chi));
        CGElement e(group_);
        const CycloNumber scale(make_rational(table_.chars[chi].degree, m));
        for (int x = 0; x < m; ++x) e[x] = scale * table_.value(chi, group_->inv(x));
        idempotents_.push_back(std::move(e));
    }
}

bool is_central(const CGElement& x) {
    const FiniteGroup& g = *x.group();
    for (int y = 0; y < g.order(); ++y)
        for (int h = 0; h < g.order(); ++h)
            if (x[g.mul(g.mul(h, y), g.inv(h))] != x[y]) return false;
    return true;
}

CentralVector central_decompose(const GroupAlgebra& a, const CGElement& x) {
    if (!is_central(x)) throw PreconditionError("central_decompose needs a central element");
    CentralVector v;
    const FiniteGroup& g = *a.group();
    for (size_t chi = 0; chi < a.num_characters(); ++chi) {
        CycloNumber s;
        for (int y = 0; y < g.order(); ++y)
            if (!x[y].is_zero()) s += x[y] * a.table().value(chi, y);
        v.components.push_back(s / CycloNumber(a.degree(chi)));
    }
    return v;
}

CGElement central_recompose(const GroupAlgebra& a, const CentralVector& v) {
    if (v.components.size() != a.num_characters()) throw PreconditionError("central vector has the wrong length");
    CGElement r(a.group());
    for (size_t chi = 0; chi < a.num_characters(); ++chi)
        if (!v.components[chi].is_zero()) r += a.central_idempotents()[chi] * v.components[chi];
    return r;
}

Matrix<CycloNumber> represent(const GroupAlgebra& a, const CGMatrix& h, size_t chi) {
    const auto& rho = a.irrep(chi).matrices;
    const size_t d = static_cast<size_t>(a.degree(chi));
    Matrix<CycloNumber> out(h.rows() * d, h.cols() * d);
    const FiniteGroup& g = *a.group();
    for (size_t i = 0; i < h.rows(); ++i)
        for (size_t j = 0; j < h.cols(); ++j)
            for (int x = 0; x < g.order(); ++x) {
                const CycloNumber& c = h(i, j)[x];
                if (c.is_zero()) continue;
                const auto& r = rho[static_cast<size_t>(x)];
                for (size_t u = 0; u < d; ++u)
                    for (size_t w = 0; w < d; ++w)
                        if (!r(u, w).is_zero()) out(i * d + u, j * d + w) += c * r(u, w);
            }
    return out;
}

ReducedCharPoly reduced_char_poly(const GroupAlgebra& a, const CGMatrix& h, size_t chi) {
    if (!h.is_square()) throw PreconditionError("reduced characteristic polynomial needs a square matrix");
    return ReducedCharPoly{chi, characteristic_polynomial(represent(a, h, chi))};
}

CentralVector reduced_norm(const GroupAlgebra& a, const CGMatrix& h) {
    if (!h.is_square()) throw PreconditionError("reduced norm needs a square matrix");
    CentralVector v;
    for (size_t chi = 0; chi < a.num_characters(); ++chi) v.components.push_back(determinant(represent(a, h, chi)));
    return v;
}

CGMatrix generalized_adjoint(const GroupAlgebra& a, const CGMatrix& h) {
    if (!h.is_square()) throw PreconditionError("generalized adjoint needs a square matrix");
    const size_t n = h.rows();
    std::vector<ReducedCharPoly> rcp;
    size_t top = 0;
    for (size_t chi = 0; chi < a.num_characters(); ++chi) {
        rcp.push_back(reduced_char_poly(a, h, chi));
        top = std::max(top, rcp.back().poly.size() - 1);
    }
    CGMatrix result(a.group(), n, n);
    CGMatrix power = CGMatrix::identity(a.group(), n);
    for (size_t j = 1; j <= top; ++j) {
        CentralVector z;
        for (size_t chi = 0; chi < a.num_characters(); ++chi) {
            const auto& f = rcp[chi].poly;
            const size_t d = f.size() - 1;
            if (j > d) {
                z.components.emplace_back();
                continue;
            }
            z.components.push_back((d % 2 == 0) ? -f[j] : f[j]);
        }
        result += central_recompose(a, z) * power;
        if (j < top) power = power * h;
    }
    return result;
}

}  // namespace equivlk
