#pragma once

#include <memory>
#include <string>
#include <vector>

namespace equivlk {

inline constexpr long kMaxGroupOrder = 512;

// Finite group given by its full multiplication table over element indices
// 0..m-1. Axioms are verified on construction.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<int>> table, std::string name = "", std::vector<std::string> labels = {});

    int order() const { return m_; }
    int identity() const { return id_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * static_cast<size_t>(m_) + static_cast<size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
    int element_order(int a) const { return orders_[static_cast<size_t>(a)]; }
    int pow(int a, long k) const;
    int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    bool is_abelian() const;
    const std::string& name() const { return name_; }
    const std::string& label(int a) const { return labels_[static_cast<size_t>(a)]; }
    std::vector<std::vector<int>> table() const;

private:
    int m_;
    int id_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<int> orders_;
    std::string name_;
    std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ConjClassData {
    std::vector<std::vector<int>> classes;  // classes[0] = {identity}; each sorted
    std::vector<int> class_of;
    std::vector<int> representative;
    std::vector<int> inverse_class;
    long exponent = 1;
};

ConjClassData conjugacy_classes(const FiniteGroup& g);

// Commutator subgroup as a sorted list of element indices.
std::vector<int> commutator_subgroup(const FiniteGroup& g);

// Product of cyclic groups Z/d_1 x ... with lexicographic element indexing
// (last factor varies fastest). Throws BoundExceeded above max_order.
GroupPtr from_abelian_invariants(const std::vector<long>& d, long max_order = kMaxGroupOrder);
GroupPtr cyclic_group(long n);
GroupPtr symmetric_group_s3();
GroupPtr dihedral_group_d4();
GroupPtr quaternion_group_q8();
GroupPtr alternating_group_a4();
// Unit group (Z/f)^x, elements ordered by their least positive residue.
GroupPtr unit_group(long f);
// The residue represented by an element of unit_group(f).
std::vector<long> unit_group_residues(long f);

// Named fixtures: C<n>, S3, D4, Q8, A4, and Klein "V4".
GroupPtr group_by_name(const std::string& name);

// Group generated by permutations on {0..deg-1}; identity first, then BFS order.
GroupPtr group_from_permutations(const std::vector<std::vector<int>>& generators, std::string name);

}  // namespace equivlk
