#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "equivlk/character.hpp"
#include "equivlk/errors.hpp"
#include "equivlk/group.hpp"

using namespace equivlk;

namespace {

CycloNumber z(long k, long n) { return CycloNumber::root_of_unity(k, n); }
CycloNumber c(long v) { return CycloNumber(v); }

// Fixture tables are keyed by (class size, element order) of the class, which
// identifies every class of these groups except where noted, so the check does
// not depend on class ordering.
using Key = std::pair<size_t, long>;

std::multiset<std::vector<std::string>> table_rows(const CharacterTable& t, const std::vector<Key>& column_keys) {
    std::multiset<std::vector<std::string>> rows;
    for (const auto& ch : t.chars) {
        std::vector<std::string> row;
        for (const auto& key : column_keys) {
            for (size_t j = 0; j < t.classes.classes.size(); ++j) {
                const Key kj{t.classes.classes[j].size(), t.group->element_order(t.classes.representative[j])};
                if (kj == key) {
                    row.push_back(ch.values[j].to_string());
                    break;
                }
            }
        }
        rows.insert(row);
    }
    return rows;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
    std::set<int> s(h.begin(), h.end());
    for (int a : h)
        for (int b : h)
            if (!s.count(g.mul(a, b))) return false;
    for (int x = 0; x < g.order(); ++x)
        for (int a : h)
            if (!s.count(g.mul(g.mul(x, a), g.inv(x)))) return false;
    return true;
}

void check_second_orthogonality(const CharacterTable& t) {
    const auto& cl = t.classes;
    const long m = t.group->order();
    for (size_t a = 0; a < cl.classes.size(); ++a)
        for (size_t b = 0; b < cl.classes.size(); ++b) {
            CycloNumber s;
            for (const auto& ch : t.chars) s += ch.values[a] * ch.values[b].complex_conjugate();
            const long centralizer = m / static_cast<long>(cl.classes[a].size());
            CHECK(s == c(a == b ? centralizer : 0));
        }
}

}  // namespace

TEST_CASE("abelian invariants") {
    auto c2 = from_abelian_invariants({2});
    CHECK(c2->order() == 2);
    CHECK(c2->mul(1, 1) == 0);
    auto v4 = from_abelian_invariants({2, 2});
    CHECK(conjugacy_classes(*v4).exponent == 2);
    auto c6 = from_abelian_invariants({6});
    auto cl = conjugacy_classes(*c6);
    CHECK(cl.exponent == 6);
    CHECK(cl.classes.size() == 6);
    CHECK_THROWS_AS(from_abelian_invariants({16, 16, 4}), BoundExceeded);
    CHECK_THROWS_AS(from_abelian_invariants({1}), PreconditionError);
}

TEST_CASE("group axioms are checked") {
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), PreconditionError);
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1}}), PreconditionError);
    CHECK_NOTHROW(FiniteGroup({{0, 1}, {1, 0}}));
}

TEST_CASE("commutator subgroups") {
    CHECK(commutator_subgroup(*cyclic_group(6)).size() == 1);
    auto s3 = symmetric_group_s3();
    auto d = commutator_subgroup(*s3);
    CHECK(d.size() == 3);
    for (int x : d) CHECK(s3->element_order(x) != 2);
    auto q8 = quaternion_group_q8();
    auto dq = commutator_subgroup(*q8);
    CHECK(dq.size() == 2);
    CHECK(std::find(dq.begin(), dq.end(), 4) != dq.end());  // -1
    CHECK(commutator_subgroup(*dihedral_group_d4()).size() == 2);
    CHECK(commutator_subgroup(*alternating_group_a4()).size() == 4);
    for (auto name : {"S3", "D4", "Q8", "A4"}) {
        auto g = group_by_name(name);
        CHECK(is_normal_subgroup(*g, commutator_subgroup(*g)));
    }
}

TEST_CASE("small cyclic character tables") {
    auto t2 = character_table(cyclic_group(2));
    REQUIRE(t2.size() == 2);
    CHECK(t2.chars[0].values == std::vector<CycloNumber>{c(1), c(1)});
    CHECK(t2.chars[1].values == std::vector<CycloNumber>{c(1), c(-1)});
    auto t3 = character_table(cyclic_group(3));
    REQUIRE(t3.size() == 3);
    for (const auto& ch : t3.chars) CHECK(ch.degree == 1);
    std::set<std::string> g_values;
    for (const auto& ch : t3.chars) g_values.insert(ch.values[static_cast<size_t>(t3.classes.class_of[1])].to_string());
    CHECK(g_values == std::set<std::string>{c(1).to_string(), z(1, 3).to_string(), z(2, 3).to_string()});
}

TEST_CASE("S3 character table") {
    auto t = character_table(symmetric_group_s3());
    REQUIRE(t.size() == 3);
    std::vector<long> degrees;
    for (const auto& ch : t.chars) degrees.push_back(ch.degree);
    CHECK(degrees == std::vector<long>{1, 1, 2});
    const std::vector<Key> cols{{1, 1}, {3, 2}, {2, 3}};
    std::multiset<std::vector<std::string>> want{{"1", "1", "1"}, {"1", "-1", "1"}, {"2", "0", "-1"}};
    CHECK(table_rows(t, cols) == want);
    // ordering: trivial, sign, 2-dim
    CHECK(t.chars[1].values[static_cast<size_t>(t.classes.class_of[1])] == c(-1));
    check_second_orthogonality(t);
}

TEST_CASE("D4 and Q8 character tables") {
    // D4 and Q8 share a character table. Class keys: {1}, {z}, three classes of size 2.
    for (auto name : {"D4", "Q8"}) {
        auto t = character_table(group_by_name(name));
        REQUIRE(t.size() == 5);
        long deg2 = 0;
        for (const auto& ch : t.chars) deg2 += ch.degree == 2;
        CHECK(deg2 == 1);
        const auto& two = t.chars.back();
        CHECK(two.degree == 2);
        // The 2-dim character vanishes off the centre and is -2 on the central involution.
        for (size_t j = 0; j < t.classes.classes.size(); ++j) {
            const size_t sz = t.classes.classes[j].size();
            if (j == 0) CHECK(two.values[j] == c(2));
            else if (sz == 1) CHECK(two.values[j] == c(-2));
            else CHECK(two.values[j] == c(0));
        }
        check_second_orthogonality(t);
        // linear characters count equals [G : G']
        long linear = 0;
        for (const auto& ch : t.chars) linear += ch.degree == 1;
        CHECK(linear == t.group->order() / static_cast<long>(commutator_subgroup(*t.group).size()));
    }
}

TEST_CASE("A4 character table") {
    auto t = character_table(alternating_group_a4());
    REQUIRE(t.size() == 4);
    // classes: {1}, 3 double transpositions, two classes of 3-cycles of size 4
    std::vector<long> degrees;
    for (const auto& ch : t.chars) degrees.push_back(ch.degree);
    CHECK(degrees == std::vector<long>{1, 1, 1, 3});
    const auto w = z(1, 3);
    std::multiset<std::set<std::string>> got, want;
    for (const auto& ch : t.chars) {
        std::set<std::string> vals;
        for (const auto& v : ch.values) vals.insert(v.to_string());
        got.insert(vals);
    }
    want.insert({c(1).to_string()});
    want.insert({c(1).to_string(), w.to_string(), (w * w).to_string()});
    want.insert({c(1).to_string(), w.to_string(), (w * w).to_string()});
    want.insert({c(3).to_string(), c(-1).to_string(), c(0).to_string()});
    CHECK(got == want);
    check_second_orthogonality(t);
}

TEST_CASE("character table invariants across groups") {
    std::vector<GroupPtr> groups{cyclic_group(1), cyclic_group(6), from_abelian_invariants({2, 4}), from_abelian_invariants({3, 3}),
                                 symmetric_group_s3(), dihedral_group_d4(), quaternion_group_q8(), alternating_group_a4(),
                                 unit_group(15), unit_group(21),
                                 group_from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4"),
                                 group_from_permutations({{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, "D5")};
    for (const auto& g : groups) {
        CAPTURE(g->name());
        auto t = character_table(g);
        long sumsq = 0, linear = 0;
        for (const auto& ch : t.chars) {
            sumsq += ch.degree * ch.degree;
            linear += ch.degree == 1;
            CHECK(g->order() % ch.degree == 0);
            for (const auto& v : ch.values) CHECK(t.classes.exponent % v.conductor() == 0);
        }
        CHECK(sumsq == g->order());
        CHECK(linear * static_cast<long>(commutator_subgroup(*g).size()) == g->order());
        check_second_orthogonality(t);
    }
    CHECK_THROWS_AS(character_table(cyclic_group(65)), BoundExceeded);
}

TEST_CASE("irreducible representations") {
    auto t2 = character_table(cyclic_group(2));
    auto sgn = irreducible_representation(t2, 1);
    CHECK(sgn.matrices[1](0, 0) == c(-1));

    auto t3 = character_table(cyclic_group(3));
    for (size_t chi = 0; chi < 3; ++chi) {
        auto r = irreducible_representation(t3, chi);
        CHECK(r.matrices[1](0, 0) == t3.value(chi, 1));
    }

    auto s3 = symmetric_group_s3();
    auto t = character_table(s3);
    auto r = irreducible_representation(t, 2);
    for (int x = 0; x < 6; ++x) {
        const auto& m = r.matrices[static_cast<size_t>(x)];
        if (s3->element_order(x) == 2) {
            CHECK(characteristic_polynomial(m) == std::vector<CycloNumber>{c(-1), c(0), c(1)});
        }
        if (s3->element_order(x) == 3) CHECK(determinant(m) == c(1));
    }

    for (auto name : {"D4", "Q8", "A4"}) {
        auto tg = character_table(group_by_name(name));
        for (size_t chi = 0; chi < tg.size(); ++chi) {
            auto rep = irreducible_representation(tg, chi);
            const auto& g = *tg.group;
            for (int x = 0; x < g.order(); ++x) {
                CHECK(rep.matrices[static_cast<size_t>(x)].trace() == tg.value(chi, x));
                for (int y = 0; y < g.order(); ++y)
                    CHECK(rep.matrices[static_cast<size_t>(x)] * rep.matrices[static_cast<size_t>(y)] == rep.matrices[static_cast<size_t>(g.mul(x, y))]);
            }
        }
    }
}

TEST_CASE("contragredient and galois twist") {
    auto t = character_table(cyclic_group(5));
    for (size_t chi = 0; chi < t.size(); ++chi) {
        size_t d = t.contragredient(chi);
        for (size_t j = 0; j < t.chars[chi].values.size(); ++j) CHECK(t.chars[d].values[j] == t.chars[chi].values[j].complex_conjugate());
        CHECK(t.contragredient(d) == chi);
    }
    CHECK_THROWS_AS(t.galois_twist(1, 5), PreconditionError);
}
