#include "equivlk/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "equivlk/errors.hpp"
#include "equivlk/rational.hpp"

namespace equivlk {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name, std::vector<std::string> labels)
    : m_(static_cast<int>(table.size())), name_(std::move(name)), labels_(std::move(labels)) {
    if (m_ < 1) throw PreconditionError("group table must be non-empty");
    if (m_ > kMaxGroupOrder) throw BoundExceeded("group order " + std::to_string(m_) + " exceeds " + std::to_string(kMaxGroupOrder));
    const size_t m = static_cast<size_t>(m_);
    table_.reserve(m * m);
    for (const auto& row : table) {
        if (row.size() != m) throw PreconditionError("group table must be square");
        for (int x : row) {
            if (x < 0 || x >= m_) throw PreconditionError("group table entry out of range");
            table_.push_back(x);
        }
    }
    // identity
    id_ = -1;
    for (int e = 0; e < m_ && id_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < m_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) id_ = e;
    }
    if (id_ < 0) throw PreconditionError("group table has no identity");
    inv_.assign(m, -1);
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b)
            if (mul(a, b) == id_ && mul(b, a) == id_) inv_[static_cast<size_t>(a)] = b;
    if (std::find(inv_.begin(), inv_.end(), -1) != inv_.end()) throw PreconditionError("group table lacks inverses");
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b) {
            const int ab = mul(a, b);
            for (int c = 0; c < m_; ++c)
                if (mul(ab, c) != mul(a, mul(b, c))) throw PreconditionError("group table is not associative");
        }
    orders_.assign(m, 1);
    for (int a = 0; a < m_; ++a) {
        int x = a;
        while (x != id_) {
            x = mul(x, a);
            ++orders_[static_cast<size_t>(a)];
        }
    }
    if (labels_.size() != m) {
        labels_.clear();
        for (int a = 0; a < m_; ++a) labels_.push_back("g" + std::to_string(a));
    }
}

int FiniteGroup::pow(int a, long k) const {
    const long o = element_order(a);
    k = mod_floor(k, o);
    int r = id_;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < m_; ++a)
        for (int b = a + 1; b < m_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(static_cast<size_t>(m_));
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b) t[static_cast<size_t>(a)].push_back(mul(a, b));
    return t;
}

ConjClassData conjugacy_classes(const FiniteGroup& g) {
    ConjClassData d;
    const int m = g.order();
    d.class_of.assign(static_cast<size_t>(m), -1);
    auto build = [&](int start) {
        std::set<int> cls;
        for (int x = 0; x < m; ++x) cls.insert(g.mul(g.mul(x, start), g.inv(x)));
        const int idx = static_cast<int>(d.classes.size());
        for (int y : cls) d.class_of[static_cast<size_t>(y)] = idx;
        d.classes.emplace_back(cls.begin(), cls.end());
        d.representative.push_back(*cls.begin());
    };
    build(g.identity());
    for (int a = 0; a < m; ++a)
        if (d.class_of[static_cast<size_t>(a)] < 0) build(a);
    for (const auto& cls : d.classes) d.inverse_class.push_back(d.class_of[static_cast<size_t>(g.inv(cls.front()))]);
    d.exponent = 1;
    for (int a = 0; a < m; ++a) d.exponent = lcm_long(d.exponent, g.element_order(a));
    return d;
}

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
    const int m = g.order();
    std::vector<char> in(static_cast<size_t>(m), 0);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!in[static_cast<size_t>(x)]) {
            in[static_cast<size_t>(x)] = 1;
            elems.push_back(x);
        }
    };
    add(g.identity());
    std::vector<int> gens;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int c = g.commutator(a, b);
            if (!in[static_cast<size_t>(c)]) gens.push_back(c);
            add(c);
        }
    // closure under products (finite, so this is the generated subgroup)
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            add(g.mul(elems[i], elems[j]));
            add(g.mul(elems[j], elems[i]));
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

GroupPtr from_abelian_invariants(const std::vector<long>& d, long max_order) {
    long m = 1;
    for (long x : d) {
        if (x < 2) throw PreconditionError("abelian invariants must be >= 2");
        if (m > max_order / x) throw BoundExceeded("abelian group order exceeds " + std::to_string(max_order));
        m *= x;
    }
    const size_t n = static_cast<size_t>(m);
    auto digits = [&](long idx) {
        std::vector<long> v(d.size());
        for (size_t i = d.size(); i-- > 0;) {
            v[i] = idx % d[i];
            idx /= d[i];
        }
        return v;
    };
    auto index = [&](const std::vector<long>& v) {
        long idx = 0;
        for (size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + v[i];
        return static_cast<int>(idx);
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (long a = 0; a < m; ++a) {
        auto va = digits(a);
        std::string lab = "(";
        for (size_t i = 0; i < va.size(); ++i) lab += (i ? "," : "") + std::to_string(va[i]);
        labels.push_back(lab + ")");
        for (long b = 0; b < m; ++b) {
            auto vb = digits(b);
            for (size_t i = 0; i < d.size(); ++i) vb[i] = (va[i] + vb[i]) % d[i];
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] = index(vb);
        }
    }
    std::string name;
    if (d.size() == 1) {
        name = "C" + std::to_string(d[0]);
    } else {
        for (size_t i = 0; i < d.size(); ++i) name += (i ? "xC" : "C") + std::to_string(d[i]);
    }
    if (d.empty()) name = "C1";
    return std::make_shared<const FiniteGroup>(std::move(table), name, labels);
}

GroupPtr cyclic_group(long n) {
    if (n == 1) return std::make_shared<const FiniteGroup>(std::vector<std::vector<int>>{{0}}, "C1", std::vector<std::string>{"1"});
    return from_abelian_invariants({n});
}

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& generators, std::string name) {
    if (generators.empty()) throw PreconditionError("need at least one generator");
    const size_t deg = generators[0].size();
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
        // (a*b)(x) = a(b(x)): apply b first
        std::vector<int> r(a.size());
        for (size_t x = 0; x < a.size(); ++x) r[x] = a[static_cast<size_t>(b[x])];
        return r;
    };
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& gen : generators) {
            auto y = compose(elems[i], gen);
            if (!index.count(y)) {
                index.emplace(y, static_cast<int>(elems.size()));
                elems.push_back(y);
                if (elems.size() > static_cast<size_t>(kMaxGroupOrder)) throw BoundExceeded("permutation group too large");
            }
        }
    const size_t m = elems.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels;
    for (size_t a = 0; a < m; ++a) {
        std::string lab = "[";
        for (size_t x = 0; x < deg; ++x) lab += (x ? " " : "") + std::to_string(elems[a][x] + 1);
        labels.push_back(lab + "]");
        for (size_t b = 0; b < m; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
    }
    return std::make_shared<const FiniteGroup>(std::move(table), std::move(name), std::move(labels));
}

GroupPtr symmetric_group_s3() { return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3"); }

GroupPtr dihedral_group_d4() { return group_from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4"); }

GroupPtr alternating_group_a4() { return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"); }

GroupPtr quaternion_group_q8() {
    // Elements (sign, unit) with unit in {1, i, j, k}; index = 4*(sign<0) + unit.
    // unit products: i*j = k, j*k = i, k*i = j, i^2 = j^2 = k^2 = -1
    const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    const char* names[4] = {"1", "i", "j", "k"};
    std::vector<std::string> labels;
    for (int a = 0; a < 8; ++a) {
        labels.push_back(std::string(a >= 4 ? "-" : "") + names[a % 4]);
        for (int b = 0; b < 8; ++b) {
            int s = (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1) * sgn[a % 4][b % 4];
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (s < 0 ? 4 : 0) + prod[a % 4][b % 4];
        }
    }
    return std::make_shared<const FiniteGroup>(std::move(table), "Q8", labels);
}

std::vector<long> unit_group_residues(long f) {
    if (f < 1) throw PreconditionError("modulus must be positive");
    std::vector<long> units;
    if (f == 1) return {1};
    for (long a = 1; a < f; ++a)
        if (gcd_long(a, f) == 1) units.push_back(a);
    return units;
}

GroupPtr unit_group(long f) {
    const auto units = unit_group_residues(f);
    if (static_cast<long>(units.size()) > kMaxGroupOrder) throw BoundExceeded("unit group too large");
    std::map<long, int> idx;
    for (size_t i = 0; i < units.size(); ++i) idx[units[i]] = static_cast<int>(i);
    const size_t m = units.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels;
    for (size_t a = 0; a < m; ++a) {
        labels.push_back("s" + std::to_string(units[a]));
        for (size_t b = 0; b < m; ++b) table[a][b] = idx.at(f == 1 ? 1 : (units[a] * units[b]) % f);
    }
    return std::make_shared<const FiniteGroup>(std::move(table), "(Z/" + std::to_string(f) + ")^x", labels);
}

GroupPtr group_by_name(const std::string& name) {
    if (name == "S3") return symmetric_group_s3();
    if (name == "D4") return dihedral_group_d4();
    if (name == "Q8") return quaternion_group_q8();
    if (name == "A4") return alternating_group_a4();
    if (name == "V4") return from_abelian_invariants({2, 2});
    if (name.size() > 1 && name[0] == 'C') {
        long n = std::stol(name.substr(1));
        return cyclic_group(n);
    }
    throw SchemaError("unknown group name: " + name);
}

}  // namespace equivlk
