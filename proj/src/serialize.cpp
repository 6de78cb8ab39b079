#include "equivlk/serialize.hpp"

#include <sstream>

#include "equivlk/errors.hpp"

namespace equivlk {

namespace {

long get_long(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw SchemaError(std::string("expected integer field \"") + key + "\"");
    return j[key].get<long>();
}

}  // namespace

Json to_json(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (!j.is_string()) throw SchemaError("rational must be a string \"a/b\" or an integer, got " + j.dump());
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw SchemaError("malformed rational \"" + j.get<std::string>() + "\"");
    if (sgn(q.get_den()) == 0) throw SchemaError("rational with zero denominator");
    q.canonicalize();
    return q;
}

Json to_json(const CycloNumber& x) {
    Json c = Json::array();
    for (const auto& q : x.coeffs()) c.push_back(to_json(q));
    return Json{{"n", x.conductor()}, {"coeffs", c}};
}

CycloNumber cyclo_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return CycloNumber(rational_from_json(j));
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) throw SchemaError("cyclotomic number needs \"n\" and \"coeffs\"");
    const long n = get_long(j, "n");
    if (n < 1) throw SchemaError("cyclotomic conductor must be positive");
    std::vector<Rational> c;
    for (const auto& e : j["coeffs"]) c.push_back(rational_from_json(e));
    if (static_cast<long>(c.size()) == euler_phi(n)) return CycloNumber::from_basis(n, c);
    if (static_cast<long>(c.size()) <= n) return CycloNumber::from_power_sum(n, c);
    throw SchemaError("too many coefficients for conductor " + std::to_string(n));
}

Json to_json(const PAdic& x) {
    if (x.is_exact_zero()) return Json{{"p", 0}, {"prec", 0}, {"val", 0}, {"unit", ""}};
    if (x.is_zero()) return Json{{"p", x.prime()}, {"prec", 0}, {"val", x.valuation()}, {"unit", ""}};
    std::string digits;
    bool first = true;
    for (long d : x.unit_digits()) {
        if (x.prime() > 10 && !first) digits += ",";
        digits += std::to_string(d);
        first = false;
    }
    return Json{{"p", x.prime()}, {"prec", x.precision()}, {"val", x.valuation()}, {"unit", digits}};
}

PAdic padic_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("p-adic number must be an object");
    const long p = get_long(j, "p");
    const long prec = get_long(j, "prec");
    const long val = get_long(j, "val");
    if (!j.contains("unit") || !j["unit"].is_string()) throw SchemaError("p-adic number needs a \"unit\" digit string");
    if (p == 0) return PAdic();
    if (prec == 0) return PAdic::zero(p, val);
    const std::string s = j["unit"].get<std::string>();
    std::vector<long> digits;
    if (p > 10) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) digits.push_back(std::stol(tok));
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw SchemaError("bad digit in p-adic unit");
            digits.push_back(ch - '0');
        }
    }
    if (static_cast<long>(digits.size()) != prec) throw SchemaError("p-adic unit must have prec digits");
    Integer u = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it < 0 || *it >= p) throw SchemaError("p-adic digit out of range");
        u = u * p + *it;
    }
    if (u % p == 0) throw SchemaError("p-adic unit is divisible by p");
    return PAdic::from_unit(p, prec, val, u);
}

Json to_json(const BigComplex& z, int digits) {
    return Json{{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}, {"bits", z.bits()}};
}

Json to_json(const CentralVector& v) {
    Json a = Json::array();
    for (const auto& c : v.components) a.push_back(to_json(c));
    return a;
}

namespace {

GroupPtr named_group(const Json& name) {
    if (!name.is_string()) throw SchemaError("group name must be a string");
    try {
        return group_by_name(name.get<std::string>());
    } catch (const PreconditionError& e) {
        throw SchemaError(std::string("bad group name: ") + e.what());
    }
}

}  // namespace

GroupPtr group_from_json(const Json& j) {
    if (j.is_string()) return named_group(j);
    if (!j.is_object()) throw SchemaError("group must be a name or an object");
    if (j.contains("name") && !j.contains("table")) return named_group(j["name"]);
    if (j.contains("abelian")) {
        if (!j["abelian"].is_array()) throw SchemaError("\"abelian\" must be an array of invariants");
        std::vector<long> d;
        for (const auto& e : j["abelian"]) {
            if (!e.is_number_integer() || e.get<long>() < 1) throw SchemaError("abelian invariants must be positive integers");
            if (e.get<long>() > 1) d.push_back(e.get<long>());
        }
        if (d.empty()) return cyclic_group(1);
        return from_abelian_invariants(d);
    }
    if (j.contains("table")) {
        const auto& t = j["table"];
        if (!t.is_array() || t.empty()) throw SchemaError("\"table\" must be a square array");
        const size_t m = t.size();
        if (m > static_cast<size_t>(kMaxGroupOrder)) throw BoundExceeded("group order " + std::to_string(m) + " exceeds " + std::to_string(kMaxGroupOrder));
        std::vector<std::vector<int>> rows;
        for (const auto& row : t) {
            if (!row.is_array() || row.size() != m) throw SchemaError("\"table\" must be a square array");
            std::vector<int> r;
            for (const auto& e : row) {
                if (!e.is_number_integer()) throw SchemaError("table entries must be integers");
                r.push_back(e.get<int>());
            }
            rows.push_back(std::move(r));
        }
        try {
            return std::make_shared<const FiniteGroup>(rows, j.value("name", std::string("table")));
        } catch (const PreconditionError& e) {
            throw SchemaError(std::string("not a group table: ") + e.what());
        }
    }
    throw SchemaError("group object needs \"abelian\", \"table\" or \"name\"");
}

Json group_to_json(const FiniteGroup& g) { return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}}; }

QGElement qg_element_from_json(const GroupPtr& g, const Json& j) {
    if (j.is_number_integer() || j.is_string()) return QGElement::scalar(g, rational_from_json(j));
    if (j.is_object() && !j.contains("coeffs")) throw SchemaError("group ring element object needs \"coeffs\"");
    const Json& c = j.is_object() ? j["coeffs"] : j;
    if (!c.is_array() || static_cast<int>(c.size()) != g->order()) throw SchemaError("group ring element needs |G| = " + std::to_string(g->order()) + " coefficients");
    std::vector<Rational> q;
    for (const auto& e : c) q.push_back(rational_from_json(e));
    return QGElement(g, q);
}

QGMatrix qg_matrix_from_json(const GroupPtr& g, const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) throw SchemaError("matrix must be a nonempty array of rows");
    const size_t rows = j.size();
    const size_t cols = j[0].size();
    QGMatrix m(g, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw SchemaError("matrix rows must have equal length");
        for (size_t k = 0; k < cols; ++k) m(i, k) = qg_element_from_json(g, j[i][k]);
    }
    return m;
}

Presentation presentation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("h")) throw SchemaError("presentation needs \"group\" and \"h\"");
    Presentation pr;
    pr.group = group_from_json(j["group"]);
    pr.p = j.contains("p") ? get_long(j, "p") : 3;
    pr.prec = j.contains("prec") ? get_long(j, "prec") : kDefaultPrecision;
    if (pr.p < 2 || !is_prime(pr.p)) throw SchemaError("\"p\" must be a prime");
    if (pr.prec < 1) throw SchemaError("\"prec\" must be positive");
    pr.h = qg_matrix_from_json(pr.group, j["h"]);
    return pr;
}

Json to_json(const Presentation& pr) {
    return Json{{"group", group_to_json(*pr.group)}, {"p", pr.p}, {"prec", pr.prec}, {"h", to_json(pr.h)}};
}

Json to_json(const CharacterTable& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes.classes)
        classes.push_back(Json{{"representative", c.front()}, {"size", c.size()}, {"order", t.group->element_order(c.front())}});
    Json chars = Json::array();
    for (const auto& ch : t.chars) {
        Json row = Json::array();
        for (const auto& v : ch.values) row.push_back(to_json(v));
        chars.push_back(row);
    }
    return Json{{"group", t.group->name()}, {"classes", classes}, {"characters", chars}};
}

Json to_json(const DirichletChar& chi) {
    Json e = Json::array();
    for (long a = 0; a < chi.modulus(); ++a) e.push_back(chi.exponent(a));
    return Json{{"modulus", chi.modulus()}, {"order", chi.order()}, {"conductor", chi.conductor()}, {"parity", chi.parity()}, {"exponents", e}};
}

Json to_json(const LValueRecord& r) {
    static const char* kinds[] = {"exact_negative", "numeric", "leading_term"};
    Json j{{"character", to_json(r.chi)}, {"point", r.point}, {"S", r.removed}, {"kind", kinds[static_cast<int>(r.kind)]}};
    if (r.exact) j["value"] = to_json(*r.exact);
    if (r.numeric) j["value"] = to_json(*r.numeric);
    if (r.bits) j["bits"] = r.bits;
    return j;
}

}  // namespace equivlk
