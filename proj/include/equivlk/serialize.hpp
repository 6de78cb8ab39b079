#pragma once

// JSON forms of the exact types and fixtures. Malformed input raises SchemaError.

#include <json.hpp>

#include "equivlk/analytic.hpp"
#include "equivlk/character.hpp"
#include "equivlk/fitting.hpp"

namespace equivlk {

using Json = nlohmann::json;

// "a/b", or "a" for integers. Parsing also accepts JSON integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"n": conductor, "coeffs": [...]} in the reduced power basis.
Json to_json(const CycloNumber& x);
CycloNumber cyclo_from_json(const Json& j);

// {"p", "prec", "val", "unit"}: unit digits base p, least significant first,
// concatenated for p <= 10 and comma separated otherwise.
Json to_json(const PAdic& x);
PAdic padic_from_json(const Json& j);

// {"re": "...", "im": "...", "bits": b} as decimal strings.
Json to_json(const BigComplex& z, int digits = 40);

Json to_json(const CentralVector& v);

template <class R>
Json to_json(const GroupRingElement<R>& x) {
    Json c = Json::array();
    for (const auto& v : x.coeffs()) c.push_back(to_json(v));
    return Json{{"coeffs", c}};
}

template <class R>
Json to_json(const GroupRingMatrix<R>& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// A name ("S3", "C6", ...), {"abelian": [d1, ...]}, {"table": [[...]]} or {"name": ...}.
GroupPtr group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

// {"coeffs": [...]} or a bare coefficient array.
QGElement qg_element_from_json(const GroupPtr& g, const Json& j);
QGMatrix qg_matrix_from_json(const GroupPtr& g, const Json& j);

// {"group": ..., "p": 3, "prec": 12, "h": [[element, ...], ...]}
Presentation presentation_from_json(const Json& j);
Json to_json(const Presentation& pr);

// {"classes": [{"representative", "size", "order"}], "characters": [[values by class]]}
Json to_json(const CharacterTable& t);

Json to_json(const DirichletChar& chi);
Json to_json(const LValueRecord& r);

}  // namespace equivlk
