#include "equivlk/harness.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "equivlk/errors.hpp"
#include "equivlk/sampling.hpp"

namespace equivlk::harness {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Independent, reproducible stream per campaign slice.
std::mt19937_64 stream(uint64_t seed, const std::string& tag) { return std::mt19937_64(seed * 0x9e3779b97f4a7c15ULL ^ fnv1a(tag)); }

std::string pad(long n, int width = 3) {
    std::ostringstream os;
    os << std::setw(width) << std::setfill('0') << n;
    return os.str();
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "info";
    }
}

class Config {
public:
    Config(const Json& j, std::set<std::string> allowed) : j_(j.is_null() ? Json::object() : j) {
        if (!j_.is_object()) throw SchemaError("config must be a JSON object");
        allowed.insert({"seed", "bits", "description"});
        for (const auto& [k, v] : j_.items())
            if (!allowed.count(k)) throw SchemaError("unknown config key \"" + k + "\"");
    }
    bool has(const char* k) const { return j_.contains(k); }
    long integer(const char* k, long def, long lo, long hi) const {
        if (!has(k)) return def;
        if (!j_[k].is_number_integer()) throw SchemaError(std::string("\"") + k + "\" must be an integer");
        const long v = j_[k].get<long>();
        if (v < lo || v > hi) throw SchemaError(std::string("\"") + k + "\" out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return v;
    }
    std::vector<long> integers(const char* k, std::vector<long> def, long lo, long hi) const {
        if (!has(k)) return def;
        if (!j_[k].is_array()) throw SchemaError(std::string("\"") + k + "\" must be an array of integers");
        std::vector<long> out;
        for (const auto& e : j_[k]) {
            if (!e.is_number_integer() || e.get<long>() < lo || e.get<long>() > hi)
                throw SchemaError(std::string("\"") + k + "\" entries must be integers in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            out.push_back(e.get<long>());
        }
        return out;
    }
    Json raw(const char* k, Json def) const { return has(k) ? j_[k] : def; }
    bool boolean(const char* k, bool def) const {
        if (!has(k)) return def;
        if (!j_[k].is_boolean()) throw SchemaError(std::string("\"") + k + "\" must be a boolean");
        return j_[k].get<bool>();
    }

private:
    Json j_;
};

struct Outcome {
    Verdict verdict = Verdict::pass;
    Json detail = Json::object();
    std::optional<Json> witness;
};

Outcome outcome(bool ok, Json detail = Json::object()) { return Outcome{ok ? Verdict::pass : Verdict::fail, std::move(detail), std::nullopt}; }

class Recorder {
public:
    void check(const std::string& id, const Json& inputs, const std::function<Outcome()>& body) {
        CheckRecord rec;
        rec.id = id;
        rec.inputs_digest = fnv1a_hex(inputs.dump());
        const auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = body();
            rec.verdict = o.verdict;
            rec.detail = std::move(o.detail);
            rec.witness = std::move(o.witness);
        } catch (const SchemaError&) {
            throw;
        } catch (const std::exception& e) {
            rec.verdict = Verdict::fail;
            rec.detail = Json{{"error", e.what()}};
        }
        if (rec.verdict == Verdict::fail && !rec.witness) rec.witness = inputs;
        rec.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        records_.push_back(std::move(rec));
    }
    std::vector<CheckRecord> take() { return std::move(records_); }

private:
    std::vector<CheckRecord> records_;
};

class AlgebraCache {
public:
    const GroupAlgebra& get(const GroupPtr& g) {
        const std::string key = g->name() + "#" + fnv1a_hex(Json(g->table()).dump());
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, std::make_unique<GroupAlgebra>(g)).first;
        return *it->second;
    }

private:
    std::map<std::string, std::unique_ptr<GroupAlgebra>> cache_;
};

std::string group_tag(const GroupPtr& g) { return g->name().empty() ? "G" + std::to_string(g->order()) : g->name(); }

std::vector<GroupPtr> groups_from(const Json& arr) {
    if (!arr.is_array()) throw SchemaError("\"groups\" must be an array");
    std::vector<GroupPtr> out;
    for (const auto& g : arr) out.push_back(group_from_json(g));
    return out;
}

struct Case {
    GroupPtr group;
    long p;
    long samples;
    Json raw;
};

std::vector<Case> cases_from(const Json& arr, long default_samples) {
    if (!arr.is_array()) throw SchemaError("\"cases\" must be an array");
    std::vector<Case> out;
    for (const auto& c : arr) {
        if (!c.is_object() || !c.contains("group") || !c.contains("p") || !c["p"].is_number_integer())
            throw SchemaError("each case needs \"group\" and an integer \"p\"");
        const long p = c["p"].get<long>();
        if (p < 2 || !is_prime(p)) throw SchemaError("case prime must be prime");
        const long samples = c.contains("samples") ? c["samples"].get<long>() : default_samples;
        if (samples < 0) throw SchemaError("\"samples\" must be nonnegative");
        out.push_back(Case{group_from_json(c["group"]), p, samples, c});
    }
    return out;
}

CGElement nrd_element(const GroupAlgebra& a, const CGMatrix& h) { return central_recompose(a, reduced_norm(a, h)); }

bool adjoint_identity_holds(const GroupAlgebra& a, const CGMatrix& h, Json& detail) {
    const CGMatrix hs = generalized_adjoint(a, h);
    const CGMatrix want = nrd_element(a, h) * CGMatrix::identity(a.group(), h.rows());
    const bool left = hs * h == want;
    const bool right = h * hs == want;
    detail["left"] = left;
    detail["right"] = right;
    detail["rational"] = is_rational(hs);
    return left && right && is_rational(hs);
}

// Binary exponent of an error, null for an exact zero.
Json log2_bound(const BigFloat& x) { return x.is_zero() ? Json(nullptr) : Json(x.exponent()); }

// ---------------------------------------------------------------- char-table

void run_char_table(const Config& cfg, Recorder& rec) {
    const auto groups = groups_from(cfg.raw("groups", Json{"C2", "C3", "S3", "D4", "Q8", "A4"}));
    const long max_order = cfg.integer("max_order", kMaxCharacterTableOrder, 1, kMaxGroupOrder);
    for (size_t i = 0; i < groups.size(); ++i) {
        const GroupPtr g = groups[i];
        rec.check("char-table/" + pad(static_cast<long>(i), 2) + "-" + group_tag(g), group_to_json(*g), [&] {
            const CharacterTable t = character_table(g, max_order);
            const auto& cls = t.classes.classes;
            bool orth = true;
            long sum_sq = 0;
            for (size_t x = 0; x < t.size(); ++x) {
                sum_sq += t.chars[x].degree * t.chars[x].degree;
                for (size_t y = 0; y < t.size(); ++y) {
                    CycloNumber s;
                    for (size_t c = 0; c < cls.size(); ++c)
                        s += CycloNumber(static_cast<long>(cls[c].size())) * t.chars[x].values[c] * t.chars[y].values[c].complex_conjugate();
                    orth = orth && s == CycloNumber(x == y ? g->order() : 0);
                }
            }
            Json d = to_json(t);
            d["orthogonal"] = orth;
            d["sum_of_squares"] = sum_sq;
            return outcome(orth && sum_sq == g->order() && t.size() == cls.size(), d);
        });
    }
}

// ---------------------------------------------------------------- nrd

void run_nrd(const Config& cfg, uint64_t seed, Recorder& rec) {
    AlgebraCache cache;
    const Json fixtures = cfg.raw("matrices", Json::array());
    if (!fixtures.is_array()) throw SchemaError("\"matrices\" must be an array");
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const Json& fx = fixtures[i];
        if (!fx.is_object() || !fx.contains("group") || !fx.contains("h")) throw SchemaError("each matrix needs \"group\" and \"h\"");
        const GroupPtr g = group_from_json(fx["group"]);
        const QGMatrix h = qg_matrix_from_json(g, fx["h"]);
        if (!h.is_square()) throw SchemaError("reduced norms need square matrices");
        rec.check("nrd/fixture-" + pad(static_cast<long>(i)), fx, [&] {
            const GroupAlgebra& a = cache.get(g);
            Json d{{"nrd", to_json(reduced_norm(a, h))}};
            const bool ok = adjoint_identity_holds(a, to_cyclo(h), d);
            return outcome(ok, d);
        });
    }
    const auto groups = groups_from(cfg.raw("groups", fixtures.empty() ? Json{"S3", "D4", "Q8"} : Json::array()));
    const long samples = cfg.integer("samples", 5, 0, 100000);
    const long max_n = cfg.integer("max_n", 2, 1, 4);
    const long box = cfg.integer("box", 9, 1, 1000);
    for (const auto& g : groups) {
        auto rng = stream(seed, "nrd/" + group_tag(g));
        for (long k = 0; k < samples; ++k) {
            const size_t n = static_cast<size_t>(draw(rng, 1, max_n));
            const QGMatrix h = random_matrix(rng, g, n, n, box);
            const Json inputs{{"group", group_tag(g)}, {"h", to_json(h)}};
            rec.check("nrd/" + group_tag(g) + "/" + pad(k), inputs, [&] {
                const GroupAlgebra& a = cache.get(g);
                Json d{{"nrd", to_json(reduced_norm(a, h))}};
                const bool ok = adjoint_identity_holds(a, to_cyclo(h), d);
                return outcome(ok, d);
            });
        }
    }
}

// ---------------------------------------------------------------- adjoint-verify

void run_adjoint(const Config& cfg, uint64_t seed, Recorder& rec) {
    AlgebraCache cache;
    const auto groups = groups_from(cfg.raw("groups", Json{"C2", "C3", "C6", "S3", "D4", "Q8"}));
    const long trials = cfg.integer("trials", 200, 0, 1000000);
    const long max_n = cfg.integer("max_n", 3, 1, 4);
    const long box = cfg.integer("box", 9, 1, 1000);
    for (const auto& g : groups) {
        auto rng = stream(seed, "adjoint/" + group_tag(g));
        for (long k = 0; k < trials; ++k) {
            const size_t n = static_cast<size_t>(draw(rng, 1, max_n));
            const QGMatrix h = random_matrix(rng, g, n, n, box);
            const Json inputs{{"group", group_tag(g)}, {"h", to_json(h)}};
            rec.check("adjoint-verify/" + group_tag(g) + "/" + pad(k, 4), inputs, [&] {
                Json d{{"n", n}};
                return outcome(adjoint_identity_holds(cache.get(g), to_cyclo(h), d), d);
            });
        }
    }
}

// ---------------------------------------------------------------- fitt

Json fitt_detail(const FittClass& f) {
    Json gens = Json::array();
    for (const auto& c : f.generators) gens.push_back(to_json(c));
    return Json{{"fitt_generators", gens}, {"quadratic", f.quadratic}, {"zero_class", f.zero_class}, {"lower_bound", f.lower_bound}};
}

Outcome fitt_outcome(const GroupAlgebra& a, const Presentation& pr) {
    const FittClass f = fitting_invariant(a, pr);
    Json d = fitt_detail(f);
    if (!pr.group->is_abelian()) return Outcome{Verdict::info, d, std::nullopt};
    const ZpN ring(pr.p, pr.prec);
    const bool same = central_span(ring, a, fitt_elements(a, f)) == left_ideal_span(ring, classical_fitting_generators(pr));
    d["matches_classical"] = same;
    return outcome(same, d);
}

void run_fitt(const Config& cfg, uint64_t seed, Recorder& rec) {
    AlgebraCache cache;
    const Json fixtures = cfg.raw("presentations", Json::array());
    if (!fixtures.is_array()) throw SchemaError("\"presentations\" must be an array");
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const Presentation pr = presentation_from_json(fixtures[i]);
        rec.check("fitt/fixture-" + pad(static_cast<long>(i)), fixtures[i], [&] { return fitt_outcome(cache.get(pr.group), pr); });
    }
    const Json def_cases = fixtures.empty() ? Json::parse(R"([{"group":"C2","p":3},{"group":"C3","p":7},{"group":"C6","p":5},{"group":{"abelian":[2,2]},"p":3}])")
                                            : Json::array();
    const auto cases = cases_from(cfg.raw("cases", def_cases), cfg.integer("samples", 25, 0, 100000));
    const long max_rows = cfg.integer("max_rows", 3, 1, 6);
    const long max_cols = cfg.integer("max_cols", 3, 1, 4);
    const long prec = cfg.integer("prec", kDefaultPrecision, 1, 64);
    for (const auto& c : cases) {
        const std::string tag = group_tag(c.group) + "-p" + std::to_string(c.p);
        auto rng = stream(seed, "fitt/" + tag);
        for (long k = 0; k < c.samples; ++k) {
            const size_t b = static_cast<size_t>(draw(rng, 1, max_cols));
            const size_t rows = static_cast<size_t>(draw(rng, 1, max_rows));
            const Presentation pr{c.group, c.p, prec, presentation_matrix(rng, c.group, rows, b, c.p)};
            rec.check("fitt/" + tag + "/" + pad(k), to_json(pr), [&] { return fitt_outcome(cache.get(pr.group), pr); });
        }
    }
}

// ---------------------------------------------------------------- annihilate-check

Outcome annihilation_outcome(const GroupAlgebra& a, const Presentation& pr, long max_log) {
    const AnnihilationVerdict v = annihilation_check(a, pr, std::nullopt, max_log);
    Json gens = Json::array();
    for (const auto& c : v.fitt_generators) gens.push_back(to_json(c));
    Json d{{"annihilates", v.annihilates}, {"module_log_order", v.module_log_order}, {"fitt_generators", gens}, {"note", v.detail},
           {"multiplier", denominator_sample(*pr.group, pr.p).get_str()}};
    bool order_ok = true;
    if (pr.h.is_square()) {
        // |M| is the p-part of prod_chi Nrd_chi(h)^{n_chi}
        const CentralVector nrd = reduced_norm(a, pr.h);
        CycloNumber prod(1);
        for (size_t chi = 0; chi < a.num_characters(); ++chi)
            for (long k = 0; k < a.degree(chi); ++k) prod *= nrd.components[chi];
        order_ok = prod.is_rational() && !prod.is_zero() && valuation(prod.to_rational(), pr.p) == v.module_log_order;
        d["order_matches_norm"] = order_ok;
    }
    Outcome o = outcome(v.annihilates && order_ok, d);
    if (v.failing_generator) o.witness = Json{{"presentation", to_json(pr)}, {"failing_generator", *v.failing_generator}};
    return o;
}

void run_annihilate(const Config& cfg, uint64_t seed, Recorder& rec) {
    AlgebraCache cache;
    const long max_log = cfg.integer("max_log_order", kMaxModuleLogOrder, 1, 16);
    const Json fixtures = cfg.raw("presentations", Json::array());
    if (!fixtures.is_array()) throw SchemaError("\"presentations\" must be an array");
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const Presentation pr = presentation_from_json(fixtures[i]);
        rec.check("annihilate-check/fixture-" + pad(static_cast<long>(i)), fixtures[i],
                  [&] { return annihilation_outcome(cache.get(pr.group), pr, max_log); });
    }
    const Json def_cases = fixtures.empty()
                               ? Json::parse(R"([{"group":"S3","p":5},{"group":"D4","p":3},{"group":"Q8","p":3},{"group":"C6","p":5},{"group":"A4","p":5}])")
                               : Json::array();
    const auto cases = cases_from(cfg.raw("cases", def_cases), cfg.integer("samples", 100, 0, 100000));
    const long max_n = cfg.integer("max_n", 2, 1, 3);
    const long min_log = cfg.integer("min_log_order", 1, 0, 16);
    const long max_attempts = cfg.integer("max_attempts", 5000, 1, 1000000);
    const long prec = cfg.integer("prec", kDefaultPrecision, 1, 64);
    for (const auto& c : cases) {
        const std::string tag = group_tag(c.group) + "-p" + std::to_string(c.p);
        auto rng = stream(seed, "annihilate/" + tag);
        long accepted = 0, attempts = 0, infinite_or_large = 0, too_small = 0;
        while (accepted < c.samples && attempts < max_attempts) {
            ++attempts;
            const size_t n = static_cast<size_t>(draw(rng, 1, max_n));
            const Presentation pr{c.group, c.p, prec, presentation_matrix(rng, c.group, n, n, c.p)};
            long log_order = 0;
            try {
                log_order = cokernel_module(pr, max_log).log_order();
            } catch (const PreconditionError&) {
                ++infinite_or_large;
                continue;
            } catch (const BoundExceeded&) {
                ++infinite_or_large;
                continue;
            }
            if (log_order < min_log) {
                ++too_small;
                continue;
            }
            rec.check("annihilate-check/" + tag + "/" + pad(accepted), to_json(pr), [&] { return annihilation_outcome(cache.get(pr.group), pr, max_log); });
            ++accepted;
        }
        const Json inputs{{"case", c.raw}, {"samples", c.samples}};
        rec.check("annihilate-check/" + tag + "/sampling", inputs, [&] {
            Json d{{"accepted", accepted}, {"attempts", attempts}, {"rejected_infinite_or_large", infinite_or_large}, {"rejected_small", too_small},
                   {"p_divides_commutator_order", !denominator_trivial(*c.group, c.p)}};
            return outcome(accepted == c.samples, d);
        });
    }
}

// ---------------------------------------------------------------- denominator-probe

void run_denominator(const Config& cfg, uint64_t seed, Recorder& rec) {
    AlgebraCache cache;
    const long max_n = cfg.integer("max_n", 3, 1, 4);
    const Json def_cases = Json::parse(R"([{"group":"S3","p":5,"samples":100},{"group":"D4","p":3,"samples":100},{"group":"Q8","p":3,"samples":100}])");
    const Json def_search = Json::parse(R"([{"group":"S3","p":3,"samples":500}])");
    const Json def_fixtures = Json::parse(R"([{"group":"S3","p":3,"h":[["0"]],"expect_integral":false}])");
    auto probe_cases = [&](const std::vector<Case>& cases, const std::string& kind, bool report_only) {
        for (const auto& c : cases) {
            if (c.p == 2) throw SchemaError("the denominator probe needs an odd prime");
            const std::string tag = group_tag(c.group) + "-p" + std::to_string(c.p);
            rec.check("denominator-probe/" + kind + "/" + tag, c.raw, [&] {
                auto rng = stream(seed, "denominator/" + kind + "/" + tag);
                const IntegrityProbe pb = adjoint_integrality_probe(cache.get(c.group), c.p, c.samples, rng, static_cast<size_t>(max_n));
                Json d{{"trials", pb.trials}, {"integral", pb.integral}, {"p_divides_commutator_order", !pb.expected_trivial}};
                if (pb.witness) d["witness"] = Json{{"group", group_tag(c.group)}, {"p", c.p}, {"h", to_json(*pb.witness)}};
                if (report_only || !pb.expected_trivial) return Outcome{Verdict::info, d, std::nullopt};
                Outcome o = outcome(pb.integral == pb.trials, d);
                if (pb.witness) o.witness = d["witness"];
                return o;
            });
        }
    };
    probe_cases(cases_from(cfg.raw("cases", def_cases), 100), "direct", false);
    probe_cases(cases_from(cfg.raw("witness_search", def_search), 500), "search", true);
    const Json fixtures = cfg.raw("fixtures", def_fixtures);
    if (!fixtures.is_array()) throw SchemaError("\"fixtures\" must be an array");
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const Json& fx = fixtures[i];
        if (!fx.is_object() || !fx.contains("group") || !fx.contains("p") || !fx.contains("h") || !fx.contains("expect_integral"))
            throw SchemaError("fixtures need \"group\", \"p\", \"h\" and \"expect_integral\"");
        const GroupPtr g = group_from_json(fx["group"]);
        const QGMatrix h = qg_matrix_from_json(g, fx["h"]);
        const long p = fx["p"].get<long>();
        const bool expect = fx["expect_integral"].get<bool>();
        rec.check("denominator-probe/fixture-" + pad(static_cast<long>(i)), fx, [&] {
            const CGMatrix hs = generalized_adjoint(cache.get(g), h);
            const bool integral = is_p_integral(hs, p);
            Json d{{"adjoint", to_json(hs)}, {"p_integral", integral}};
            return outcome(integral == expect, d);
        });
    }
}

// ---------------------------------------------------------------- L-values

std::vector<std::pair<long, std::vector<DirichletChar>>> primitive_grid(long max_conductor) {
    std::vector<std::pair<long, std::vector<DirichletChar>>> out;
    for (long f = 1; f <= max_conductor; ++f) out.emplace_back(f, enumerate_characters(f));
    return out;
}

void run_lvalue(const Config& cfg, long bits, Recorder& rec) {
    const long threshold = cfg.integer("threshold_bits", bits - 28, 1, 100000);
    const BigFloat bound = BigFloat::pow2(-threshold, bits);
    const bool single = cfg.has("f");
    if (single) {
        const long f = cfg.integer("f", 1, 1, kMaxCharacterModulus);
        const long r = cfg.integer("r", 2, 1, 64);
        const auto removed = cfg.integers("S", {}, 2, 1000000);
        const std::optional<long> p = cfg.has("p") ? std::optional<long>(cfg.integer("p", 3, 3, 1000000)) : std::nullopt;
        if (p && !is_prime(*p)) throw SchemaError("\"p\" must be an odd prime");
        const auto chars = enumerate_characters(f);
        for (size_t i = 0; i < chars.size(); ++i) {
            const Json inputs{{"f", f}, {"r", r}, {"S", removed}, {"chi", i}};
            rec.check("lvalue/vector/chi" + pad(static_cast<long>(i)), inputs, [&] {
                const DirichletChar& chi = chars[i];
                const LValueRecord ex = l_value_record_exact(r, chi, removed);
                Json d{{"exact", to_json(ex)}};
                if (p) {
                    const auto img = padic_image(*ex.exact, *p, kDefaultPrecision);
                    d["padic"] = img ? to_json(*img) : Json(nullptr);
                    d["embedding"] = padic_embedding_note(*p);
                }
                if (r < 2) return Outcome{Verdict::info, d, std::nullopt};
                // the imprimitive Dirichlet sum against the primitive one times Euler factors
                const BigComplex direct = l_numeric(BigComplex(BigFloat(r, bits)), chi, removed, bits);
                std::vector<long> all = removed;
                for (long v : prime_divisors(f)) all.push_back(v);
                const BigComplex via_prim = l_numeric(BigComplex(BigFloat(r, bits)), chi.primitive(), all, bits);
                d["numeric"] = to_json(l_value_numeric(r, chi, removed, bits));
                d["euler_error_log2"] = log2_bound(abs(direct - via_prim));
                return outcome(abs(direct - via_prim) < bound, d);
            });
        }
    }
    const Json exact = cfg.raw("exact", single ? Json::array() : Json::parse(R"([{"f":1,"chi":0,"r":2,"expect":"-1/12"},{"f":4,"chi":1,"r":3,"expect":"-1/2"}])"));
    if (!exact.is_array()) throw SchemaError("\"exact\" must be an array");
    for (size_t i = 0; i < exact.size(); ++i) {
        const Json& e = exact[i];
        if (!e.is_object() || !e.contains("f") || !e.contains("chi") || !e.contains("r") || !e.contains("expect"))
            throw SchemaError("exact entries need \"f\", \"chi\", \"r\" and \"expect\"");
        rec.check("lvalue/exact-" + pad(static_cast<long>(i)), e, [&] {
            const auto chars = enumerate_characters(e["f"].get<long>());
            const size_t idx = e["chi"].get<size_t>();
            if (idx >= chars.size()) throw SchemaError("character index out of range");
            std::vector<long> removed = e.value("S", std::vector<long>{});
            const CycloNumber v = l_value_exact(e["r"].get<long>(), chars[idx], removed);
            return outcome(v == cyclo_from_json(e["expect"]), Json{{"value", to_json(v)}, {"character", to_json(chars[idx])}});
        });
    }
    if (single) return;
    const long max_cond = cfg.integer("max_conductor", 20, 1, 200);
    const auto rs = cfg.integers("r", {2, 3, 4}, 2, 40);
    for (const auto& [f, chars] : primitive_grid(max_cond))
        for (size_t i = 0; i < chars.size(); ++i) {
            if (!chars[i].is_primitive()) continue;
            for (long r : rs) {
                const Json inputs{{"f", f}, {"chi", i}, {"r", r}, {"bits", bits}};
                rec.check("lvalue/f" + pad(f) + "/chi" + pad(static_cast<long>(i)) + "/r" + std::to_string(r), inputs, [&, &chars = chars] {
                    const CycloNumber ex = l_value_exact(r, chars[i]);
                    const BigComplex num = fe_transported_l_value(r, chars[i], bits);
                    const BigFloat err = abs(num - embed_complex(ex, bits));
                    return outcome(err < bound, Json{{"exact", to_json(ex)}, {"numeric", to_json(num)}, {"error_log2", log2_bound(err)}});
                });
            }
        }
}

void run_verify_fe(const Config& cfg, long bits, Recorder& rec) {
    const long threshold = cfg.integer("threshold_bits", bits - 28, 1, 100000);
    const BigFloat bound = BigFloat::pow2(-threshold, bits);
    const long max_cond = cfg.integer("max_conductor", 20, 1, 200);
    const auto ss = cfg.integers("s", {2, 3, 4}, 2, 40);
    for (const auto& [f, chars] : primitive_grid(max_cond))
        for (size_t i = 0; i < chars.size(); ++i) {
            if (!chars[i].is_primitive()) continue;
            for (long s : ss) {
                const Json inputs{{"f", f}, {"chi", i}, {"s", s}, {"bits", bits}};
                rec.check("verify-fe/f" + pad(f) + "/chi" + pad(static_cast<long>(i)) + "/s" + std::to_string(s), inputs, [&, &chars = chars] {
                    const FeResidual res = fe_residual(chars[i], s, bits);
                    const BigFloat mag = abs(res.residual);
                    return outcome(mag < bound, Json{{"residual_log2", log2_bound(mag)}, {"lambda", to_json(res.lhs, 25)}, {"derivative_route", res.derivative_route},
                                                     {"parity", chars[i].parity()}});
                });
            }
        }
}

void run_pi_ratio(const Config& cfg, long bits, Recorder& rec) {
    const auto rs = cfg.integers("r", {2, 3}, 2, 40);
    const long max_total = cfg.integer("max_total", 2, 0, 8);
    const long max_den = cfg.integer("max_denominator", 10000, 1, 1000000000);
    for (long r : rs)
        for (long np = 0; np <= max_total; ++np)
            for (long nm = 0; np + nm <= max_total; ++nm)
                for (PlaceType type : {PlaceType::real, PlaceType::complex}) {
                    if (type == PlaceType::complex && nm > 0) continue;  // only n = n_plus + n_minus matters
                    const GammaData g{type, np, nm};
                    const std::string tname = type == PlaceType::real ? "real" : "complex";
                    const Json inputs{{"type", tname}, {"n_plus", np}, {"n_minus", nm}, {"r", r}, {"bits", bits}};
                    rec.check("pi-ratio/" + tname + "/n" + std::to_string(np) + std::to_string(nm) + "/r" + std::to_string(r), inputs, [&] {
                        const PiRatioVerdict v = pi_power_ratio_check(r, g, bits);
                        const bool ok = v.rational && v.quotient.get_den() <= max_den;
                        Json d{{"pi_power", v.pi_power}, {"quotient_numeric", v.numeric}};
                        if (v.rational) d["quotient"] = to_json(v.quotient);
                        return outcome(ok, d);
                    });
                }
}

void run_gross(const Config& cfg, Recorder& rec) {
    std::vector<long> moduli;
    if (cfg.has("f")) {
        moduli.push_back(cfg.integer("f", 1, 1, kMaxCharacterModulus));
    } else {
        for (long f = 1; f <= cfg.integer("max_modulus", 30, 1, kMaxCharacterModulus); ++f) moduli.push_back(f);
    }
    const auto rs = cfg.integers("r", {1, 2, 3, 4, 5}, 1, 40);
    for (long f : moduli)
        for (long r : rs)
            for (bool truncated : {false, true}) {
                const std::vector<long> removed = truncated ? prime_divisors(f) : std::vector<long>{};
                const Json inputs{{"f", f}, {"r", r}, {"S", removed}};
                rec.check("gross-check/f" + pad(f) + "/r" + std::to_string(r) + (truncated ? "/S" : "/0"), inputs, [&] {
                    const GrossVerdict v = gross_equivariance_check(r, f, removed);
                    return outcome(v.holds, Json{{"checked", v.checked}, {"note", v.detail}});
                });
            }
}

std::vector<long> ramified_primes(long f) {
    std::vector<long> s;
    for (long p : prime_divisors(f))
        if (!(p == 2 && f % 4 != 0)) s.push_back(p);
    return s;
}

void run_stickelberger(const Config& cfg, uint64_t seed, Recorder& rec) {
    std::vector<long> moduli;
    if (cfg.has("f")) {
        moduli.push_back(cfg.integer("f", 1, 1, kMaxCharacterModulus));
    } else {
        for (long f = 1; f <= cfg.integer("max_modulus", 25, 1, kMaxCharacterModulus); ++f) moduli.push_back(f);
    }
    const auto rs = cfg.has("r") && cfg.raw("r", Json()).is_number_integer() ? std::vector<long>{cfg.integer("r", 1, 1, 40)}
                                                                             : cfg.integers("r", {1, 2, 3}, 1, 40);
    const long twists = cfg.integer("twists", 5, 1, 1000);
    const long c_max = cfg.integer("c_max", 500, 3, 1000000);
    const auto extra = cfg.has("p") ? std::vector<long>{cfg.integer("p", 3, 2, 1000000)} : cfg.integers("extra_primes", {3}, 2, 1000000);
    const auto given_s = cfg.has("S") ? std::optional<std::vector<long>>(cfg.integers("S", {}, 2, 1000000)) : std::nullopt;
    for (long f : moduli)
        for (long r : rs) {
            std::vector<std::vector<long>> variants;
            if (given_s) {
                variants.push_back(*given_s);
            } else {
                variants.push_back(ramified_primes(f));
                for (long p : extra) {
                    auto s = ramified_primes(f);
                    if (std::find(s.begin(), s.end(), p) != s.end()) continue;
                    s.push_back(p);
                    std::sort(s.begin(), s.end());
                    if (std::find(variants.begin(), variants.end(), s) == variants.end()) variants.push_back(s);
                }
            }
            for (const auto& removed : variants) {
                std::string stag;
                for (long v : removed) stag += (stag.empty() ? "" : ".") + std::to_string(v);
                auto rng = stream(seed, "stickelberger/" + std::to_string(f) + "/" + std::to_string(r) + "/" + stag);
                std::vector<long> cs;
                for (long tries = 0; tries < 100000 && static_cast<long>(cs.size()) < twists; ++tries) {
                    const long c = draw(rng, 2, c_max);
                    if (admissible_twist(c, r, f, removed) && std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
                }
                const Json inputs{{"f", f}, {"r", r}, {"S", removed}, {"c", cs}};
                rec.check("stickelberger/f" + pad(f) + "/r" + std::to_string(r) + "/S" + (stag.empty() ? "0" : stag), inputs, [&] {
                    const StickelbergerElement th = stickelberger(r, f, removed);
                    Json d{{"theta", to_json(th.theta)}, {"twists", cs}};
                    bool ok = static_cast<long>(cs.size()) >= twists;
                    Json integral = Json::array();
                    for (long c : cs) {
                        const bool in = integrality_check(th, c);
                        integral.push_back(in);
                        ok = ok && in;
                    }
                    d["integral"] = integral;
                    if (removed == prime_divisors(f)) {
                        const bool oracle = th.theta == stickelberger_partial_zeta(r, f);
                        d["matches_partial_zeta"] = oracle;
                        ok = ok && oracle;
                    }
                    return outcome(ok, d);
                });
            }
        }
}

void run_kff(const Config& cfg, Recorder& rec) {
    const long q_max = cfg.integer("q_max", 9, 2, 1000);
    const long d_max = cfg.integer("d_max", 4, 1, 16);
    const long r_max = cfg.integer("r_max", 3, 1, 16);
    for (long q = 2; q <= q_max; ++q) {
        if (prime_divisors(q).size() != 1) continue;
        for (long d = 1; d <= d_max; ++d)
            for (long r = 1; r <= r_max; ++r) {
                const Json inputs{{"q", q}, {"d", d}, {"r", r}};
                rec.check("kff/q" + pad(q) + "/d" + std::to_string(d) + "/r" + std::to_string(r), inputs, [&] {
                    const KGroupModule m = kgroup_finite_field(q, d, r);
                    const Integer expected = pow_integer(q, r * d) - 1;
                    Json inv = Json::array();
                    for (const auto& x : m.invariants) inv.push_back(x.get_str());
                    const bool cyclic = expected == 1 ? m.invariants.empty() : (m.invariants.size() == 1 && m.invariants[0] == expected);
                    return outcome(m.order == expected && cyclic, Json{{"order", m.order.get_str()}, {"invariants", inv}, {"expected", expected.get_str()}});
                });
            }
    }
}

struct SubcommandSpec {
    std::set<std::string> keys;
    long default_bits;
};

const std::map<std::string, SubcommandSpec>& specs() {
    static const std::map<std::string, SubcommandSpec> m = {
        {"char-table", {{"groups", "max_order"}, kDefaultBits}},
        {"nrd", {{"matrices", "groups", "samples", "max_n", "box"}, kDefaultBits}},
        {"adjoint-verify", {{"groups", "trials", "max_n", "box"}, kDefaultBits}},
        {"fitt", {{"presentations", "cases", "samples", "max_rows", "max_cols", "prec"}, kDefaultBits}},
        {"annihilate-check", {{"presentations", "cases", "samples", "max_n", "min_log_order", "max_log_order", "max_attempts", "prec"}, kDefaultBits}},
        {"denominator-probe", {{"cases", "witness_search", "fixtures", "max_n"}, kDefaultBits}},
        {"lvalue", {{"f", "r", "S", "p", "exact", "max_conductor", "threshold_bits"}, kDefaultBits}},
        {"verify-fe", {{"max_conductor", "s", "threshold_bits"}, kDefaultBits}},
        {"pi-ratio", {{"r", "max_total", "max_denominator"}, 96}},
        {"gross-check", {{"f", "max_modulus", "r"}, kDefaultBits}},
        {"stickelberger", {{"f", "max_modulus", "r", "S", "p", "twists", "c_max", "extra_primes"}, kDefaultBits}},
        {"kff", {{"q_max", "d_max", "r_max"}, kDefaultBits}},
    };
    return m;
}

}  // namespace

std::string fnv1a_hex(const std::string& s) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(s);
    return os.str();
}

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, s] : specs()) v.push_back(k);
        return v;
    }();
    return names;
}

long Report::count(Verdict v) const {
    return static_cast<long>(std::count_if(records.begin(), records.end(), [v](const CheckRecord& r) { return r.verdict == v; }));
}

Json Report::to_json(bool with_timings) const {
    Json recs = Json::array();
    for (const auto& r : records) {
        Json j{{"id", r.id}, {"inputs_digest", r.inputs_digest}, {"verdict", verdict_name(r.verdict)}, {"detail", r.detail}};
        if (r.witness) j["witness"] = *r.witness;
        if (with_timings) j["timing_ms"] = r.timing_ms;
        recs.push_back(std::move(j));
    }
    return Json{{"subcommand", subcommand},
                {"seed", seed},
                {"bits", bits},
                {"config", config},
                {"records", recs},
                {"summary", {{"total", records.size()}, {"pass", count(Verdict::pass)}, {"fail", count(Verdict::fail)}, {"info", count(Verdict::info)}}}};
}

std::string Report::table() const {
    std::ostringstream os;
    os << subcommand << "  seed=" << seed << "  bits=" << bits << "\n";
    size_t width = 10;
    for (const auto& r : records) width = std::max(width, r.id.size());
    for (const auto& r : records) {
        os << std::left << std::setw(6) << verdict_name(r.verdict) << std::setw(static_cast<int>(width) + 2) << r.id;
        os << std::right << std::setw(10) << std::fixed << std::setprecision(1) << r.timing_ms << " ms";
        if (r.detail.contains("error")) os << "  " << r.detail["error"].get<std::string>();
        os << "\n";
    }
    os << "total " << records.size() << "  pass " << count(Verdict::pass) << "  fail " << count(Verdict::fail) << "  info " << count(Verdict::info) << "\n";
    return os.str();
}

Report run(const std::string& subcommand, const Json& config, std::optional<uint64_t> seed, std::optional<long> bits) {
    const auto it = specs().find(subcommand);
    if (it == specs().end()) throw SchemaError("unknown subcommand \"" + subcommand + "\"");
    const Config cfg(config, it->second.keys);
    Report rep;
    rep.subcommand = subcommand;
    rep.config = config.is_null() ? Json::object() : config;
    rep.seed = seed ? *seed : static_cast<uint64_t>(cfg.integer("seed", 1, 0, std::numeric_limits<long>::max()));
    rep.bits = bits ? *bits : cfg.integer("bits", it->second.default_bits, 32, 4096);
    if (rep.bits < 32) throw SchemaError("bits must be at least 32");
    Recorder rec;
    const uint64_t s = rep.seed;
    const long b = rep.bits;
    if (subcommand == "char-table") run_char_table(cfg, rec);
    else if (subcommand == "nrd") run_nrd(cfg, s, rec);
    else if (subcommand == "adjoint-verify") run_adjoint(cfg, s, rec);
    else if (subcommand == "fitt") run_fitt(cfg, s, rec);
    else if (subcommand == "annihilate-check") run_annihilate(cfg, s, rec);
    else if (subcommand == "denominator-probe") run_denominator(cfg, s, rec);
    else if (subcommand == "lvalue") run_lvalue(cfg, b, rec);
    else if (subcommand == "verify-fe") run_verify_fe(cfg, b, rec);
    else if (subcommand == "pi-ratio") run_pi_ratio(cfg, b, rec);
    else if (subcommand == "gross-check") run_gross(cfg, rec);
    else if (subcommand == "stickelberger") run_stickelberger(cfg, s, rec);
    else run_kff(cfg, rec);
    rep.records = rec.take();
    std::stable_sort(rep.records.begin(), rep.records.end(), [](const CheckRecord& x, const CheckRecord& y) { return x.id < y.id; });
    return rep;
}

}  // namespace equivlk::harness
