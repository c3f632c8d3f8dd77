/**
 * @file model_io.hpp
 * @brief JSON model files and result tables.
 *
 * Schema (all sections optional, entity names are object keys):
 *   algebras:    {type: matrix|group|abelian|pauli|direct_sum|raw, ...; grading?: {...}}
 *   frobenius:   {algebra, family: fhk|group|from_element|raw, R, x?|eps?}
 *   involutions: {frobenius, kind, s?, base?}
 *   crossings:   {frobenius, type: canonical|bicharacter|entries, bicharacter?|entries?}
 *   bimodules:   {frobenius, type: regular, sign}
 * Scalars are strings: "p/q" or "cyclo(N)[c0, c1, ...]".
 */

#pragma once

#include "defect.hpp"
#include "involution.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace statesum {

using Json = nlohmann::json;

struct ModelError : std::invalid_argument {
    enum class Kind { Syntax, Reference, Validation };
    Kind kind;
    ModelError(Kind k, const std::string& what) : std::invalid_argument(what), kind(k) {}
};

struct ModelFile {
    Json spec;  // normalized source
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, FrobeniusPtr> frobenius;
    std::map<std::string, Involution> involutions;
    std::map<std::string, CrossingData> crossings;
    std::map<std::string, BimoduleData> bimodules;
};

namespace detail {

inline std::pair<int, int> line_col(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// Position of "entity" inside "section", or of the section itself; 0 if absent.
inline std::size_t locate(const std::string& text, const std::string& section, const std::string& entity) {
    std::size_t s = text.find("\"" + section + "\"");
    if (s == std::string::npos) return 0;
    if (entity.empty()) return s;
    std::size_t e = text.find("\"" + entity + "\"", s);
    return e == std::string::npos ? s : e;
}

struct Ctx {
    const std::string& text;

    [[noreturn]] void fail(ModelError::Kind k, const std::string& section, const std::string& entity,
                           const std::string& msg) const {
        auto [l, c] = line_col(text, locate(text, section, entity));
        std::string where = section + (entity.empty() ? "" : "." + entity);
        throw ModelError(k, std::to_string(l) + ":" + std::to_string(c) + ": " + where + ": " + msg);
    }
};

inline Scalar scalar_of(const Json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("scalar must be a string \"p/q\" or \"cyclo(N)[...]\" or an integer");
}

inline Json scalar_json(const Scalar& s) { return s.str(); }

inline Vec vec_of(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of scalars");
    Vec v;
    for (const auto& x : j) v.push_back(scalar_of(x));
    return v;
}

inline Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(scalar_json(x));
    return a;
}

// Re-emit every scalar field in canonical form so printing is a fixed point.
inline void normalize_scalars(Json& j) {
    static const std::vector<std::string> scalar_keys{"R", "sign"};
    static const std::vector<std::string> vector_keys{"x", "eps", "s", "unit", "structure"};
    if (!j.is_object()) return;
    for (const auto& k : scalar_keys)
        if (j.contains(k)) j[k] = scalar_json(scalar_of(j[k]));
    for (const auto& k : vector_keys)
        if (j.contains(k) && j[k].is_array()) j[k] = vec_json(vec_of(j[k]));
    if (j.contains("bicharacter") && j["bicharacter"].is_array())
        for (auto& row : j["bicharacter"]) row = vec_json(vec_of(row));
    if (j.contains("entries") && j["entries"].is_array())
        for (auto& e : j["entries"])
            if (e.is_array() && e.size() == 5) e[4] = scalar_json(scalar_of(e[4]));
}

inline Group group_of(const Json& j) {
    std::string g = j.at("group").get<std::string>();
    if (g == "cyclic") return cyclic_group(j.at("order").get<int>());
    if (g == "abelian") return abelian_group(j.at("moduli").get<std::vector<int>>());
    if (g == "symmetric") return symmetric_group(j.at("k").get<int>());
    if (g == "dihedral") return dihedral_group(j.at("m").get<int>());
    if (g == "quaternion") return quaternion_group();
    if (g == "table") return Group(j.at("table").get<std::vector<std::vector<int>>>(), j.value("unit", 0));
    throw ParseError("unknown group '" + g + "'");
}

inline AlgebraPtr apply_grading(const AlgebraPtr& A, const Json& g) {
    std::string kind = g.value("kind", "explicit");
    if (kind == "block_z2") return block_z2_grading(A, g.at("p").get<int>());
    if (kind == "complex_i") return complex_i_grading(A);
    if (kind == "klein") return klein_grading(A);
    if (kind == "explicit")
        return with_grading(A, Grading{g.at("moduli").get<std::vector<int>>(),
                                       g.at("grades").get<std::vector<std::vector<int>>>()});
    throw ParseError("unknown grading kind '" + kind + "'");
}

}  // namespace detail

inline ModelFile parse_model(const std::string& text) {
    detail::Ctx ctx{text};
    ModelFile m;
    try {
        m.spec = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [l, c] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ModelError(ModelError::Kind::Syntax, std::to_string(l) + ":" + std::to_string(c) + ": syntax error: " +
                                                       std::string(e.what()));
    }
    if (!m.spec.is_object()) throw ModelError(ModelError::Kind::Syntax, "1:1: model must be a JSON object");
    static const std::vector<std::string> sections{"algebras", "frobenius", "involutions", "crossings", "bimodules"};
    for (auto it = m.spec.begin(); it != m.spec.end(); ++it)
        if (std::find(sections.begin(), sections.end(), it.key()) == sections.end())
            ctx.fail(ModelError::Kind::Syntax, it.key(), "", "unknown section");
    for (const auto& s : sections)
        if (m.spec.contains(s) && !m.spec[s].is_object()) ctx.fail(ModelError::Kind::Syntax, s, "", "must be an object");

    auto section = [&](const std::string& s) -> Json& {
        static Json empty = Json::object();
        return m.spec.contains(s) ? m.spec[s] : empty;
    };
    auto ref = [&](const auto& table, const Json& spec, const std::string& key, const std::string& sec,
                   const std::string& name) -> const auto& {
        if (!spec.contains(key) || !spec[key].is_string())
            ctx.fail(ModelError::Kind::Syntax, sec, name, "missing string field '" + key + "'");
        std::string r = spec[key].get<std::string>();
        auto it = table.find(r);
        if (it == table.end())
            ctx.fail(ModelError::Kind::Reference, sec, name, "unresolved reference " + key + " = '" + r + "'");
        return it->second;
    };
    auto guarded = [&](const std::string& sec, const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const ModelError&) {
            throw;
        } catch (const std::exception& e) {
            ctx.fail(ModelError::Kind::Validation, sec, name, e.what());
        }
    };

    // Algebras may reference earlier-built algebras (direct sums); resolve in dependency order.
    {
        Json& secA = section("algebras");
        std::vector<std::string> pending;
        for (auto it = secA.begin(); it != secA.end(); ++it) pending.push_back(it.key());
        while (!pending.empty()) {
            std::vector<std::string> next;
            for (const auto& name : pending) {
                Json& spec = secA[name];
                guarded("algebras", name, [&] { detail::normalize_scalars(spec); });
                std::string type = spec.value("type", "");
                if (type == "direct_sum") {
                    bool ready = true;
                    if (!spec.contains("parts") || !spec["parts"].is_array() || spec["parts"].empty())
                        ctx.fail(ModelError::Kind::Syntax, "algebras", name, "direct_sum needs a non-empty 'parts'");
                    for (const auto& p : spec["parts"]) {
                        std::string pn = p.get<std::string>();
                        if (!secA.contains(pn))
                            ctx.fail(ModelError::Kind::Reference, "algebras", name, "unresolved reference part = '" + pn + "'");
                        ready &= m.algebras.count(pn) > 0;
                    }
                    if (!ready) {
                        next.push_back(name);
                        continue;
                    }
                }
                guarded("algebras", name, [&] {
                    AlgebraPtr A;
                    if (type == "matrix") {
                        A = matrix_algebra(spec.at("n").get<int>(), parse_ring(spec.value("ring", "C")));
                    } else if (type == "group") {
                        A = group_algebra(detail::group_of(spec));
                    } else if (type == "abelian") {
                        A = abelian_group_algebra(spec.at("moduli").get<std::vector<int>>());
                    } else if (type == "pauli") {
                        A = pauli_matrix_algebra(spec.at("n").get<int>());
                    } else if (type == "direct_sum") {
                        for (const auto& p : spec["parts"]) {
                            const auto& part = m.algebras.at(p.get<std::string>());
                            A = A ? direct_sum(A, part) : part;
                        }
                    } else if (type == "raw") {
                        A = raw_algebra(spec.at("dim").get<int>(), detail::vec_of(spec.at("structure")),
                                        detail::vec_of(spec.at("unit")));
                    } else {
                        throw ParseError("unknown algebra type '" + type + "'");
                    }
                    if (spec.contains("grading")) A = detail::apply_grading(A, spec["grading"]);
                    m.algebras[name] = A;
                });
            }
            if (next.size() == pending.size())
                ctx.fail(ModelError::Kind::Reference, "algebras", next.front(), "cyclic direct_sum references");
            pending = next;
        }
    }

    for (auto& [name, spec] : section("frobenius").items()) {
        guarded("frobenius", name, [&] { detail::normalize_scalars(spec); });
        const auto& A = ref(m.algebras, spec, "algebra", "frobenius", name);
        guarded("frobenius", name, [&] {
            Scalar R = spec.contains("R") ? detail::scalar_of(spec["R"]) : Scalar(1);
            std::string fam = spec.value("family", "fhk");
            FrobeniusPtr F;
            if (fam == "fhk") {
                F = frobenius_fhk(A, R);
            } else if (fam == "group") {
                F = frobenius_group(A, R);
            } else if (fam == "from_element") {
                F = frobenius_from_element(A, detail::vec_of(spec.at("x")), R);
            } else if (fam == "raw") {
                F = frobenius_raw(A, detail::vec_of(spec.at("eps")), R);
            } else {
                throw ParseError("unknown family '" + fam + "'");
            }
            m.frobenius[name] = F;
        });
    }

    for (auto& [name, spec] : section("involutions").items()) {
        guarded("involutions", name, [&] { detail::normalize_scalars(spec); });
        const auto& F = ref(m.frobenius, spec, "frobenius", "involutions", name);
        guarded("involutions", name, [&] {
            InvolutionKind k = parse_kind(spec.value("kind", "canonical"));
            if (k == InvolutionKind::Conjugated)
                m.involutions[name] = conjugated_involution(F, detail::vec_of(spec.at("s")),
                                                            parse_kind(spec.value("base", "transpose")));
            else
                m.involutions[name] = standard_involution(F, k);
        });
    }

    for (auto& [name, spec] : section("crossings").items()) {
        guarded("crossings", name, [&] { detail::normalize_scalars(spec); });
        const auto& F = ref(m.frobenius, spec, "frobenius", "crossings", name);
        guarded("crossings", name, [&] {
            std::string type = spec.value("type", "canonical");
            if (type == "canonical") {
                m.crossings.emplace(name, canonical_crossing(F));
            } else if (type == "bicharacter") {
                const auto& A = *F->algebra();
                if (!A.grading()) throw SpinError("bicharacter crossing needs a graded algebra");
                Bicharacter b{A.grading()->moduli, {}};
                for (const auto& row : spec.at("bicharacter")) b.gen.push_back(detail::vec_of(row));
                m.crossings.emplace(name, bicharacter_crossing(F, b));
            } else if (type == "entries") {
                std::vector<std::tuple<int, int, int, int, Scalar>> ent;
                for (const auto& e : spec.at("entries")) {
                    if (!e.is_array() || e.size() != 5) throw ParseError("entries are [i, j, k, l, value]");
                    ent.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>(),
                                     detail::scalar_of(e[4]));
                }
                m.crossings.emplace(name, crossing_from_entries(F, ent, name));
            } else {
                throw ParseError("unknown crossing type '" + type + "'");
            }
        });
    }

    for (auto& [name, spec] : section("bimodules").items()) {
        guarded("bimodules", name, [&] { detail::normalize_scalars(spec); });
        const auto& F = ref(m.frobenius, spec, "frobenius", "bimodules", name);
        guarded("bimodules", name, [&] {
            std::string type = spec.value("type", "regular");
            if (type != "regular") throw ParseError("only regular bimodules are supported");
            m.bimodules.emplace(name, regular_bimodule(F, spec.contains("sign") ? detail::scalar_of(spec["sign"]) : Scalar(1)));
        });
    }
    return m;
}

inline std::string print_model(const ModelFile& m) { return m.spec.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Result tables

struct ResultRow {
    std::string model, surface, spin;
    Scalar value;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    void add(std::string model, std::string surface, std::string spin, Scalar v) {
        rows.push_back({std::move(model), std::move(surface), std::move(spin), std::move(v)});
    }
};

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string to_csv(const ResultTable& t) {
    std::ostringstream os;
    os << "model,surface,spin,exact,decimal\n";
    for (const auto& r : t.rows)
        os << csv_field(r.model) << ',' << csv_field(r.surface) << ',' << csv_field(r.spin) << ','
           << csv_field(r.value.str()) << ',' << csv_field(r.value.decimal()) << '\n';
    return os.str();
}

inline std::string to_json(const ResultTable& t) {
    Json a = Json::array();
    for (const auto& r : t.rows)
        a.push_back({{"model", r.model}, {"surface", r.surface}, {"spin", r.spin}, {"exact", r.value.str()},
                     {"decimal", r.value.decimal()}});
    return a.dump(2) + "\n";
}

}  // namespace statesum
