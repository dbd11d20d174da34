#pragma once

#include "menelaus/decide.hpp"
#include "menelaus/geometry.hpp"
#include "menelaus/operad.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <variant>

namespace menelaus {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what)
{
    throw Error(Errc::ParseError, (where.empty() ? "/" : where) + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        bad(where, std::string("missing field '") + key + "'");
    return *it;
}

inline std::string str(const Json& j, const std::string& where)
{
    if (!j.is_string())
        bad(where, "expected a string");
    return j.get<std::string>();
}

inline std::string str_field(const Json& j, const char* key, const std::string& where)
{
    return str(field(j, key, where), where + "/" + key);
}

inline const Json& array_field(const Json& j, const char* key, const std::string& where)
{
    const auto& a = field(j, key, where);
    if (!a.is_array())
        bad(where + "/" + key, "expected an array");
    return a;
}

} // namespace detail

// Parses JSON text; syntax errors carry line and column.
inline Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string m = e.what();
        if (auto p = m.find("] "); p != std::string::npos)
            m = m.substr(p + 2);
        throw Error(Errc::ParseError, m);
    }
}

// ---------------------------------------------------------------- complexes and chains

inline Json complex_to_json(const DeltaComplex& k)
{
    Json j;
    j["v"] = k.vertices();
    j["e"] = Json::array();
    for (const auto& e : k.edges())
        j["e"].push_back(Json{{"id", e.id}, {"d0", e.d0}, {"d1", e.d1}});
    j["t"] = Json::array();
    for (const auto& t : k.triangles())
        j["t"].push_back(Json{{"id", t.id}, {"d0", t.d0}, {"d1", t.d1}, {"d2", t.d2}});
    return j;
}

inline DeltaComplex complex_from_json(const Json& j)
{
    using namespace detail;
    ComplexSpec s;
    const auto& v = array_field(j, "v", "");
    for (std::size_t i = 0; i < v.size(); ++i)
        s.v.push_back(str(v[i], "/v/" + std::to_string(i)));
    const auto& e = array_field(j, "e", "");
    for (std::size_t i = 0; i < e.size(); ++i) {
        auto w = "/e/" + std::to_string(i);
        s.e.push_back({str_field(e[i], "id", w), str_field(e[i], "d0", w), str_field(e[i], "d1", w)});
    }
    const auto& t = array_field(j, "t", "");
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto w = "/t/" + std::to_string(i);
        s.t.push_back({str_field(t[i], "id", w), str_field(t[i], "d0", w), str_field(t[i], "d1", w), str_field(t[i], "d2", w)});
    }
    return DeltaComplex::make(std::move(s));
}

inline DeltaComplex parse_complex(const std::string& text) { return complex_from_json(parse_json(text)); }

inline Json chain_to_json(const Chain& c)
{
    Json j = Json::object();
    for (const auto& [cell, k] : c)
        j[cell] = k;
    return j;
}

inline Chain chain_from_json(const Json& j)
{
    if (!j.is_object())
        detail::bad("", "expected an object");
    Chain c;
    for (const auto& [cell, k] : j.items()) {
        if (!k.is_number_integer())
            detail::bad("/" + cell, "expected an integer coefficient");
        chain_add(c, cell, k.get<long long>());
    }
    return c;
}

inline Json cert_to_json(const MComplexCert& c)
{
    return Json{{"chi", euler_characteristic(c.complex)},
                {"genus", genus(c)},
                {"components", c.component_count},
                {"orientation", chain_to_json(c.orientation)}};
}

inline Json violation_to_json(const Violation& v)
{
    Json j{{"axiom", axiom_name(v.axiom)}, {"witness", v.witness}};
    if (v.degree >= 0)
        j["degree"] = v.degree;
    j["message"] = v.message;
    return j;
}

// ---------------------------------------------------------------- derivations

inline Json derivation_to_json(const DerivPtr& d)
{
    Json j;
    j["rule"] = rule_name(d->rule);
    if (d->rule == Rule::Cut)
        j["cut"] = d->cut.text();
    if (d->is_intro())
        j["principal"] = d->principal.text();
    if (d->rule == Rule::Axiom)
        j["axiom_source"] = d->axiom_source;
    j["premises"] = Json::array();
    for (const auto& p : d->premises)
        j["premises"].push_back(derivation_to_json(p));
    j["conclusion"] = d->conclusion.text();
    return j;
}

namespace detail {

// An introduced formula of the right kind whose halves occur in the premises.
inline Formula infer_principal(const Derivation& d, Formula::Kind k)
{
    for (const auto& f : d.conclusion.formulas())
        if (!f.is_atomic() && f.kind() == k && d.premises.size() == 2 && d.premises[0]->conclusion.contains(f.left()) &&
            d.premises[1]->conclusion.contains(f.right()))
            return f;
    return {};
}

inline DerivPtr derivation_from_json(const Json& j, const std::string& where)
{
    auto d = std::make_shared<Derivation>();
    auto rule = str_field(j, "rule", where);
    auto formula_at = [&](const char* key) {
        try {
            return parse_formula(str_field(j, key, where));
        } catch (const Error& e) {
            bad(where + "/" + key, e.what());
        }
    };
    try {
        d->conclusion = parse_sequent(str_field(j, "conclusion", where));
    } catch (const Error& e) {
        bad(where + "/conclusion", e.what());
    }
    if (j.contains("premises")) {
        const auto& ps = array_field(j, "premises", where);
        for (std::size_t i = 0; i < ps.size(); ++i)
            d->premises.push_back(derivation_from_json(ps[i], where + "/premises/" + std::to_string(i)));
    }
    if (rule == "axiom") {
        d->rule = Rule::Axiom;
        d->axiom_source = str_field(j, "axiom_source", where);
    } else if (rule == "cut") {
        d->rule = Rule::Cut;
        d->cut = formula_at("cut");
    } else if (rule == "ecut") {
        d->rule = Rule::ECut;
    } else if (rule == "diskon" || rule == "equiv") {
        d->rule = rule == "diskon" ? Rule::Diskon : Rule::Equiv;
        if (j.contains("principal"))
            d->principal = formula_at("principal");
        else
            d->principal = infer_principal(*d, rule == "diskon" ? Formula::Kind::Diskon : Formula::Kind::Equiv);
    } else {
        bad(where + "/rule", "unknown rule '" + rule + "'");
    }
    return d;
}

} // namespace detail

// Nodes are taken as written; check_derivation judges them.
inline DerivPtr derivation_from_json(const Json& j) { return detail::derivation_from_json(j, ""); }
inline DerivPtr parse_derivation(const std::string& text) { return derivation_from_json(parse_json(text)); }

// ---------------------------------------------------------------- interpretations

using Interpretation = std::variant<EuclideanInterp, ProjectiveInterp>;

inline Json interp_to_json(const Interpretation& v)
{
    Json pts = Json::object();
    auto put = [&](const auto& m) {
        for (const auto& [l, p] : m) {
            Json a = Json::array();
            for (const auto& q : p)
                a.push_back(rational_text(q));
            pts[l] = a;
        }
    };
    std::visit(put, v);
    return Json{{std::holds_alternative<EuclideanInterp>(v) ? "euclidean" : "projective", pts}};
}

inline Interpretation interp_from_json(const Json& j)
{
    using namespace detail;
    if (!j.is_object() || j.size() != 1)
        bad("", "expected exactly one of 'euclidean' or 'projective'");
    const auto& [kind, pts] = *j.items().begin();
    if (kind != "euclidean" && kind != "projective")
        bad("", "unknown interpretation kind '" + kind + "'");
    if (!pts.is_object())
        bad("/" + kind, "expected an object");
    const std::size_t dim = kind == "euclidean" ? 2 : 3;
    std::map<Letter, std::vector<Rational>> raw;
    for (const auto& [l, p] : pts.items()) {
        auto w = "/" + kind + "/" + l;
        if (!p.is_array() || p.size() != dim)
            bad(w, "expected " + std::to_string(dim) + " coordinates");
        for (std::size_t i = 0; i < dim; ++i) {
            try {
                raw[l].push_back(parse_rational(str(p[i], w + "/" + std::to_string(i))));
            } catch (const Error& e) {
                if (e.code() != Errc::ParseError)
                    throw;
                bad(w + "/" + std::to_string(i), e.what());
            }
        }
    }
    if (dim == 2) {
        EuclideanInterp v;
        for (auto& [l, c] : raw)
            v[l] = {c[0], c[1]};
        return v;
    }
    ProjectiveInterp v;
    for (auto& [l, c] : raw) {
        if (c[0] == 0 && c[1] == 0 && c[2] == 0)
            bad("/projective/" + l, "the zero vector is not a projective point");
        v[l] = {c[0], c[1], c[2]};
    }
    return v;
}

inline Interpretation parse_interp(const std::string& text) { return interp_from_json(parse_json(text)); }

// ---------------------------------------------------------------- decomposition trees

inline Json tree_to_json(const DecompositionTree& t)
{
    Json j;
    j["nodes"] = Json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        j["nodes"].push_back(Json{{"id", i}, {"complex", complex_to_json(t.nodes[i].complex).dump()}});
    j["edges"] = Json::array();
    for (const auto& e : t.edges)
        j["edges"].push_back(Json{{"a", e.a}, {"b", e.b}, {"cell_a", e.cell_a}, {"cell_b", e.cell_b}});
    return j;
}

inline DecompositionTree tree_from_json(const Json& j)
{
    using namespace detail;
    DecompositionTree t;
    const auto& ns = array_field(j, "nodes", "");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        auto w = "/nodes/" + std::to_string(i);
        const auto& id = field(ns[i], "id", w);
        if (!id.is_number_unsigned() || id.get<std::size_t>() != i)
            bad(w + "/id", "node ids must be 0, 1, 2, ... in order");
        try {
            t.nodes.push_back(certify(parse_complex(str_field(ns[i], "complex", w))));
        } catch (const Error& e) {
            bad(w + "/complex", e.what());
        }
    }
    const auto& es = array_field(j, "edges", "");
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto w = "/edges/" + std::to_string(i);
        TreeEdge e;
        for (auto [key, slot] : {std::pair{"a", &e.a}, std::pair{"b", &e.b}}) {
            const auto& x = field(es[i], key, w);
            if (!x.is_number_unsigned() || x.get<std::size_t>() >= t.nodes.size())
                bad(w + "/" + key, "expected a node id");
            *slot = x.get<std::size_t>();
        }
        e.cell_a = str_field(es[i], "cell_a", w);
        e.cell_b = str_field(es[i], "cell_b", w);
        t.edges.push_back(std::move(e));
    }
    return t;
}

// ---------------------------------------------------------------- diagrams

inline std::string dot_quote(const std::string& s)
{
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            r += '\\';
        r += c;
    }
    return r + "\"";
}

// Dual graph: one node per 2-cell, one edge per 1-cell joining the cells it bounds.
inline std::string dual_graph_dot(const DeltaComplex& k, const std::string& name = "dual")
{
    std::ostringstream o;
    o << "graph " << dot_quote(name) << " {\n";
    for (const auto& t : k.triangles())
        o << "  " << dot_quote(t.id) << ";\n";
    std::map<std::string, std::vector<std::string>> around;
    for (const auto& t : k.triangles())
        for (const auto& f : t.faces())
            around[f].push_back(t.id);
    for (const auto& e : k.edges()) {
        const auto& cs = around[e.id];
        for (std::size_t i = 0; i + 1 < cs.size(); i += 2)
            o << "  " << dot_quote(cs[i]) << " -- " << dot_quote(cs[i + 1]) << " [label=" << dot_quote(e.id) << "];\n";
    }
    o << "}\n";
    return o.str();
}

inline std::string tree_dot(const DecompositionTree& t)
{
    std::ostringstream o;
    o << "graph \"decomposition\" {\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        o << "  n" << i << " [label=" << dot_quote(std::to_string(t.nodes[i].complex.num_triangles()) + " cells") << "];\n";
    for (const auto& e : t.edges)
        o << "  n" << e.a << " -- n" << e.b << " [label=" << dot_quote(e.cell_a + " / " + e.cell_b) << "];\n";
    o << "}\n";
    return o.str();
}

} // namespace menelaus
