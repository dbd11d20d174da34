#pragma once

#include "menelaus/decide.hpp"
#include "menelaus/geometry.hpp"
#include "menelaus/operad.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace menelaus::corpus {

struct Fixture {
    enum class Kind { Complex, Sequent, Interpretation, Derivation };
    std::string name;
    Kind kind = Kind::Complex;
    std::string note;
    std::optional<DeltaComplex> complex;
    std::optional<Axiom> expected_violation; // complexes that are not M-complexes
    std::optional<Sequent> sequent;          // also the expected axiomatic sequent of a complex
    std::optional<EuclideanInterp> interp;
    std::optional<std::size_t> conclusion_index; // interpretation: which formula of `sequent` to conclude
    DerivPtr derivation;
};

inline std::string_view kind_name(Fixture::Kind k)
{
    switch (k) {
    case Fixture::Kind::Complex: return "complex";
    case Fixture::Kind::Sequent: return "sequent";
    case Fixture::Kind::Interpretation: return "interpretation";
    case Fixture::Kind::Derivation: return "derivation";
    }
    return "?";
}

// ---------------------------------------------------------------- builders

struct EdgeEnds {
    std::string id, a, b;
};
struct CellEdges {
    std::string id;
    std::array<std::string, 3> edges;
};

// Orients every edge from the earlier to the later vertex of `order` and reads off the faces.
inline DeltaComplex ordered_complex(const std::vector<std::string>& order, const std::vector<EdgeEnds>& edges,
                                    const std::vector<CellEdges>& cells)
{
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;
    ComplexSpec s;
    s.v = order;
    std::map<std::string, std::pair<std::string, std::string>> ends;
    for (const auto& e : edges) {
        auto lo = e.a, hi = e.b;
        if (pos.at(hi) < pos.at(lo))
            std::swap(lo, hi);
        s.e.push_back({e.id, hi, lo});
        ends[e.id] = {lo, hi};
    }
    for (const auto& c : cells) {
        std::set<std::string> vs;
        for (const auto& e : c.edges) {
            vs.insert(ends.at(e).first);
            vs.insert(ends.at(e).second);
        }
        std::vector<std::string> v(vs.begin(), vs.end());
        std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return pos.at(x) < pos.at(y); });
        if (v.size() != 3)
            throw Error(Errc::InternalInconsistency, "cell " + c.id + " does not span three vertices");
        auto find = [&](const std::string& p, const std::string& q) {
            for (const auto& e : c.edges)
                if (ends.at(e) == std::pair{p, q})
                    return e;
            throw Error(Errc::InternalInconsistency, "cell " + c.id + " lacks a side");
        };
        s.t.push_back({c.id, find(v[1], v[2]), find(v[0], v[2]), find(v[0], v[1])});
    }
    return DeltaComplex::make(std::move(s));
}

// Every cell spans the vertices x < y < z; names spell e0 e1 e2, one character each.
inline DeltaComplex three_vertex_complex(const std::string& x, const std::string& y, const std::string& z,
                                         const std::vector<std::string>& cells)
{
    ComplexSpec s;
    s.v = {x, y, z};
    std::set<std::string> seen;
    for (const auto& c : cells) {
        std::array<std::pair<std::string, std::string>, 3> ends{std::pair{z, y}, std::pair{z, x}, std::pair{y, x}};
        for (int i = 0; i < 3; ++i) {
            auto e = c.substr(static_cast<std::size_t>(i), 1);
            if (seen.insert(e).second)
                s.e.push_back({e, ends[i].first, ends[i].second});
        }
        s.t.push_back({c, c.substr(0, 1), c.substr(1, 1), c.substr(2, 1)});
    }
    return DeltaComplex::make(std::move(s));
}

inline DeltaComplex rename_lower(const DeltaComplex& k, const std::map<std::string, std::string>& m)
{
    auto r = [&](const std::string& n) {
        auto it = m.find(n);
        return it == m.end() ? n : it->second;
    };
    ComplexSpec s = k.spec();
    for (auto& v : s.v)
        v = r(v);
    for (auto& e : s.e)
        e = {r(e.id), r(e.d0), r(e.d1)};
    for (auto& t : s.t)
        t = {t.id, r(t.d0), r(t.d1), r(t.d2)};
    return DeltaComplex::make(std::move(s));
}

inline DeltaComplex rename_cells(const DeltaComplex& k, const std::map<std::string, std::string>& m)
{
    ComplexSpec s = k.spec();
    for (auto& t : s.t)
        if (auto it = m.find(t.id); it != m.end())
            t.id = it->second;
    return DeltaComplex::make(std::move(s));
}

// ---------------------------------------------------------------- complexes

inline DeltaComplex sphere_id() { return unit("A", "B", "C", "P", "Q", "R", "x", "y").complex; }

inline DeltaComplex tetra()
{
    ComplexSpec s;
    s.v = {"A", "B", "C", "D"};
    s.e = {{"P", "C", "B"}, {"Q", "C", "A"}, {"R", "B", "A"}, {"U", "D", "A"}, {"V", "D", "B"}, {"W", "D", "C"}};
    s.t = {{"ABD", "V", "U", "R"}, {"BCD", "W", "V", "P"}, {"ACD", "W", "U", "Q"}, {"ABC", "P", "Q", "R"}};
    return DeltaComplex::make(std::move(s));
}

inline DeltaComplex torus6_pappus()
{
    return three_vertex_complex("1", "2", "3", {"EXA", "EZB", "DYB", "DXC", "FZC", "FYA"});
}

inline DeltaComplex decagon2holes()
{
    return three_vertex_complex("X", "Y", "Z", {"B1A", "B2C", "D3C", "D4E", "F5E", "F1G", "H4G", "H5I", "J2I", "J3A"});
}

inline DeltaComplex torus6_pappus1()
{
    return three_vertex_complex("X", "Y", "Z", {"B1A", "B2C", "D3C", "J2I", "J3A", "D1I"});
}

inline DeltaComplex torus6_pappus2()
{
    return three_vertex_complex("X", "Y", "Z", {"D4E", "F5E", "F1G", "H4G", "H5I", "D1I"});
}

// Opposite sides of a decagon identified around the centre Y.
inline DeltaComplex decagon10_irreducible()
{
    ComplexSpec s;
    s.v = {"X", "Y", "Z"};
    for (auto side : {"1", "2", "3", "4", "5"})
        s.e.push_back({side, "Z", "X"});
    for (auto r : {"A", "C", "E", "G", "I"})
        s.e.push_back({r, "Y", "X"});
    for (auto r : {"B", "D", "F", "H", "J"})
        s.e.push_back({r, "Z", "Y"});
    const char* cells[][3] = {{"A", "B", "1"}, {"C", "B", "4"}, {"C", "D", "5"}, {"E", "D", "2"}, {"E", "F", "3"},
                              {"G", "F", "1"}, {"G", "H", "4"}, {"I", "H", "5"}, {"I", "J", "2"}, {"A", "J", "3"}};
    for (const auto& c : cells)
        s.t.push_back({std::string(c[0]) + c[1] + c[2], c[1], c[2], c[0]});
    return DeltaComplex::make(std::move(s));
}

namespace detail {

inline std::vector<EdgeEnds> hexagon_edges(bool antenna, bool second_apex)
{
    std::vector<EdgeEnds> es;
    for (int i = 1; i <= 6; ++i) {
        auto a = std::to_string(i), b = std::to_string(i % 6 + 1);
        es.push_back({"s" + a, "c", a});
        es.push_back({"r" + a + b, a, b});
        if (second_apex)
            es.push_back({"t" + a, "7", a});
    }
    if (antenna)
        es.push_back({"a27", "2", "7"});
    return es;
}

inline std::vector<CellEdges> hexagon_cells(bool second_apex)
{
    std::vector<CellEdges> cs;
    for (int i = 1; i <= 6; ++i) {
        auto a = std::to_string(i), b = std::to_string(i % 6 + 1);
        cs.push_back({"h" + a, {"s" + a, "s" + b, "r" + a + b}});
        if (second_apex)
            cs.push_back({"g" + a, {"t" + a, "t" + b, "r" + a + b}});
    }
    return cs;
}

} // namespace detail

inline DeltaComplex ex311_a()
{
    return ordered_complex({"c", "1", "2", "3", "4", "5", "6", "7"}, detail::hexagon_edges(true, false),
                           detail::hexagon_cells(false));
}

inline DeltaComplex ex311_b()
{
    return ordered_complex({"c", "1", "2", "3", "4", "5", "6"}, detail::hexagon_edges(false, false),
                           detail::hexagon_cells(false));
}

inline DeltaComplex ex311_c()
{
    return ordered_complex({"c", "1", "2", "3", "4", "5", "6", "7"}, detail::hexagon_edges(false, true),
                           detail::hexagon_cells(true));
}

// Square torus cut along a diagonal: one vertex, three loops.
inline DeltaComplex ex311_d()
{
    ComplexSpec s;
    s.v = {"v"};
    s.e = {{"a", "v", "v"}, {"b", "v", "v"}, {"c", "v", "v"}};
    s.t = {{"x", "a", "c", "b"}, {"y", "b", "c", "a"}};
    return DeltaComplex::make(std::move(s));
}

// Square with adjacent sides identified, cut along the diagonal.
inline DeltaComplex ex311_e() { return unit("1", "2", "3", "a", "b", "d", "x", "y").complex; }

inline DeltaComplex dunce()
{
    ComplexSpec s;
    s.v = {"v"};
    s.e = {{"a", "v", "v"}};
    s.t = {{"x", "a", "a", "a"}};
    return DeltaComplex::make(std::move(s));
}

// The two spheres K and L whose composite admits a second factorization.
inline DeltaComplex ctr_K()
{
    ComplexSpec s;
    s.v = {"a", "b", "c", "d"};
    s.e = {{"1", "d", "c"}, {"2", "d", "c"}, {"3", "c", "b"}, {"4", "d", "b"}, {"5", "c", "a"}, {"6", "d", "a"}};
    s.t = {{"alpha", "1", "4", "3"}, {"beta", "2", "4", "3"}, {"gamma", "2", "6", "5"}, {"delta", "1", "6", "5"}};
    return DeltaComplex::make(std::move(s));
}

inline DeltaComplex ctr_L()
{
    ComplexSpec s;
    s.v = {"ap", "bp", "cp", "dp"};
    s.e = {{"1p", "dp", "cp"}, {"2p", "cp", "ap"}, {"3p", "dp", "ap"},
           {"4p", "cp", "bp"}, {"5p", "dp", "bp"}, {"6p", "bp", "ap"}};
    s.t = {{"alphap", "4p", "2p", "6p"}, {"betap", "5p", "3p", "6p"}, {"gammap", "1p", "5p", "4p"},
           {"deltap", "1p", "3p", "2p"}};
    return DeltaComplex::make(std::move(s));
}

inline DeltaComplex ctr_U() { return rename_cells(ctr_K(), {{"gamma", "gammap"}, {"delta", "phi"}}); }
inline DeltaComplex ctr_V() { return rename_cells(ctr_L(), {{"gammap", "psi"}, {"deltap", "delta"}}); }

// Representatives whose glued cells carry equal sextuples.
inline DeltaComplex ctr_K_rep() { return rename_lower(ctr_K(), {{"a", "ap"}, {"6", "3p"}, {"5", "2p"}}); }
inline DeltaComplex ctr_L_rep() { return rename_lower(ctr_L(), {{"cp", "c"}, {"dp", "d"}, {"1p", "2"}}); }
inline DeltaComplex ctr_U_rep() { return rename_lower(ctr_U(), {{"a", "bp"}, {"6", "5p"}, {"5", "4p"}}); }
inline DeltaComplex ctr_V_rep() { return rename_lower(ctr_V(), {{"cp", "c"}, {"dp", "d"}, {"1p", "1"}}); }

inline DeltaComplex ctr_KL() { return connected_sum(certify(ctr_K()), "gamma", certify(ctr_L()), "deltap").complex; }
inline DeltaComplex ctr_UV() { return connected_sum(certify(ctr_U()), "phi", certify(ctr_V()), "psi").complex; }
inline DeltaComplex ctr_KL_rep()
{
    return connected_sum(certify(ctr_K_rep()), "gamma", certify(ctr_L_rep()), "deltap").complex;
}
inline DeltaComplex ctr_UV_rep() { return connected_sum(certify(ctr_U_rep()), "phi", certify(ctr_V_rep()), "psi").complex; }

// A sphere with the two disjoint cut-triangles {2,3,4} and {1,5,6}.
inline DeltaComplex disjoint_T_example()
{
    return ordered_complex({"a", "b", "c", "d", "e", "f"},
                           {{"1", "a", "b"}, {"2", "a", "b"}, {"3", "a", "c"}, {"4", "b", "c"}, {"5", "a", "d"},
                            {"6", "b", "d"}, {"7", "e", "c"}, {"8", "e", "a"}, {"9", "e", "b"}, {"10", "f", "d"},
                            {"11", "f", "a"}, {"12", "f", "b"}},
                           {{"e1", {"7", "3", "8"}}, {"e2", {"7", "4", "9"}}, {"e3", {"8", "2", "9"}},
                            {"f1", {"11", "5", "10"}}, {"f2", {"10", "6", "12"}}, {"f3", {"11", "1", "12"}},
                            {"x1", {"3", "4", "1"}}, {"x2", {"5", "6", "2"}}});
}

// ---------------------------------------------------------------- sequents

inline Sequent des1() { return parse_sequent("|- (A,B,C,P,Q,R), (A,B,D,V,U,R), (A,C,D,W,U,Q), (B,C,D,W,V,P)"); }
inline Sequent des2() { return parse_sequent("|- (A,R,U,V,D,B), (A,R,Q,P,C,B), (U,R,Q,P,W,V), (A,Q,U,W,D,C)"); }
inline Sequent des3()
{
    return parse_sequent("|- (A,B,D,V,U,R), (A,C,D,W,U,Q), (A,B,C,P,Q,R), ((B,C,D,W,V,P) * (U,R,Q,P,W,V))");
}
inline Sequent pappus6()
{
    return parse_sequent(
        "|- (1,2,3,E,X,A), (1,2,3,E,Z,B), (1,2,3,D,Y,B), (1,2,3,D,X,C), (1,2,3,F,Z,C), (1,2,3,F,Y,A)");
}
inline Sequent pappus_tetra() { return parse_sequent("|- (U,X,K,L,O,V), (U,X,Z,Y,W,V), (K,X,Z,Y,M,L), (U,Z,K,M,O,W)"); }
inline Sequent pappus9()
{
    return parse_sequent("|- (1,2,3,E,X,A), (1,2,3,E,Z,B), (1,2,3,D,Y,B), (1,2,3,D,X,C), (1,2,3,F,Z,C), "
                         "((1,2,3,F,Y,A) <-> (K,X,Z,Y,M,L)), (U,X,K,L,O,V), (U,X,Z,Y,W,V), (U,Z,K,M,O,W)");
}
inline Sequent decagon_sequent()
{
    return parse_sequent("|- (X,Y,Z,B,1,A), (X,Y,Z,B,2,C), (X,Y,Z,D,3,C), (X,Y,Z,D,4,E), (X,Y,Z,F,5,E), "
                         "(X,Y,Z,F,1,G), (X,Y,Z,H,4,G), (X,Y,Z,H,5,I), (X,Y,Z,J,2,I), (X,Y,Z,J,3,A)");
}
inline Sequent unprov1() { return parse_sequent("|- (A,B,P,C,X,R), (A,C,P,B,X,Q), (B,R,C,X,P,A), (A,R,C,X,Q,B)"); }
inline Sequent pascal_ex()
{
    return parse_sequent("|- (A,B,C,L,M,N), (A,B,C,L,H,E), (A,B,C,P,K,D), (A,B,C,G,M,D), (A,B,C,F,O,E), "
                         "(A,B,C,G,H,Q), (A,B,C,F,K,N), (A,B,C,P,O,Q)");
}
inline Sequent schema_identity() { return parse_sequent("|- (A,B,C,P,Q,R), (A,B,C,P,Q,R)"); }
inline Sequent schema_perm() { return parse_sequent("|- (A,B,C,P,Q,R), (B,C,A,Q,R,P)"); }
inline Sequent schema_switch() { return parse_sequent("|- (A,B,C,P,Q,R), (A,R,Q,P,C,B)"); }
inline Sequent ex2_second_tetra()
{
    return parse_sequent("|- (B,R,E,Y,X,A), (B,P,E,Z,X,C), (R,P,E,Z,Y,Q), (B,P,R,Q,A,C)");
}

// Two tetrahedra cut along (A,B,C,P,Q,R), bridged to (B,P,R,Q,A,C) by schema steps.
inline DerivPtr ex2_derivation()
{
    auto left = make_axiom(des1(), "complex:tetra");
    auto right = decide_atomic(ex2_second_tetra()).derivation;
    if (!right)
        throw Error(Errc::InternalInconsistency, "second tetrahedron not derivable");
    auto abc = make_atomic({"A", "B", "C", "P", "Q", "R"});
    auto bpr = make_atomic({"B", "P", "R", "Q", "A", "C"});
    return make_cut(left, orbit_replace(right, bpr, abc), Formula::atomic(abc));
}

// ---------------------------------------------------------------- interpretations

namespace detail {

inline Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

inline Point meet(const Point& a, const Point& b, const Point& c, const Point& d)
{
    auto p = line_intersection(a, b, c, d);
    if (!p)
        throw Error(Errc::InternalInconsistency, "parallel lines in a fixture construction");
    return *p;
}

inline Point scale(const Point& p, const Rational& s) { return {p[0] * s, p[1] * s}; }

} // namespace detail

// Lines AU, BV, CW concurrent at D; P, Q, R are the meets of corresponding sides.
inline EuclideanInterp desargues_only_if()
{
    using detail::meet;
    EuclideanInterp v;
    v["D"] = detail::pt(0, 0);
    v["A"] = detail::pt(3, 1);
    v["B"] = detail::pt(1, 4);
    v["C"] = detail::pt(-2, 1);
    v["U"] = detail::scale(v["A"], 2);
    v["V"] = detail::scale(v["B"], Rational(3, 2));
    v["W"] = detail::scale(v["C"], 3);
    v["P"] = meet(v["B"], v["C"], v["V"], v["W"]);
    v["Q"] = meet(v["A"], v["C"], v["U"], v["W"]);
    v["R"] = meet(v["A"], v["B"], v["U"], v["V"]);
    return v;
}

// P, Q, R on one transversal of ABC; D is the meet of AU and BV.
inline EuclideanInterp desargues_if()
{
    using detail::meet;
    EuclideanInterp v;
    v["A"] = detail::pt(0, 0);
    v["B"] = detail::pt(6, 0);
    v["C"] = detail::pt(0, 6);
    v["P"] = detail::pt(4, 2);
    v["Q"] = detail::pt(0, -2);
    v["R"] = detail::pt(2, 0);
    v["W"] = detail::pt(1, 5);
    v["V"] = point_with_ratio(v["W"], v["P"], Rational(-2)); // beyond P on WP
    v["U"] = meet(v["W"], v["Q"], v["V"], v["R"]);
    v["D"] = meet(v["A"], v["U"], v["B"], v["V"]);
    return v;
}

// ---------------------------------------------------------------- catalog

namespace detail {

inline Fixture complex_fixture(std::string name, DeltaComplex k, std::string note, std::optional<Sequent> seq = {})
{
    Fixture f;
    f.name = std::move(name);
    f.kind = Fixture::Kind::Complex;
    f.complex = std::move(k);
    f.note = std::move(note);
    f.sequent = std::move(seq);
    return f;
}

inline Fixture failing_fixture(std::string name, DeltaComplex k, Axiom why, std::string note)
{
    auto f = complex_fixture(std::move(name), std::move(k), std::move(note));
    f.expected_violation = why;
    return f;
}

inline Fixture sequent_fixture(std::string name, Sequent s, std::string note)
{
    Fixture f;
    f.name = std::move(name);
    f.kind = Fixture::Kind::Sequent;
    f.sequent = std::move(s);
    f.note = std::move(note);
    return f;
}

inline Fixture interp_fixture(std::string name, Sequent s, std::size_t conclusion, EuclideanInterp v, std::string note)
{
    Fixture f;
    f.name = std::move(name);
    f.kind = Fixture::Kind::Interpretation;
    f.sequent = std::move(s);
    f.conclusion_index = conclusion;
    f.interp = std::move(v);
    f.note = std::move(note);
    return f;
}

inline std::size_t index_of(const Sequent& s, const std::string& formula)
{
    auto f = parse_formula(formula);
    const auto& fs = s.formulas();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i] == f)
            return i;
    throw Error(Errc::InternalInconsistency, formula + " not in " + s.text());
}

using Maker = std::function<Fixture()>;

inline const std::vector<std::pair<std::string, Maker>>& catalog()
{
    static const std::vector<std::pair<std::string, Maker>> table = {
        {"sphere_id", [] { return complex_fixture("sphere_id", sphere_id(), "two triangles with one boundary; identity axiom", schema_identity()); }},
        {"tetra", [] { return complex_fixture("tetra", tetra(), "tetrahedral sphere ABCD; Desargues sequent des1", des1()); }},
        {"tetra_if", [] { return sequent_fixture("tetra_if", des2(), "second tetrahedral Desargues sequent (if direction)"); }},
        {"des3", [] { return sequent_fixture("des3", des3(), "both Desargues directions packed with one diskon"); }},
        {"des3_only_if", [] { auto s = des3(); return interp_fixture("des3_only_if", s, index_of(s, "(A,B,C,P,Q,R)"), desargues_only_if(), "concurrent AU, BV, CW through D"); }},
        {"des3_if", [] { auto s = des3(); return interp_fixture("des3_if", s, index_of(s, "(A,C,D,W,U,Q)"), desargues_if(), "P, Q, R collinear; D = AU meet BV"); }},
        {"ex2_derivation", [] { Fixture f; f.name = "ex2_derivation"; f.kind = Fixture::Kind::Derivation; f.derivation = ex2_derivation(); f.sequent = f.derivation->conclusion; f.note = "non-eliminable cut of two tetrahedra"; return f; }},
        {"torus6_pappus", [] { return complex_fixture("torus6_pappus", torus6_pappus(), "six-triangle torus on vertices 1, 2, 3; Pappus sequent", pappus6()); }},
        {"torus6_pappus1", [] { return complex_fixture("torus6_pappus1", torus6_pappus1(), "left hexagon torus of the two-hole torus"); }},
        {"torus6_pappus2", [] { return complex_fixture("torus6_pappus2", torus6_pappus2(), "right hexagon torus of the two-hole torus"); }},
        {"pappus_tetra", [] { return sequent_fixture("pappus_tetra", pappus_tetra(), "tetrahedron UXZK of the Pappus-line proof"); }},
        {"pappus9", [] { return sequent_fixture("pappus9", pappus9(), "nine-element sequent after equiv introduction"); }},
        {"decagon2holes", [] { return complex_fixture("decagon2holes", decagon2holes(), "ten-triangle two-hole torus", decagon_sequent()); }},
        {"decagon10_irreducible", [] { return complex_fixture("decagon10_irreducible", decagon10_irreducible(), "decagon with opposite sides identified; irreducible"); }},
        {"unprov1", [] { return sequent_fixture("unprov1", unprov1(), "valid but underivable: seven letters"); }},
        {"pascal_ex", [] { return sequent_fixture("pascal_ex", pascal_ex(), "valid but underivable Pascal-type sequent"); }},
        {"schema_perm", [] { return sequent_fixture("schema_perm", schema_perm(), "vertex permutation schema"); }},
        {"schema_switch", [] { return sequent_fixture("schema_switch", schema_switch(), "triangle switching schema"); }},
        {"ex311_a", [] { return failing_fixture("ex311_a", ex311_a(), Axiom::NotHomogeneous, "hexagonal disc with an antenna"); }},
        {"ex311_b", [] { return failing_fixture("ex311_b", ex311_b(), Axiom::EdgeDegreeNotTwo, "hexagonal disc; rim edges bound one triangle"); }},
        {"ex311_c", [] { return complex_fixture("ex311_c", ex311_c(), "hexagonal bipyramid"); }},
        {"ex311_d", [] { return failing_fixture("ex311_d", ex311_d(), Axiom::NotRegular, "square torus with one vertex"); }},
        {"ex311_e", [] { return complex_fixture("ex311_e", ex311_e(), "square with adjacent sides identified"); }},
        {"dunce", [] { return failing_fixture("dunce", dunce(), Axiom::NotRegular, "dunce hat: one edge three times"); }},
        {"ctr_K", [] { return complex_fixture("ctr_K", ctr_K(), "irreducible sphere K"); }},
        {"ctr_L", [] { return complex_fixture("ctr_L", ctr_L(), "irreducible sphere L"); }},
        {"ctr_U", [] { return complex_fixture("ctr_U", ctr_U(), "K with gamma, delta renamed gammap, phi"); }},
        {"ctr_V", [] { return complex_fixture("ctr_V", ctr_V(), "L with gammap, deltap renamed psi, delta"); }},
        {"ctr_K_rep", [] { return complex_fixture("ctr_K_rep", ctr_K_rep(), "K relettered so nu gamma matches L_rep"); }},
        {"ctr_L_rep", [] { return complex_fixture("ctr_L_rep", ctr_L_rep(), "L relettered so nu deltap matches K_rep"); }},
        {"ctr_U_rep", [] { return complex_fixture("ctr_U_rep", ctr_U_rep(), "U relettered so nu phi matches V_rep"); }},
        {"ctr_V_rep", [] { return complex_fixture("ctr_V_rep", ctr_V_rep(), "V relettered so nu psi matches U_rep"); }},
        {"ctr_KL", [] { return complex_fixture("ctr_KL", ctr_KL(), "K summed with L along gamma, deltap"); }},
        {"ctr_UV", [] { return complex_fixture("ctr_UV", ctr_UV(), "U summed with V along phi, psi"); }},
        {"ctr_KL_rep", [] { return complex_fixture("ctr_KL_rep", ctr_KL_rep(), "composite with two imbricated cut-triangles"); }},
        {"ctr_UV_rep", [] { return complex_fixture("ctr_UV_rep", ctr_UV_rep(), "the same composite from U_rep and V_rep"); }},
        {"disjoint_T_example", [] { return complex_fixture("disjoint_T_example", disjoint_T_example(), "sphere with disjoint cut-triangles {2,3,4} and {1,5,6}"); }},
    };
    return table;
}

} // namespace detail

inline std::vector<std::string> list()
{
    std::vector<std::string> out;
    for (const auto& [n, m] : detail::catalog())
        out.push_back(n);
    return out;
}

inline Fixture get(const std::string& name)
{
    for (const auto& [n, m] : detail::catalog())
        if (n == name)
            return m();
    throw Error(Errc::UnknownFixture, "no fixture named '" + name + "'");
}

inline MComplexCert get_cert(const std::string& name)
{
    auto f = get(name);
    if (!f.complex)
        throw Error(Errc::UnknownFixture, "'" + name + "' is not a complex");
    return certify(*f.complex);
}

} // namespace menelaus::corpus
