#pragma once

#include "menelaus/derivation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace menelaus {

// Two 2-cells x, y with the same boundary P, Q, R on the vertices A, B, C.
inline MComplexCert unit(const Letter& a, const Letter& b, const Letter& c, const Letter& p, const Letter& q,
                         const Letter& r, const std::string& x, const std::string& y)
{
    std::set<std::string> letters{a, b, c, p, q, r};
    if (letters.size() != 6 || x == y)
        throw Error(Errc::RepeatedLetter, "unit needs six distinct letters and two distinct cells");
    ComplexSpec s;
    s.v = {a, b, c};
    s.e = {{p, c, b}, {q, c, a}, {r, b, a}};
    s.t = {{x, p, q, r}, {y, p, q, r}};
    return certify(DeltaComplex::make(std::move(s)));
}

inline bool is_unit(const MComplexCert& k) { return k.complex.num_triangles() == 2; }

// sigma maps 2-cell names; names it omits are kept.
inline MComplexCert rename(const MComplexCert& k, const std::map<std::string, std::string>& sigma)
{
    for (const auto& [a, b] : sigma)
        if (!k.complex.has_triangle(a))
            throw Error(Errc::NotBijective, "'" + a + "' is not a 2-cell");
    ComplexSpec s = k.complex.spec();
    std::set<std::string> image;
    for (auto& t : s.t) {
        if (auto it = sigma.find(t.id); it != sigma.end())
            t.id = it->second;
        if (!image.insert(t.id).second)
            throw Error(Errc::NotBijective, "two 2-cells renamed to '" + t.id + "'");
    }
    return certify(DeltaComplex::make(std::move(s)));
}

// ---------------------------------------------------------------- connected sum

namespace detail {

inline std::array<std::string, 3> cell_vertices(const DeltaComplex& k, const TriSpec& t)
{
    return {k.edge(t.d2).d1, k.edge(t.d2).d0, k.edge(t.d0).d0};
}

} // namespace detail

inline MComplexCert connected_sum(const MComplexCert& kc, const std::string& x, const MComplexCert& lc,
                                  const std::string& y)
{
    const auto& k = kc.complex;
    const auto& l = lc.complex;
    if (!k.has_triangle(x))
        throw Error(Errc::CellNotFound, "'" + x + "' is not a 2-cell of the left operand");
    if (!l.has_triangle(y))
        throw Error(Errc::CellNotFound, "'" + y + "' is not a 2-cell of the right operand");
    const auto& tx = k.triangle(x);
    const auto& ty = l.triangle(y);

    std::map<std::string, std::string> kname, lname; // 0- and 1-cells to result names
    auto identify = [&](const std::string& a, const std::string& b) {
        std::string n = a == b ? a : "[" + a + "]";
        kname[a] = n;
        lname[b] = n;
    };
    auto ex = tx.faces(), ey = ty.faces();
    auto vx = detail::cell_vertices(k, tx), vy = detail::cell_vertices(l, ty);
    for (int i = 0; i < 3; ++i) {
        identify(ex[i], ey[i]);
        identify(vx[i], vy[i]);
    }
    for (const auto& v : k.vertices())
        kname.emplace(v, v);
    for (const auto& e : k.edges())
        kname.emplace(e.id, e.id);
    for (const auto& v : l.vertices())
        lname.emplace(v, v);
    for (const auto& e : l.edges())
        lname.emplace(e.id, e.id);

    ComplexSpec s;
    std::set<std::string> lower, cells;
    auto add_lower = [&](const std::string& n) {
        if (!lower.insert(n).second)
            throw Error(Errc::NameClash, "0/1-cell name '" + n + "' occurs in both operands");
    };
    auto on_y = [&](const std::string& n) {
        return std::find(vy.begin(), vy.end(), n) != vy.end() || std::find(ey.begin(), ey.end(), n) != ey.end();
    };
    for (const auto& v : k.vertices()) {
        add_lower(kname[v]);
        s.v.push_back(kname[v]);
    }
    for (const auto& v : l.vertices())
        if (!on_y(v)) {
            add_lower(lname[v]);
            s.v.push_back(lname[v]);
        }
    for (const auto& e : k.edges()) {
        add_lower(kname[e.id]);
        s.e.push_back({kname[e.id], kname[e.d0], kname[e.d1]});
    }
    for (const auto& e : l.edges())
        if (!on_y(e.id)) {
            add_lower(lname[e.id]);
            s.e.push_back({lname[e.id], lname[e.d0], lname[e.d1]});
        }
    for (const auto& t : k.triangles())
        if (t.id != x) {
            cells.insert(t.id);
            s.t.push_back({t.id, kname[t.d0], kname[t.d1], kname[t.d2]});
        }
    for (const auto& t : l.triangles())
        if (t.id != y) {
            if (!cells.insert(t.id).second)
                throw Error(Errc::NameClash, "2-cell name '" + t.id + "' occurs in both operands");
            s.t.push_back({t.id, lname[t.d0], lname[t.d1], lname[t.d2]});
        }
    return certify(DeltaComplex::make(std::move(s)));
}

struct SumCut {
    Sequent left, right, sum;
    Formula cut;
    DerivPtr derivation;
    MComplexCert complex;
};

// The sum read as a cut of the two axiomatic sequents on nu x = nu y.
inline SumCut sum_to_cut(const MComplexCert& k, const std::string& x, const MComplexCert& l, const std::string& y)
{
    if (!k.complex.has_triangle(x) || !l.complex.has_triangle(y))
        throw Error(Errc::CellNotFound, "sum cell missing");
    auto ax = nu(k, x), ay = nu(l, y);
    if (ax != ay)
        throw Error(Errc::NuMismatch, atom_text(ax) + " vs " + atom_text(ay));
    SumCut out{axiomatic_sequent(k), axiomatic_sequent(l), {}, Formula::atomic(ax), nullptr, connected_sum(k, x, l, y)};
    out.sum = axiomatic_sequent(out.complex);
    out.derivation = make_cut(make_axiom(out.left, "complex:left"), make_axiom(out.right, "complex:right"), out.cut);
    if (!(out.derivation->conclusion == out.sum))
        throw Error(Errc::InternalInconsistency, "cut conclusion differs from the sum's sequent");
    return out;
}

// ---------------------------------------------------------------- cut-triangles

struct CutTriangle {
    std::array<std::string, 3> edges;           // e0, e1, e2: d0 = e0, d1 = e1, d2 = e2 of the fresh cell
    std::vector<std::string> left, right;        // left holds the least 2-cell name

    std::array<std::string, 3> sorted_edges() const
    {
        auto s = edges;
        std::sort(s.begin(), s.end());
        return s;
    }
    std::string fresh_cell() const
    {
        auto s = sorted_edges();
        return "t#" + s[0] + "," + s[1] + "," + s[2];
    }
};

namespace detail {

// Orders three edges as the faces of a 2-simplex, if they bound one.
inline std::optional<std::array<std::string, 3>> simplex_order(const DeltaComplex& k, std::array<std::string, 3> es)
{
    std::sort(es.begin(), es.end());
    do {
        const auto &e0 = k.edge(es[0]), &e1 = k.edge(es[1]), &e2 = k.edge(es[2]);
        if (e0.d1 == e2.d0 && e0.d0 == e1.d0 && e1.d1 == e2.d1 && e2.d1 != e2.d0 && e0.d0 != e0.d1 &&
            e1.d0 != e1.d1)
            return es;
    } while (std::next_permutation(es.begin(), es.end()));
    return std::nullopt;
}

// The tau classes of T, or nullopt when tau is not an equivalence with two classes.
inline std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>>
tau_classes(const DeltaComplex& k, const std::set<std::string>& tri)
{
    const auto& ts = k.triangles();
    UnionFind uf(ts.size());
    std::map<std::string, std::size_t> first;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool reflexive = false;
        for (const auto& e : ts[i].faces()) {
            if (tri.count(e))
                continue;
            reflexive = true;
            auto [it, fresh] = first.emplace(e, i);
            if (!fresh)
                uf.unite(it->second, i);
        }
        if (!reflexive)
            return std::nullopt;
    }
    std::map<std::size_t, std::vector<std::string>> cls;
    for (std::size_t i = 0; i < ts.size(); ++i)
        cls[uf.find(i)].push_back(ts[i].id);
    if (cls.size() != 2)
        return std::nullopt;
    auto a = cls.begin()->second, b = std::next(cls.begin())->second;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b.front() < a.front())
        std::swap(a, b);
    return std::pair{a, b};
}

} // namespace detail

inline std::optional<CutTriangle> as_cut_triangle(const DeltaComplex& k, const std::array<std::string, 3>& es)
{
    for (const auto& e : es)
        if (!k.has_edge(e))
            return std::nullopt;
    auto ord = detail::simplex_order(k, es);
    if (!ord)
        return std::nullopt;
    auto cls = detail::tau_classes(k, {es.begin(), es.end()});
    if (!cls)
        return std::nullopt;
    return CutTriangle{*ord, cls->first, cls->second};
}

// Sorted by edge triple.
inline std::vector<CutTriangle> find_cut_triangles(const MComplexCert& c)
{
    const auto& k = c.complex;
    std::vector<std::string> ids;
    for (const auto& e : k.edges())
        ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    std::vector<CutTriangle> out;
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            for (std::size_t d = b + 1; d < ids.size(); ++d)
                if (auto t = as_cut_triangle(k, {ids[a], ids[b], ids[d]}))
                    out.push_back(*t);
    return out;
}

struct Split {
    MComplexCert left, right;
    std::string cell;
    CutTriangle triangle;
};

inline Split split(const MComplexCert& c, const CutTriangle& requested)
{
    const auto& k = c.complex;
    auto tri = as_cut_triangle(k, requested.edges);
    if (!tri)
        throw Error(Errc::NotACutTriangle, requested.edges[0] + "," + requested.edges[1] + "," + requested.edges[2]);
    auto t = tri->fresh_cell();
    if (k.has_triangle(t))
        throw Error(Errc::NameClash, "fresh cell '" + t + "' already exists");
    auto half = [&](const std::vector<std::string>& cls) {
        ComplexSpec s;
        std::set<std::string> es, vs;
        std::vector<TriSpec> cells;
        for (const auto& x : cls)
            cells.push_back(k.triangle(x));
        cells.push_back({t, tri->edges[0], tri->edges[1], tri->edges[2]});
        for (const auto& x : cells)
            for (const auto& e : x.faces())
                es.insert(e);
        for (const auto& e : k.edges())
            if (es.count(e.id)) {
                s.e.push_back(e);
                vs.insert(e.d0);
                vs.insert(e.d1);
            }
        for (const auto& v : k.vertices())
            if (vs.count(v))
                s.v.push_back(v);
        s.t = cells;
        auto cert = certify(DeltaComplex::make(std::move(s)));
        Chain part;
        for (const auto& x : cls)
            chain_add(part, x, c.orientation.at(x));
        auto b = boundary2(part, k);
        Chain plus{{tri->edges[0], 1}, {tri->edges[1], -1}, {tri->edges[2], 1}}, minus;
        for (const auto& [e, m] : plus)
            minus[e] = -m;
        if (b != plus && b != minus)
            throw Error(Errc::InternalInconsistency, "class boundary is not the cut-triangle");
        return cert;
    };
    return Split{half(tri->left), half(tri->right), t, *tri};
}

enum class Irreducibility { Irreducible, Reducible, NotProper };

inline std::string_view irreducibility_name(Irreducibility r)
{
    switch (r) {
    case Irreducibility::Irreducible: return "Irreducible";
    case Irreducibility::Reducible: return "Reducible";
    case Irreducibility::NotProper: return "NotProper";
    }
    return "?";
}

inline Irreducibility is_irreducible(const MComplexCert& c)
{
    if (is_unit(c))
        return Irreducibility::NotProper;
    return find_cut_triangles(c).empty() ? Irreducibility::Irreducible : Irreducibility::Reducible;
}

// ---------------------------------------------------------------- decomposition trees

struct TreeEdge {
    std::size_t a = 0, b = 0;
    std::string cell_a, cell_b;
};

struct DecompositionTree {
    std::vector<MComplexCert> nodes;
    std::vector<TreeEdge> edges;
};

namespace detail {

inline std::size_t node_with_cell(const DecompositionTree& t, const std::string& cell)
{
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        if (t.nodes[i].complex.has_triangle(cell))
            return i;
    throw Error(Errc::InternalInconsistency, "no node holds '" + cell + "'");
}

inline DecompositionTree join(const DecompositionTree& l, const DecompositionTree& r, const std::string& cell)
{
    DecompositionTree out = l;
    std::size_t off = l.nodes.size();
    out.nodes.insert(out.nodes.end(), r.nodes.begin(), r.nodes.end());
    for (auto e : r.edges) {
        e.a += off;
        e.b += off;
        out.edges.push_back(e);
    }
    out.edges.push_back({node_with_cell(l, cell), off + node_with_cell(r, cell), cell, cell});
    return out;
}

inline DecompositionTree leaf(const MComplexCert& c) { return DecompositionTree{{c}, {}}; }

} // namespace detail

inline DecompositionTree decompose(const MComplexCert& c)
{
    if (is_unit(c))
        throw Error(Errc::NotProper, "a unit has no decomposition");
    auto ts = find_cut_triangles(c);
    if (ts.empty())
        return detail::leaf(c);
    auto s = split(c, ts.front());
    return detail::join(decompose(s.left), decompose(s.right), s.cell);
}

// Unrooted canonical encoding: minimum over roots of the sorted nested encoding.
inline std::string tree_canonical_form(const DecompositionTree& t)
{
    std::vector<std::string> label;
    for (const auto& n : t.nodes)
        label.push_back(sub2_canonical_form(n.complex));
    std::vector<std::vector<std::pair<std::size_t, std::string>>> adj(t.nodes.size());
    for (const auto& e : t.edges) {
        adj[e.a].push_back({e.b, e.cell_a + "/" + e.cell_b});
        adj[e.b].push_back({e.a, e.cell_b + "/" + e.cell_a});
    }
    std::function<std::string(std::size_t, std::size_t)> enc = [&](std::size_t v, std::size_t parent) {
        std::vector<std::string> kids;
        for (const auto& [w, lab] : adj[v])
            if (w != parent)
                kids.push_back(lab + enc(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(" + label[v];
        for (const auto& k : kids)
            s += k;
        return s + ")";
    };
    std::string best;
    for (std::size_t r = 0; r < t.nodes.size(); ++r) {
        auto s = enc(r, t.nodes.size());
        if (r == 0 || s < best)
            best = s;
    }
    return best;
}

// Every decomposition reachable by choosing any cut-triangle at each step, up to tree isomorphism.
inline std::vector<DecompositionTree> all_decompositions(const MComplexCert& c, std::size_t bound = 64)
{
    if (is_unit(c))
        throw Error(Errc::NotProper, "a unit has no decomposition");
    auto ts = find_cut_triangles(c);
    if (ts.size() > bound)
        throw Error(Errc::BoundExceeded, std::to_string(ts.size()) + " cut-triangles exceed the bound");
    if (ts.empty())
        return {detail::leaf(c)};
    std::map<std::string, DecompositionTree> found;
    for (const auto& t : ts) {
        auto s = split(c, t);
        auto ls = all_decompositions(s.left, bound), rs = all_decompositions(s.right, bound);
        for (const auto& l : ls)
            for (const auto& r : rs) {
                auto j = detail::join(l, r, s.cell);
                found.emplace(tree_canonical_form(j), std::move(j));
            }
    }
    std::vector<DecompositionTree> out;
    for (auto& [k, v] : found)
        out.push_back(std::move(v));
    return out;
}

// Glues the nodes back together along the tree edges.
inline MComplexCert recompose(const DecompositionTree& t)
{
    std::vector<std::optional<MComplexCert>> nodes(t.nodes.begin(), t.nodes.end());
    std::vector<std::size_t> owner(t.nodes.size());
    std::iota(owner.begin(), owner.end(), 0);
    auto find = [&](std::size_t i) {
        while (owner[i] != i)
            i = owner[i];
        return i;
    };
    for (const auto& e : t.edges) {
        auto a = find(e.a), b = find(e.b);
        if (a == b)
            throw Error(Errc::InternalInconsistency, "decomposition tree has a cycle");
        nodes[a] = connected_sum(*nodes[a], e.cell_a, *nodes[b], e.cell_b);
        nodes[b].reset();
        owner[b] = a;
    }
    return *nodes[find(0)];
}

inline bool same_triangle(const CutTriangle& a, const CutTriangle& b) { return a.sorted_edges() == b.sorted_edges(); }

// T1 lies within one half of T2.
inline bool triangles_disjoint(const MComplexCert& c, const CutTriangle& t1, const CutTriangle& t2)
{
    const auto& k = c.complex;
    auto a = as_cut_triangle(k, t1.edges), b = as_cut_triangle(k, t2.edges);
    if (!a || !b)
        throw Error(Errc::NotACutTriangle, "argument is not a cut-triangle of the complex");
    if (same_triangle(*a, *b))
        throw Error(Errc::SameTriangle, "the two cut-triangles coincide");
    auto edges_of = [&](const std::vector<std::string>& cls) {
        std::set<std::string> es;
        for (const auto& x : cls)
            for (const auto& e : k.triangle(x).faces())
                es.insert(e);
        for (const auto& e : b->edges)
            es.insert(e);
        return es;
    };
    auto within = [&](const std::set<std::string>& es) {
        return std::all_of(a->edges.begin(), a->edges.end(), [&](const auto& e) { return es.count(e) != 0; });
    };
    bool by_edges = within(edges_of(b->left)) || within(edges_of(b->right));

    auto subset = [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    bool by_classes = false;
    for (const auto* x : {&b->left, &b->right})
        for (const auto* y : {&a->left, &a->right})
            by_classes = by_classes || subset(*x, *y);
    if (by_edges != by_classes)
        throw Error(Errc::InternalInconsistency, "edge and class criteria disagree");
    return by_edges;
}

} // namespace menelaus
