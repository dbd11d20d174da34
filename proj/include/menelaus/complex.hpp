#pragma once

#include "menelaus/error.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace menelaus {

struct EdgeSpec {
    std::string id, d0, d1;
    bool operator==(const EdgeSpec&) const = default;
};

struct TriSpec {
    std::string id, d0, d1, d2;
    bool operator==(const TriSpec&) const = default;
    std::array<std::string, 3> faces() const { return {d0, d1, d2}; }
};

// Raw description of a 2-dimensional Delta-complex.
struct ComplexSpec {
    std::vector<std::string> v;
    std::vector<EdgeSpec> e;
    std::vector<TriSpec> t;
};

class DeltaComplex {
public:
    DeltaComplex() = default;

    static DeltaComplex make(ComplexSpec spec)
    {
        DeltaComplex k;
        k.s_ = std::move(spec);
        k.index();
        k.check_identities();
        return k;
    }

    const ComplexSpec& spec() const { return s_; }
    const std::vector<std::string>& vertices() const { return s_.v; }
    const std::vector<EdgeSpec>& edges() const { return s_.e; }
    const std::vector<TriSpec>& triangles() const { return s_.t; }

    std::size_t num_vertices() const { return s_.v.size(); }
    std::size_t num_edges() const { return s_.e.size(); }
    std::size_t num_triangles() const { return s_.t.size(); }

    bool has_vertex(const std::string& n) const { return vi_.count(n) != 0; }
    bool has_edge(const std::string& n) const { return ei_.count(n) != 0; }
    bool has_triangle(const std::string& n) const { return ti_.count(n) != 0; }

    std::size_t vertex_index(const std::string& n) const { return lookup(vi_, n, 0); }
    std::size_t edge_index(const std::string& n) const { return lookup(ei_, n, 1); }
    std::size_t triangle_index(const std::string& n) const { return lookup(ti_, n, 2); }

    const EdgeSpec& edge(const std::string& n) const { return s_.e[edge_index(n)]; }
    const TriSpec& triangle(const std::string& n) const { return s_.t[triangle_index(n)]; }

    // 0th, 1st and 2nd vertex of a 2-cell: d1d2x, d0d2x, d0d0x.
    std::array<std::string, 3> tri_vertices(const TriSpec& x) const
    {
        return {edge(x.d2).d1, edge(x.d2).d0, edge(x.d0).d0};
    }
    std::array<std::string, 3> tri_vertices(const std::string& x) const { return tri_vertices(triangle(x)); }

    bool operator==(const DeltaComplex& o) const
    {
        return s_.v == o.s_.v && s_.e == o.s_.e && s_.t == o.s_.t;
    }

private:
    static std::size_t lookup(const std::unordered_map<std::string, std::size_t>& m, const std::string& n, int dim)
    {
        auto it = m.find(n);
        if (it == m.end())
            throw Error(Errc::UnknownCell, "no " + std::to_string(dim) + "-cell named '" + n + "'");
        return it->second;
    }

    void index()
    {
        for (std::size_t i = 0; i < s_.v.size(); ++i)
            if (!vi_.emplace(s_.v[i], i).second)
                throw Error(Errc::DuplicateCell, "0-cell '" + s_.v[i] + "' listed twice");
        for (std::size_t i = 0; i < s_.e.size(); ++i)
            if (!ei_.emplace(s_.e[i].id, i).second)
                throw Error(Errc::DuplicateCell, "1-cell '" + s_.e[i].id + "' listed twice");
        for (std::size_t i = 0; i < s_.t.size(); ++i)
            if (!ti_.emplace(s_.t[i].id, i).second)
                throw Error(Errc::DuplicateCell, "2-cell '" + s_.t[i].id + "' listed twice");
        for (const auto& e : s_.e)
            for (const auto* f : {&e.d0, &e.d1})
                if (!vi_.count(*f))
                    throw Error(Errc::DanglingFace, "1-cell '" + e.id + "' has unknown face '" + *f + "'");
        for (const auto& t : s_.t)
            for (const auto& f : t.faces())
                if (!ei_.count(f))
                    throw Error(Errc::DanglingFace, "2-cell '" + t.id + "' has unknown face '" + f + "'");
    }

    // d_j d_l x = d_{l-1} d_j x for l-1 >= j.
    void check_identities() const
    {
        for (const auto& x : s_.t) {
            auto f = x.faces();
            auto d = [&](int i, int l) -> const std::string& {
                const auto& e = s_.e[ei_.at(f[l])];
                return i == 0 ? e.d0 : e.d1;
            };
            static constexpr std::array<std::array<int, 2>, 3> jl{{{0, 1}, {0, 2}, {1, 2}}};
            for (auto [j, l] : jl) {
                if (d(j, l) != d(l - 1, j))
                    throw Error(Errc::SimplicialIdentityViolated,
                                "2-cell '" + x.id + "' (j=" + std::to_string(j) + ", l=" + std::to_string(l) + ")");
            }
        }
    }

    ComplexSpec s_;
    std::unordered_map<std::string, std::size_t> vi_, ei_, ti_;
};

// ---------------------------------------------------------------- chains

using Chain = std::map<std::string, long long>;

inline void chain_add(Chain& c, const std::string& cell, long long k)
{
    if (k == 0)
        return;
    auto& v = c[cell];
    v += k;
    if (v == 0)
        c.erase(cell);
}

inline Chain boundary2(const Chain& c, const DeltaComplex& k)
{
    Chain out;
    for (const auto& [x, a] : c) {
        const auto& t = k.triangle(x);
        chain_add(out, t.d0, a);
        chain_add(out, t.d1, -a);
        chain_add(out, t.d2, a);
    }
    return out;
}

inline Chain boundary1(const Chain& c, const DeltaComplex& k)
{
    Chain out;
    for (const auto& [y, a] : c) {
        const auto& e = k.edge(y);
        chain_add(out, e.d0, a);
        chain_add(out, e.d1, -a);
    }
    return out;
}

inline bool is_cycle(const Chain& c, const DeltaComplex& k) { return boundary2(c, k).empty(); }

// ---------------------------------------------------------------- components

struct Component {
    std::vector<std::string> vertices, edges, triangles;
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (p[x] != x)
            x = p[x] = p[p[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        p[b] = a;
        return true;
    }
};

} // namespace detail

inline std::vector<Component> connected_components(const DeltaComplex& k)
{
    detail::UnionFind uf(k.num_vertices());
    for (const auto& e : k.edges())
        uf.unite(k.vertex_index(e.d0), k.vertex_index(e.d1));
    std::map<std::size_t, std::size_t> slot;
    std::vector<Component> out;
    auto comp_of = [&](std::size_t v) -> Component& {
        auto r = uf.find(v);
        auto it = slot.find(r);
        if (it == slot.end()) {
            it = slot.emplace(r, out.size()).first;
            out.emplace_back();
        }
        return out[it->second];
    };
    for (std::size_t i = 0; i < k.num_vertices(); ++i)
        comp_of(i).vertices.push_back(k.vertices()[i]);
    for (const auto& e : k.edges())
        comp_of(k.vertex_index(e.d0)).edges.push_back(e.id);
    for (const auto& t : k.triangles())
        comp_of(k.vertex_index(k.edge(t.d0).d0)).triangles.push_back(t.id);
    return out;
}

inline DeltaComplex subcomplex(const DeltaComplex& k, const Component& c)
{
    ComplexSpec s;
    s.v = c.vertices;
    for (const auto& e : c.edges)
        s.e.push_back(k.edge(e));
    for (const auto& t : c.triangles)
        s.t.push_back(k.triangle(t));
    return DeltaComplex::make(std::move(s));
}

// ---------------------------------------------------------------- validation

enum class Axiom { NotConnected, NotHomogeneous, NotRegular, EdgeDegreeNotTwo, LinkNotLinked, NotOrientable };

inline std::string_view axiom_name(Axiom a)
{
    switch (a) {
    case Axiom::NotConnected: return "NotConnected";
    case Axiom::NotHomogeneous: return "NotHomogeneous";
    case Axiom::NotRegular: return "NotRegular";
    case Axiom::EdgeDegreeNotTwo: return "EdgeDegreeNotTwo";
    case Axiom::LinkNotLinked: return "LinkNotLinked";
    case Axiom::NotOrientable: return "NotOrientable";
    }
    return "?";
}

struct Violation {
    Axiom axiom;
    std::vector<std::string> witness;
    int degree = -1; // for EdgeDegreeNotTwo
    std::string message;
};

struct MComplexCert {
    DeltaComplex complex;
    Chain orientation;
    int component_count = 1;
};

namespace detail {

// (cell index, slot) occurrences of every edge.
inline std::vector<std::vector<std::pair<std::size_t, int>>> edge_occurrences(const DeltaComplex& k)
{
    std::vector<std::vector<std::pair<std::size_t, int>>> occ(k.num_edges());
    for (std::size_t x = 0; x < k.num_triangles(); ++x) {
        auto f = k.triangles()[x].faces();
        for (int i = 0; i < 3; ++i)
            occ[k.edge_index(f[i])].push_back({x, i});
    }
    return occ;
}

// The two edges of x through its i-th vertex are the faces other than d_i.
inline std::array<int, 2> slots_through_vertex(int vertex_pos)
{
    switch (vertex_pos) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
    }
}

inline int vertex_position(const DeltaComplex& k, const TriSpec& x, const std::string& w)
{
    auto vs = k.tri_vertices(x);
    for (int i = 0; i < 3; ++i)
        if (vs[i] == w)
            return i;
    return -1;
}

} // namespace detail

inline std::optional<Violation> check_connected(const DeltaComplex& k)
{
    auto cs = connected_components(k);
    if (cs.size() == 1)
        return std::nullopt;
    Violation v{Axiom::NotConnected, {}, -1, std::to_string(cs.size()) + " components"};
    for (const auto& c : cs)
        v.witness.push_back(c.vertices.front());
    return v;
}

// Cells of L_w in cyclic order, consecutive ones being w-neighbours.
// Returns nullopt when the w-neighbour graph is not a single circle.
inline std::optional<std::vector<std::string>> extract_link_cycle(const DeltaComplex& k, const std::string& w)
{
    std::vector<std::size_t> cells;
    std::map<std::size_t, std::array<std::string, 2>> through;
    for (std::size_t x = 0; x < k.num_triangles(); ++x) {
        const auto& t = k.triangles()[x];
        int p = detail::vertex_position(k, t, w);
        if (p < 0)
            continue;
        auto f = t.faces();
        auto s = detail::slots_through_vertex(p);
        cells.push_back(x);
        through[x] = {f[s[0]], f[s[1]]};
    }
    if (cells.empty())
        return std::nullopt;
    std::map<std::string, std::vector<std::size_t>> by_edge;
    for (auto x : cells)
        for (const auto& e : through[x])
            by_edge[e].push_back(x);
    for (const auto& [e, xs] : by_edge)
        if (xs.size() != 2)
            return std::nullopt;
    std::vector<std::string> out;
    std::size_t cur = cells.front();
    std::string via = through[cur][0];
    std::set<std::size_t> seen;
    while (true) {
        if (!seen.insert(cur).second)
            return std::nullopt;
        out.push_back(k.triangles()[cur].id);
        const auto& xs = by_edge[via];
        std::size_t nxt = xs[0] == cur ? xs[1] : xs[0];
        if (xs[0] == xs[1])
            return std::nullopt;
        const auto& te = through[nxt];
        std::string nvia = te[0] == via ? te[1] : te[0];
        if (nxt == cells.front())
            break;
        cur = nxt;
        via = nvia;
    }
    if (out.size() != cells.size())
        return std::nullopt;
    return out;
}

inline std::variant<MComplexCert, Violation> validate_mcomplex(const DeltaComplex& k)
{
    if (auto v = check_connected(k))
        return *v;

    // (1) homogeneous
    {
        std::set<std::string> used_v, used_e;
        for (const auto& e : k.edges()) {
            used_v.insert(e.d0);
            used_v.insert(e.d1);
        }
        for (const auto& t : k.triangles())
            for (const auto& f : t.faces())
                used_e.insert(f);
        for (const auto& e : k.edges())
            if (!used_e.count(e.id))
                return Violation{Axiom::NotHomogeneous, {e.id}, -1, "1-cell '" + e.id + "' is not a face of any 2-cell"};
        for (const auto& v : k.vertices())
            if (!used_v.count(v))
                return Violation{Axiom::NotHomogeneous, {v}, -1, "0-cell '" + v + "' is not a face of any 1-cell"};
        if (k.num_triangles() == 0)
            return Violation{Axiom::NotHomogeneous, {}, -1, "no 2-cells"};
    }

    // (2) regular
    for (const auto& t : k.triangles())
        if (t.d0 == t.d1 || t.d0 == t.d2 || t.d1 == t.d2)
            return Violation{Axiom::NotRegular, {t.id}, -1, "2-cell '" + t.id + "' has repeated edges"};
    for (const auto& e : k.edges())
        if (e.d0 == e.d1)
            return Violation{Axiom::NotRegular, {e.id}, -1, "1-cell '" + e.id + "' is a loop"};

    // (3) every edge in exactly two 2-cells
    auto occ = detail::edge_occurrences(k);
    for (std::size_t i = 0; i < occ.size(); ++i)
        if (occ[i].size() != 2)
            return Violation{Axiom::EdgeDegreeNotTwo, {k.edges()[i].id}, static_cast<int>(occ[i].size()),
                             "1-cell '" + k.edges()[i].id + "' lies in " + std::to_string(occ[i].size()) + " 2-cells"};

    // (4) links are linked; the circle is extracted as well
    for (const auto& w : k.vertices()) {
        std::vector<std::size_t> lw;
        for (std::size_t x = 0; x < k.num_triangles(); ++x)
            if (detail::vertex_position(k, k.triangles()[x], w) >= 0)
                lw.push_back(x);
        detail::UnionFind uf(k.num_triangles());
        for (std::size_t i = 0; i < occ.size(); ++i) {
            const auto& e = k.edges()[i];
            if (e.d0 == w || e.d1 == w)
                uf.unite(occ[i][0].first, occ[i][1].first);
        }
        for (auto x : lw)
            if (uf.find(x) != uf.find(lw.front()))
                return Violation{Axiom::LinkNotLinked, {w, k.triangles()[x].id}, -1, "link of '" + w + "' is not linked"};
        if (!extract_link_cycle(k, w))
            throw Error(Errc::InternalInconsistency, "link of '" + w + "' is linked but not a circle");
    }

    // (5) orientability by sign propagation over the dual graph
    std::size_t n = k.num_triangles();
    std::size_t root = 0;
    for (std::size_t x = 1; x < n; ++x)
        if (k.triangles()[x].id < k.triangles()[root].id)
            root = x;
    std::vector<int> eps(n, 0);
    std::vector<std::size_t> parent(n, n);
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(n); // neighbour, relative sign
    for (const auto& o : occ) {
        auto [x, i] = o[0];
        auto [y, j] = o[1];
        int rel = ((i + j) % 2 == 0) ? -1 : 1;
        adj[x].push_back({y, rel});
        adj[y].push_back({x, rel});
    }
    std::queue<std::size_t> q;
    eps[root] = 1;
    q.push(root);
    while (!q.empty()) {
        auto x = q.front();
        q.pop();
        for (auto [y, rel] : adj[x]) {
            int want = eps[x] * rel;
            if (eps[y] == 0) {
                eps[y] = want;
                parent[y] = x;
                q.push(y);
            } else if (eps[y] != want) {
                // odd cycle: tree paths from x and y joined by the offending adjacency
                auto path = [&](std::size_t a) {
                    std::vector<std::size_t> p{a};
                    while (parent[a] != n) {
                        a = parent[a];
                        p.push_back(a);
                    }
                    return p;
                };
                auto px = path(x), py = path(y);
                while (px.size() > 1 && py.size() > 1 && px[px.size() - 2] == py[py.size() - 2]) {
                    px.pop_back();
                    py.pop_back();
                }
                Violation v{Axiom::NotOrientable, {}, -1, "sign propagation conflict"};
                for (auto c : px)
                    v.witness.push_back(k.triangles()[c].id);
                for (auto it = py.rbegin() + 1; it != py.rend(); ++it)
                    v.witness.push_back(k.triangles()[*it].id);
                return v;
            }
        }
    }
    MComplexCert cert{k, {}, 1};
    for (std::size_t x = 0; x < n; ++x)
        cert.orientation[k.triangles()[x].id] = eps[x];
    if (!is_cycle(cert.orientation, k))
        throw Error(Errc::InternalInconsistency, "orientation is not a cycle");
    return cert;
}

inline MComplexCert certify(const DeltaComplex& k)
{
    auto r = validate_mcomplex(k);
    if (auto* v = std::get_if<Violation>(&r))
        throw Error(Errc::NotMComplex, std::string(axiom_name(v->axiom)) + ": " + v->message);
    return std::get<MComplexCert>(std::move(r));
}

inline long long euler_characteristic(const DeltaComplex& k)
{
    return static_cast<long long>(k.num_triangles()) - static_cast<long long>(k.num_edges()) +
           static_cast<long long>(k.num_vertices());
}

inline long long genus(const MComplexCert& c)
{
    long long chi = euler_characteristic(c.complex);
    if (chi % 2 != 0)
        throw Error(Errc::OddCharacteristic, "chi = " + std::to_string(chi));
    return (2 - chi) / 2;
}

inline std::vector<std::string> link_cycle(const MComplexCert& c, const std::string& w)
{
    if (!c.complex.has_vertex(w))
        throw Error(Errc::UnknownCell, "no 0-cell named '" + w + "'");
    auto r = extract_link_cycle(c.complex, w);
    if (!r)
        throw Error(Errc::InternalInconsistency, "link of '" + w + "' is not a circle");
    return *r;
}

// ---------------------------------------------------------------- the L-construction

struct CycleLift {
    DeltaComplex complex;
    std::map<std::string, std::string> f0, f1, f2;
    Chain lifted;
};

// pairing: pairs of occurrence indices j (0-based, 3i+k for the k-th face of the i-th term).
inline CycleLift cycle_to_mcomplex(const DeltaComplex& k, const Chain& c,
                                   std::optional<std::vector<std::pair<int, int>>> pairing = std::nullopt)
{
    if (!is_cycle(c, k))
        throw Error(Errc::NotACycle, "boundary is nonzero");
    // expand the cycle into terms eps_i x_i, in complex order
    std::vector<std::pair<std::string, int>> terms;
    for (const auto& t : k.triangles()) {
        auto it = c.find(t.id);
        if (it == c.end())
            continue;
        int s = it->second > 0 ? 1 : -1;
        for (long long r = 0; r < std::llabs(it->second); ++r)
            terms.push_back({t.id, s});
    }
    for (const auto& [x, s] : terms) {
        const auto& t = k.triangle(x);
        if (t.d0 == t.d1 || t.d0 == t.d2 || t.d1 == t.d2)
            throw Error(Errc::IrregularCell, "2-cell '" + x + "' has repeated edges");
        for (const auto& f : t.faces())
            if (k.edge(f).d0 == k.edge(f).d1)
                throw Error(Errc::IrregularCell, "1-cell '" + f + "' is a loop");
    }
    std::size_t n = terms.size();
    std::vector<std::string> y(3 * n);
    std::vector<int> tau(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto f = k.triangle(terms[i].first).faces();
        for (int j = 0; j < 3; ++j) {
            y[3 * i + j] = f[j];
            tau[3 * i + j] = terms[i].second * (j == 1 ? -1 : 1);
        }
    }
    std::vector<int> mate(3 * n, -1);
    if (pairing) {
        for (auto [a, b] : *pairing) {
            if (a < 0 || b < 0 || a >= static_cast<int>(3 * n) || b >= static_cast<int>(3 * n) || a == b ||
                mate[a] != -1 || mate[b] != -1 || y[a] != y[b] || tau[a] != -tau[b])
                throw Error(Errc::InvalidPairing, "bad pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
            mate[a] = b;
            mate[b] = a;
        }
        for (auto m : mate)
            if (m == -1)
                throw Error(Errc::InvalidPairing, "pairing does not cover every occurrence");
    } else {
        std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> by;
        for (std::size_t j = 0; j < 3 * n; ++j)
            (tau[j] > 0 ? by[y[j]].first : by[y[j]].second).push_back(static_cast<int>(j));
        for (auto& [e, pm] : by) {
            if (pm.first.size() != pm.second.size())
                throw Error(Errc::NotACycle, "unbalanced occurrences of '" + e + "'");
            for (std::size_t r = 0; r < pm.first.size(); ++r) {
                mate[pm.first[r]] = pm.second[r];
                mate[pm.second[r]] = pm.first[r];
            }
        }
    }
    // classes s_j, in order of their smallest occurrence
    std::vector<int> cls(3 * n, -1);
    std::vector<std::string> cls_edge;
    for (std::size_t j = 0; j < 3 * n; ++j)
        if (cls[j] == -1) {
            cls[j] = cls[mate[j]] = static_cast<int>(cls_edge.size());
            cls_edge.push_back(y[j]);
        }
    std::size_t m = cls_edge.size();
    // 0-cells: (s,l) pairs modulo the relation generated per 2-cell
    detail::UnionFind uf(2 * m);
    auto node = [&](int s, int l) { return static_cast<std::size_t>(2 * s + l); };
    for (std::size_t i = 0; i < n; ++i) {
        int s0 = cls[3 * i], s1 = cls[3 * i + 1], s2 = cls[3 * i + 2];
        uf.unite(node(s1, 0), node(s0, 0));
        uf.unite(node(s2, 0), node(s0, 1));
        uf.unite(node(s2, 1), node(s1, 1));
    }
    auto count_names = [](const std::vector<std::string>& names) {
        std::map<std::string, int> c;
        for (const auto& s : names)
            ++c[s];
        return c;
    };
    auto namer = [](std::map<std::string, int> totals) {
        return [totals, seen = std::map<std::string, int>{}](const std::string& base) mutable {
            int r = seen[base]++;
            return totals[base] > 1 ? base + "#" + std::to_string(r + 1) : base;
        };
    };
    CycleLift out;
    ComplexSpec s;
    // vertex names from the image vertex of each class
    std::map<std::size_t, std::string> vimg;
    std::vector<std::size_t> vroots;
    for (std::size_t j = 0; j < m; ++j)
        for (int l = 0; l < 2; ++l) {
            auto r = uf.find(node(static_cast<int>(j), l));
            if (!vimg.count(r)) {
                const auto& e = k.edge(cls_edge[j]);
                vimg[r] = l == 0 ? e.d0 : e.d1;
                vroots.push_back(r);
            }
        }
    std::vector<std::string> vbase;
    for (auto r : vroots)
        vbase.push_back(vimg[r]);
    auto vname = namer(count_names(vbase));
    std::map<std::size_t, std::string> vlabel;
    for (auto r : vroots) {
        vlabel[r] = vname(vimg[r]);
        s.v.push_back(vlabel[r]);
        out.f0[vlabel[r]] = vimg[r];
    }
    auto ename = namer(count_names(cls_edge));
    std::vector<std::string> elabel(m);
    for (std::size_t j = 0; j < m; ++j) {
        elabel[j] = ename(cls_edge[j]);
        s.e.push_back({elabel[j], vlabel[uf.find(node(static_cast<int>(j), 0))],
                       vlabel[uf.find(node(static_cast<int>(j), 1))]});
        out.f1[elabel[j]] = cls_edge[j];
    }
    std::vector<std::string> tbase;
    for (const auto& t : terms)
        tbase.push_back(t.first);
    auto tname = namer(count_names(tbase));
    for (std::size_t i = 0; i < n; ++i) {
        auto nm = tname(terms[i].first);
        s.t.push_back({nm, elabel[cls[3 * i]], elabel[cls[3 * i + 1]], elabel[cls[3 * i + 2]]});
        out.f2[nm] = terms[i].first;
        chain_add(out.lifted, nm, terms[i].second);
    }
    out.complex = DeltaComplex::make(std::move(s));
    return out;
}

// ---------------------------------------------------------------- <2-isomorphism

struct Sub2Iso {
    std::map<std::string, std::string> map0, map1;
};

inline std::optional<Sub2Iso> is_sub2_isomorphic(const DeltaComplex& k, const DeltaComplex& l)
{
    if (k.num_triangles() != l.num_triangles() || k.num_edges() != l.num_edges() ||
        k.num_vertices() != l.num_vertices())
        return std::nullopt;
    for (const auto& t : k.triangles())
        if (!l.has_triangle(t.id))
            return std::nullopt;
    Sub2Iso w;
    std::map<std::string, std::string> inv0, inv1;
    auto bind = [](std::map<std::string, std::string>& f, std::map<std::string, std::string>& g, const std::string& a,
                   const std::string& b) {
        auto i = f.find(a);
        auto j = g.find(b);
        if (i != f.end() || j != g.end())
            return i != f.end() && j != g.end() && i->second == b && j->second == a;
        f[a] = b;
        g[b] = a;
        return true;
    };
    // forced part: faces of 2-cells
    for (const auto& t : k.triangles()) {
        auto fk = t.faces();
        auto fl = l.triangle(t.id).faces();
        for (int i = 0; i < 3; ++i)
            if (!bind(w.map1, inv1, fk[i], fl[i]))
                return std::nullopt;
    }
    for (const auto& [a, b] : std::map<std::string, std::string>(w.map1)) {
        const auto& ek = k.edge(a);
        const auto& el = l.edge(b);
        if (!bind(w.map0, inv0, ek.d0, el.d0) || !bind(w.map0, inv0, ek.d1, el.d1))
            return std::nullopt;
    }
    // free 1-cells, matched by backtracking; candidates ordered by vertex degree
    std::map<std::string, int> degk, degl;
    for (const auto& e : k.edges()) {
        ++degk[e.d0];
        ++degk[e.d1];
    }
    for (const auto& e : l.edges()) {
        ++degl[e.d0];
        ++degl[e.d1];
    }
    std::vector<const EdgeSpec*> fk, fl;
    for (const auto& e : k.edges())
        if (!w.map1.count(e.id))
            fk.push_back(&e);
    for (const auto& e : l.edges())
        if (!inv1.count(e.id))
            fl.push_back(&e);
    auto key = [](std::map<std::string, int>& deg, const EdgeSpec* e) {
        return std::make_pair(std::min(deg[e->d0], deg[e->d1]), std::max(deg[e->d0], deg[e->d1]));
    };
    std::stable_sort(fk.begin(), fk.end(), [&](auto a, auto b) { return key(degk, a) > key(degk, b); });
    std::stable_sort(fl.begin(), fl.end(), [&](auto a, auto b) { return key(degl, a) > key(degl, b); });
    std::vector<bool> used(fl.size(), false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == fk.size())
            return true;
        for (std::size_t c = 0; c < fl.size(); ++c) {
            if (used[c] || key(degk, fk[i]) != key(degl, fl[c]))
                continue;
            auto s0 = w.map0, s1 = inv0;
            if (bind(w.map0, inv0, fk[i]->d0, fl[c]->d0) && bind(w.map0, inv0, fk[i]->d1, fl[c]->d1)) {
                used[c] = true;
                w.map1[fk[i]->id] = fl[c]->id;
                inv1[fl[c]->id] = fk[i]->id;
                if (rec(i + 1))
                    return true;
                w.map1.erase(fk[i]->id);
                inv1.erase(fl[c]->id);
                used[c] = false;
            }
            w.map0 = std::move(s0);
            inv0 = std::move(s1);
        }
        return false;
    };
    if (!rec(0))
        return std::nullopt;
    // isolated 0-cells pair up in order
    std::vector<std::string> rk, rl;
    for (const auto& v : k.vertices())
        if (!w.map0.count(v))
            rk.push_back(v);
    for (const auto& v : l.vertices())
        if (!inv0.count(v))
            rl.push_back(v);
    if (rk.size() != rl.size())
        return std::nullopt;
    for (std::size_t i = 0; i < rk.size(); ++i)
        w.map0[rk[i]] = rl[i];
    return w;
}

// Canonical text of the <2-isomorphism class: cells keep their names, lower cells are
// named by their first incidence slot.
inline std::string sub2_canonical_form(const DeltaComplex& k)
{
    std::map<std::string, std::string> ename, vname;
    std::vector<const TriSpec*> ts;
    for (const auto& t : k.triangles())
        ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto a, auto b) { return a->id < b->id; });
    for (auto t : ts) {
        auto f = t->faces();
        for (int i = 0; i < 3; ++i)
            ename.emplace(f[i], t->id + ":" + std::to_string(i));
    }
    std::vector<std::pair<std::string, const EdgeSpec*>> es;
    int loose = 0;
    for (const auto& e : k.edges()) {
        auto it = ename.find(e.id);
        es.push_back({it != ename.end() ? it->second : "~" + std::to_string(loose++), &e});
    }
    std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [nm, e] : es) {
        vname.emplace(e->d0, nm + ".0");
        vname.emplace(e->d1, nm + ".1");
    }
    std::string out;
    for (auto t : ts)
        out += t->id + "(" + ename[t->d0] + "," + ename[t->d1] + "," + ename[t->d2] + ")";
    out += "|";
    for (const auto& [nm, e] : es)
        out += nm + "(" + vname[e->d0] + "," + vname[e->d1] + ")";
    std::size_t isolated = 0;
    for (const auto& v : k.vertices())
        if (!vname.count(v))
            ++isolated;
    out += "|" + std::to_string(isolated);
    return out;
}

} // namespace menelaus
