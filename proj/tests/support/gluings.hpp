#pragma once

#include "menelaus/menelaus.hpp"

#include <functional>

namespace menelaus::testing {

// Slot 3c+i is face d_i of cell c. Face d_i joins (d1, d0) vertex positions:
// d0: (1, 2), d1: (0, 2), d2: (0, 1).
inline constexpr int face_ends[3][2] = {{1, 2}, {0, 2}, {0, 1}};

inline DeltaComplex glue(int n, const std::vector<int>& mate)
{
    detail::UnionFind uf(static_cast<std::size_t>(3 * n));
    auto vslot = [](int c, int p) { return static_cast<std::size_t>(3 * c + p); };
    for (int s = 0; s < 3 * n; ++s) {
        int t = mate[s];
        if (t < s)
            continue;
        for (int end = 0; end < 2; ++end)
            uf.unite(vslot(s / 3, face_ends[s % 3][end]), vslot(t / 3, face_ends[t % 3][end]));
    }
    std::map<std::size_t, std::string> vname;
    ComplexSpec spec;
    for (int i = 0; i < 3 * n; ++i) {
        auto r = uf.find(static_cast<std::size_t>(i));
        if (!vname.count(r)) {
            vname[r] = "v" + std::to_string(vname.size());
            spec.v.push_back(vname[r]);
        }
    }
    std::vector<std::string> ename(static_cast<std::size_t>(3 * n));
    for (int s = 0; s < 3 * n; ++s) {
        int t = mate[s];
        if (t < s)
            continue;
        auto id = "e" + std::to_string(spec.e.size());
        int c = s / 3, i = s % 3;
        spec.e.push_back({id, vname[uf.find(vslot(c, face_ends[i][1]))], vname[uf.find(vslot(c, face_ends[i][0]))]});
        ename[s] = ename[t] = id;
    }
    for (int c = 0; c < n; ++c)
        spec.t.push_back({"x" + std::to_string(c), ename[3 * c], ename[3 * c + 1], ename[3 * c + 2]});
    return DeltaComplex::make(std::move(spec));
}

// Connected gluings of n cells by pairing edge slots; cells are numbered in order of
// discovery from cell 0, which removes most relabelled duplicates.
inline void for_each_gluing(int n, const std::function<void(const DeltaComplex&)>& f)
{
    std::vector<int> mate(static_cast<std::size_t>(3 * n), -1);
    std::function<void(int)> go = [&](int opened) {
        int s = 0;
        while (s < 3 * opened && mate[s] >= 0)
            ++s;
        if (s == 3 * opened) {
            if (opened == n)
                f(glue(n, mate));
            return;
        }
        for (int t = s + 1; t < 3 * opened; ++t)
            if (mate[t] < 0) {
                mate[s] = t;
                mate[t] = s;
                go(opened);
                mate[s] = mate[t] = -1;
            }
        if (opened < n)
            for (int i = 0; i < 3; ++i) {
                int t = 3 * opened + i;
                mate[s] = t;
                mate[t] = s;
                go(opened + 1);
                mate[s] = mate[t] = -1;
            }
    };
    go(1);
}

// Rank of the rational kernel of the boundary map on 2-chains.
inline std::size_t kernel_rank_d2(const DeltaComplex& k)
{
    const auto rows = k.num_edges(), cols = k.num_triangles();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c) {
        const auto& t = k.triangles()[c];
        m[k.edge_index(t.d0)][c] += 1;
        m[k.edge_index(t.d1)][c] -= 1;
        m[k.edge_index(t.d2)][c] += 1;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return cols - rank;
}

// Cut-triangles straight from the definition: some labelling makes e0 - e1 + e2 a
// 1-cycle, and sharing an edge outside T is an equivalence with two classes.
inline std::size_t brute_cut_triangles(const DeltaComplex& k)
{
    const auto& es = k.edges();
    std::size_t found = 0;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            for (std::size_t c = b + 1; c < es.size(); ++c) {
                std::array<std::string, 3> lab{es[a].id, es[b].id, es[c].id};
                std::sort(lab.begin(), lab.end());
                bool cycle = false;
                do {
                    Chain ch;
                    chain_add(ch, lab[0], 1);
                    chain_add(ch, lab[1], -1);
                    chain_add(ch, lab[2], 1);
                    cycle = boundary1(ch, k).empty();
                } while (!cycle && std::next_permutation(lab.begin(), lab.end()));
                if (!cycle)
                    continue;
                std::set<std::string> tri{es[a].id, es[b].id, es[c].id};
                const auto& ts = k.triangles();
                std::vector<std::vector<bool>> rel(ts.size(), std::vector<bool>(ts.size(), false));
                for (std::size_t i = 0; i < ts.size(); ++i)
                    for (std::size_t j = 0; j < ts.size(); ++j)
                        for (int p = 0; p < 3; ++p)
                            for (int q = 0; q < 3; ++q) {
                                const auto& f = ts[i].faces()[p];
                                if (f == ts[j].faces()[q] && !tri.count(f) && (i != j || p != q))
                                    rel[i][j] = true;
                            }
                for (std::size_t m = 0; m < ts.size(); ++m)
                    for (std::size_t i = 0; i < ts.size(); ++i)
                        for (std::size_t j = 0; j < ts.size(); ++j)
                            if (rel[i][m] && rel[m][j])
                                rel[i][j] = true;
                bool reflexive = true;
                for (std::size_t i = 0; i < ts.size(); ++i)
                    reflexive = reflexive && rel[i][i];
                if (!reflexive)
                    continue;
                std::set<std::vector<bool>> classes(rel.begin(), rel.end());
                if (classes.size() == 2)
                    ++found;
            }
    return found;
}

struct GluingCensus {
    std::size_t gluings = 0, reached_orientability = 0, certified = 0;
    std::size_t orientability_mismatches = 0, irreducibility_mismatches = 0;
};

inline GluingCensus gluing_census(int max_cells)
{
    GluingCensus g;
    for (int n = 2; n <= max_cells; n += 2)
        for_each_gluing(n, [&](const DeltaComplex& k) {
            ++g.gluings;
            auto r = validate_mcomplex(k);
            auto* v = std::get_if<Violation>(&r);
            if (v && v->axiom != Axiom::NotOrientable)
                return;
            ++g.reached_orientability;
            bool accepted = v == nullptr;
            if (accepted != (kernel_rank_d2(k) == 1))
                ++g.orientability_mismatches;
            if (!accepted)
                return;
            ++g.certified;
            auto irr = is_irreducible(std::get<MComplexCert>(r));
            bool brute_irr = brute_cut_triangles(k) == 0;
            if ((irr != Irreducibility::Reducible) != brute_irr || (irr == Irreducibility::NotProper) != (n == 2))
                ++g.irreducibility_mismatches;
        });
    return g;
}

} // namespace menelaus::testing
