#include "doctest.h"

#include "menelaus/menelaus.hpp"

using namespace menelaus;

namespace {

std::set<std::string> edge_set(const CutTriangle& t) { return {t.edges.begin(), t.edges.end()}; }

const CutTriangle& with_edges(const std::vector<CutTriangle>& ts, std::set<std::string> es)
{
    for (const auto& t : ts)
        if (edge_set(t) == es)
            return t;
    FAIL("no such cut-triangle");
    return ts.front();
}

} // namespace

TEST_CASE("the unit is a two-cell sphere and its sums are neutral")
{
    auto u = unit("A", "B", "C", "P", "Q", "R", "x", "y");
    CHECK(is_unit(u));
    CHECK(genus(u) == 0);
    CHECK(is_irreducible(u) == Irreducibility::NotProper);
    CHECK_THROWS_AS(unit("A", "A", "C", "P", "Q", "R", "x", "y"), Error);

    auto t = corpus::get_cert("tetra");
    auto letters = nu(t, "ABC");
    auto u2 = unit(letters[0], letters[1], letters[2], letters[3], letters[4], letters[5], "u1", "u2");
    auto s = connected_sum(t, "ABC", u2, "u1");
    CHECK(s.complex.num_triangles() == 4);
    CHECK(is_sub2_isomorphic(rename(s, {{"u2", "ABC"}}).complex, t.complex).has_value());
}

TEST_CASE("renaming 2-cells must be injective")
{
    auto t = corpus::get_cert("tetra");
    CHECK_THROWS_AS(rename(t, {{"ABC", "ABD"}}), Error);
    CHECK_THROWS_AS(rename(t, {{"nope", "x"}}), Error);
    auto r = rename(t, {{"ABC", "ABD"}, {"ABD", "ABC"}});
    CHECK(r.complex.num_triangles() == 4);
    CHECK(nu(r, "ABD") == nu(t, "ABC"));
}

TEST_CASE("torus plus torus is the two-hole decagon")
{
    auto a = corpus::get_cert("torus6_pappus1"), b = corpus::get_cert("torus6_pappus2");
    auto s = connected_sum(a, "D1I", b, "D1I");
    CHECK(genus(s) == 2);
    CHECK(is_sub2_isomorphic(s.complex, corpus::decagon2holes()).has_value());
    CHECK(euler_characteristic(s.complex) == euler_characteristic(a.complex) + euler_characteristic(b.complex) - 2);
    CHECK_THROWS_AS(connected_sum(a, "nope", b, "D1I"), Error);
}

TEST_CASE("Euler characteristic is additive up to the sphere")
{
    std::vector<std::pair<const char*, const char*>> pairs{{"tetra", "torus6_pappus"}, {"torus6_pappus", "decagon2holes"},
                                                           {"ctr_K", "decagon10_irreducible"}, {"tetra", "tetra"}};
    for (auto [ln, rn] : pairs) {
        auto l = corpus::get_cert(ln);
        auto r = corpus::get_cert(rn);
        // fresh names on the right so that only the glued cell is shared
        std::map<std::string, std::string> lower, cells;
        for (const auto& v : r.complex.vertices())
            lower[v] = v + "'";
        for (const auto& e : r.complex.edges())
            lower[e.id] = e.id + "'";
        for (const auto& t : r.complex.triangles())
            cells[t.id] = t.id + "'";
        auto rr = certify(corpus::rename_cells(corpus::rename_lower(r.complex, lower), cells));
        auto x = l.complex.triangles().front().id;
        auto y = rr.complex.triangles().front().id;
        auto lx = nu(l, x), ry = nu(rr, y);
        std::map<std::string, std::string> match;
        for (int i = 0; i < 6; ++i)
            match[ry[i]] = lx[i];
        rr = certify(corpus::rename_lower(rr.complex, match));
        auto s = connected_sum(l, x, rr, y);
        CHECK_MESSAGE(euler_characteristic(s.complex) == euler_characteristic(l.complex) + euler_characteristic(rr.complex) - 2,
                      ln << " + " << rn);
        CHECK(genus(s) == genus(l) + genus(rr));
    }
}

TEST_CASE("cut-triangles of the decagons")
{
    auto ts = find_cut_triangles(corpus::get_cert("decagon2holes"));
    REQUIRE(ts.size() == 1);
    CHECK(edge_set(ts[0]) == std::set<std::string>{"D", "1", "I"});
    CHECK(find_cut_triangles(corpus::get_cert("decagon10_irreducible")).empty());
    CHECK(is_irreducible(corpus::get_cert("decagon10_irreducible")) == Irreducibility::Irreducible);
    CHECK(is_irreducible(corpus::get_cert("decagon2holes")) == Irreducibility::Reducible);
}

TEST_CASE("splitting along a cut-triangle undoes the sum")
{
    auto c = corpus::get_cert("decagon2holes");
    auto ts = find_cut_triangles(c);
    auto s = split(c, ts[0]);
    CHECK(s.left.complex.num_triangles() + s.right.complex.num_triangles() == c.complex.num_triangles() + 2);
    CHECK(s.left.complex.has_triangle(s.cell));
    CHECK(s.right.complex.has_triangle(s.cell));
    CHECK(nu(s.left, s.cell) == nu(s.right, s.cell));
    CHECK(genus(s.left) == 1);
    CHECK(genus(s.right) == 1);
    auto back = connected_sum(s.left, s.cell, s.right, s.cell);
    CHECK(is_sub2_isomorphic(back.complex, c.complex).has_value());

    CutTriangle bogus{{"D", "1", "2"}, {}, {}};
    CHECK_THROWS_AS(split(c, bogus), Error);
}

TEST_CASE("K, L, U, V are irreducible and K.L matches U.V")
{
    for (const char* n : {"ctr_K", "ctr_L", "ctr_U", "ctr_V"})
        CHECK_MESSAGE(is_irreducible(corpus::get_cert(n)) == Irreducibility::Irreducible, n);
    CHECK(is_sub2_isomorphic(corpus::ctr_KL(), corpus::ctr_UV()).has_value());
    CHECK(is_sub2_isomorphic(corpus::ctr_KL_rep(), corpus::ctr_UV_rep()).has_value());
}

TEST_CASE("the composite has two decompositions and imbricated cut-triangles")
{
    for (const char* n : {"ctr_KL", "ctr_UV", "ctr_KL_rep", "ctr_UV_rep"}) {
        auto c = corpus::get_cert(n);
        auto ts = find_cut_triangles(c);
        REQUIRE(ts.size() == 2);
        CHECK_FALSE(triangles_disjoint(c, ts[0], ts[1]));
        CHECK_FALSE(triangles_disjoint(c, ts[1], ts[0]));
        CHECK_THROWS_AS(triangles_disjoint(c, ts[0], ts[0]), Error);
        auto all = all_decompositions(c);
        CHECK(all.size() == 2);
        for (const auto& t : all) {
            CHECK(t.nodes.size() == 2);
            for (const auto& x : t.nodes)
                CHECK(is_irreducible(x) == Irreducibility::Irreducible);
            CHECK(is_sub2_isomorphic(recompose(t).complex, c.complex).has_value());
        }
        CHECK(tree_canonical_form(all[0]) != tree_canonical_form(all[1]));
    }
}

TEST_CASE("disjoint cut-triangles on the sphere example")
{
    auto c = corpus::get_cert("disjoint_T_example");
    auto ts = find_cut_triangles(c);
    const auto& t1 = with_edges(ts, {"2", "3", "4"});
    const auto& t2 = with_edges(ts, {"1", "5", "6"});
    CHECK(triangles_disjoint(c, t1, t2));
    CHECK(triangles_disjoint(c, t2, t1));
}

TEST_CASE("decompositions end in irreducible pieces and recompose")
{
    for (const char* n : {"decagon2holes", "disjoint_T_example", "ctr_KL", "tetra"}) {
        auto c = corpus::get_cert(n);
        auto t = decompose(c);
        CHECK(t.edges.size() + 1 == t.nodes.size());
        for (const auto& x : t.nodes)
            CHECK(is_irreducible(x) != Irreducibility::Reducible);
        CHECK_MESSAGE(is_sub2_isomorphic(recompose(t).complex, c.complex).has_value(), n);
    }
}

TEST_CASE("sums become cuts of axioms")
{
    std::vector<std::tuple<const char*, const char*, const char*, const char*>> pairs{
        {"torus6_pappus1", "D1I", "torus6_pappus2", "D1I"},
        {"ctr_K_rep", "gamma", "ctr_L_rep", "deltap"},
        {"ctr_U_rep", "phi", "ctr_V_rep", "psi"}};
    for (auto [a, x, b, y] : pairs) {
        auto s = sum_to_cut(corpus::get_cert(a), x, corpus::get_cert(b), y);
        auto v = check_derivation(s.derivation);
        CHECK_MESSAGE(v.ok, a << ": " << v.path << " " << v.reason);
        CHECK(s.derivation->conclusion == axiomatic_sequent(s.complex));
        CHECK(s.derivation->conclusion == s.sum);
        CHECK(s.derivation->rule == Rule::Cut);
    }
    CHECK_THROWS_AS(sum_to_cut(corpus::get_cert("ctr_K"), "gamma", corpus::get_cert("ctr_L"), "deltap"), Error);
}
