#include "doctest.h"

#include "menelaus/menelaus.hpp"
#include "support/gluings.hpp"

using namespace menelaus;

namespace {

ComplexSpec triangle_spec()
{
    ComplexSpec s;
    s.v = {"a", "b", "c"};
    s.e = {{"p", "c", "b"}, {"q", "c", "a"}, {"r", "b", "a"}};
    s.t = {{"x", "p", "q", "r"}};
    return s;
}

Errc make_error(ComplexSpec s)
{
    try {
        DeltaComplex::make(std::move(s));
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::InternalInconsistency;
}

} // namespace

TEST_CASE("construction rejects dangling faces, duplicates and broken identities")
{
    auto s = triangle_spec();
    CHECK_NOTHROW(DeltaComplex::make(s));

    auto dangling = s;
    dangling.t[0].d1 = "z";
    CHECK(make_error(dangling) == Errc::DanglingFace);

    auto dup = s;
    dup.e.push_back({"p", "a", "b"});
    CHECK(make_error(dup) == Errc::DuplicateCell);

    auto twisted = s;
    twisted.e[0] = {"p", "b", "c"};
    CHECK(make_error(twisted) == Errc::SimplicialIdentityViolated);
}

TEST_CASE("vertex order of a cell follows the face maps")
{
    auto k = DeltaComplex::make(triangle_spec());
    CHECK(k.tri_vertices("x") == std::array<std::string, 3>{"a", "b", "c"});
}

TEST_CASE("boundary of a boundary vanishes on every corpus complex")
{
    for (const auto& name : corpus::list()) {
        auto f = corpus::get(name);
        if (!f.complex)
            continue;
        for (const auto& t : f.complex->triangles()) {
            auto b = boundary2(Chain{{t.id, 1}}, *f.complex);
            CHECK_MESSAGE(boundary1(b, *f.complex).empty(), name << " " << t.id);
        }
    }
}

TEST_CASE("chain arithmetic drops zero coefficients")
{
    Chain c;
    chain_add(c, "x", 2);
    chain_add(c, "x", -2);
    CHECK(c.empty());
    chain_add(c, "y", -1);
    CHECK(c.at("y") == -1);
}

TEST_CASE("certificates carry a fundamental cycle with the root cell positive")
{
    for (const char* name : {"tetra", "sphere_id", "torus6_pappus", "decagon2holes", "decagon10_irreducible"}) {
        auto c = corpus::get_cert(name);
        CHECK(is_cycle(c.orientation, c.complex));
        CHECK(c.orientation.size() == c.complex.num_triangles());
        auto first = std::min_element(c.complex.triangles().begin(), c.complex.triangles().end(),
                                      [](const TriSpec& a, const TriSpec& b) { return a.id < b.id; });
        CHECK(c.orientation.at(first->id) == 1);
        for (const auto& [x, m] : c.orientation)
            CHECK((m == 1 || m == -1));
    }
}

TEST_CASE("Euler characteristic and genus")
{
    CHECK(euler_characteristic(corpus::tetra()) == 2);
    CHECK(genus(corpus::get_cert("tetra")) == 0);
    CHECK(genus(corpus::get_cert("sphere_id")) == 0);
    CHECK(genus(corpus::get_cert("torus6_pappus")) == 1);
    CHECK(genus(corpus::get_cert("decagon2holes")) == 2);
    CHECK(genus(corpus::get_cert("decagon10_irreducible")) == 2);
}

TEST_CASE("validation reasons on the worked examples")
{
    auto reason = [](const DeltaComplex& k) -> std::optional<Axiom> {
        auto r = validate_mcomplex(k);
        if (auto* v = std::get_if<Violation>(&r))
            return v->axiom;
        return std::nullopt;
    };
    CHECK(reason(corpus::ex311_a()) == Axiom::NotHomogeneous);
    CHECK(reason(corpus::ex311_b()) == Axiom::EdgeDegreeNotTwo);
    CHECK(reason(corpus::ex311_c()) == std::nullopt);
    CHECK(reason(corpus::ex311_d()) == Axiom::NotRegular);
    CHECK(reason(corpus::ex311_e()) == std::nullopt);
    CHECK(reason(corpus::dunce()) == Axiom::NotRegular);
}

TEST_CASE("edge degree violations report the degree")
{
    auto r = validate_mcomplex(corpus::ex311_b());
    auto& v = std::get<Violation>(r);
    CHECK(v.degree != 2);
    CHECK_FALSE(v.witness.empty());
}

TEST_CASE("two disjoint spheres are not connected")
{
    auto a = corpus::sphere_id().spec();
    auto b = corpus::rename_cells(corpus::rename_lower(corpus::sphere_id(), {{"A", "A2"}, {"B", "B2"}, {"C", "C2"}, {"P", "P2"}, {"Q", "Q2"}, {"R", "R2"}}),
                                  {{"x", "x2"}, {"y", "y2"}})
                 .spec();
    a.v.insert(a.v.end(), b.v.begin(), b.v.end());
    a.e.insert(a.e.end(), b.e.begin(), b.e.end());
    a.t.insert(a.t.end(), b.t.begin(), b.t.end());
    auto k = DeltaComplex::make(a);
    CHECK(connected_components(k).size() == 2);
    auto r = validate_mcomplex(k);
    REQUIRE(std::holds_alternative<Violation>(r));
    CHECK(std::get<Violation>(r).axiom == Axiom::NotConnected);
}

TEST_CASE("links are circles through every incident cell")
{
    for (const char* name : {"tetra", "torus6_pappus", "decagon2holes"}) {
        auto c = corpus::get_cert(name);
        for (const auto& w : c.complex.vertices()) {
            auto cyc = link_cycle(c, w);
            std::set<std::string> seen(cyc.begin(), cyc.end());
            std::size_t incident = 0;
            for (const auto& t : c.complex.triangles()) {
                auto vs = c.complex.tri_vertices(t);
                incident += std::count(vs.begin(), vs.end(), w) > 0;
            }
            CHECK(seen.size() == incident);
            // consecutive cells share an edge through w
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const auto& x = c.complex.triangle(cyc[i]);
                const auto& y = c.complex.triangle(cyc[(i + 1) % cyc.size()]);
                bool shared = false;
                for (const auto& e : x.faces())
                    for (const auto& f : y.faces()) {
                        const auto& ed = c.complex.edge(e);
                        shared = shared || (e == f && (ed.d0 == w || ed.d1 == w));
                    }
                CHECK(shared);
            }
        }
    }
    CHECK_THROWS_AS(link_cycle(corpus::get_cert("tetra"), "nope"), Error);
}

TEST_CASE("the L-construction turns a 2-cycle into an M-complex")
{
    for (const char* name : {"tetra", "torus6_pappus", "decagon2holes"}) {
        auto c = corpus::get_cert(name);
        auto lift = cycle_to_mcomplex(c.complex, c.orientation);
        auto r = validate_mcomplex(lift.complex);
        CHECK(std::holds_alternative<MComplexCert>(r));
        CHECK(lift.complex.num_triangles() == c.complex.num_triangles());
        CHECK(is_cycle(lift.lifted, lift.complex));
    }
    auto c = corpus::get_cert("tetra");
    Chain broken = c.orientation;
    broken.erase(broken.begin());
    CHECK_THROWS_AS(cycle_to_mcomplex(c.complex, broken), Error);
}

TEST_CASE("the L-construction on a doubled cycle lifts to two components")
{
    auto c = corpus::get_cert("tetra");
    Chain twice;
    for (const auto& [x, m] : c.orientation)
        chain_add(twice, x, 2 * m);
    auto lift = cycle_to_mcomplex(c.complex, twice);
    CHECK(lift.complex.num_triangles() == 8);
}

TEST_CASE("<2-isomorphism sees through renaming of lower cells only")
{
    auto k = corpus::tetra();
    auto l = corpus::rename_lower(k, {{"A", "A9"}, {"P", "P9"}});
    auto iso = is_sub2_isomorphic(k, l);
    REQUIRE(iso);
    CHECK(iso->map0.at("A") == "A9");
    CHECK(iso->map1.at("P") == "P9");
    CHECK(sub2_canonical_form(k) == sub2_canonical_form(l));

    auto renamed_cells = corpus::rename_cells(k, {{"ABC", "other"}});
    CHECK_FALSE(is_sub2_isomorphic(k, renamed_cells));
    CHECK_FALSE(is_sub2_isomorphic(corpus::torus6_pappus1(), corpus::torus6_pappus2()));
}

TEST_CASE("exhaustive small gluings agree with integer homology and brute-force cut-triangles")
{
    auto g = testing::gluing_census(4);
    CHECK(g.gluings == 15 + 1620);
    CHECK(g.certified > 0);
    CHECK(g.orientability_mismatches == 0);
    CHECK(g.irreducibility_mismatches == 0);
}
