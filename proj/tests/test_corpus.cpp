#include "doctest.h"

#include "menelaus/menelaus.hpp"

using namespace menelaus;

TEST_CASE("the catalog is large enough and every entry loads")
{
    auto names = corpus::list();
    CHECK(names.size() >= 18);
    for (const auto& n : names) {
        auto f = corpus::get(n);
        CHECK(f.name == n);
        CHECK_FALSE(f.note.empty());
    }
    CHECK_THROWS_AS(corpus::get("no_such_fixture"), Error);
    try {
        corpus::get("no_such_fixture");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownFixture);
    }
}

TEST_CASE("complex fixtures validate as declared")
{
    for (const auto& n : corpus::list()) {
        auto f = corpus::get(n);
        if (!f.complex)
            continue;
        auto r = validate_mcomplex(*f.complex);
        if (f.expected_violation) {
            REQUIRE_MESSAGE(std::holds_alternative<Violation>(r), n);
            CHECK_MESSAGE(std::get<Violation>(r).axiom == *f.expected_violation, n);
        } else {
            REQUIRE_MESSAGE(std::holds_alternative<MComplexCert>(r), n);
            if (f.sequent)
                CHECK_MESSAGE(axiomatic_sequent(std::get<MComplexCert>(r)) == *f.sequent, n);
        }
    }
    CHECK_THROWS_AS(corpus::get_cert("dunce"), Error);
}

TEST_CASE("every complex fixture survives a JSON round trip")
{
    for (const auto& n : corpus::list()) {
        auto f = corpus::get(n);
        if (!f.complex)
            continue;
        auto j = complex_to_json(*f.complex);
        auto back = parse_complex(j.dump());
        CHECK_MESSAGE(complex_to_json(back) == j, n);
        if (!f.expected_violation)
            CHECK(is_sub2_isomorphic(back, *f.complex).has_value());
    }
}

TEST_CASE("the Desargues sequent has one diskon")
{
    auto s = corpus::des3();
    int diskons = 0, atoms = 0;
    for (const auto& f : s.formulas()) {
        if (f.kind() == Formula::Kind::Diskon)
            ++diskons;
        else if (f.kind() == Formula::Kind::Atomic)
            ++atoms;
    }
    CHECK(diskons == 1);
    CHECK(atoms == s.size() - 1);
}

TEST_CASE("interpretation fixtures name a conclusion inside their sequent")
{
    for (const auto& n : corpus::list()) {
        auto f = corpus::get(n);
        if (f.kind != corpus::Fixture::Kind::Interpretation)
            continue;
        REQUIRE(f.sequent);
        REQUIRE(f.conclusion_index);
        CHECK(*f.conclusion_index < f.sequent->size());
        for (const auto& l : letters(*f.sequent))
            CHECK_MESSAGE(f.interp->count(l) == 1, n << " misses " << l);
    }
}

TEST_CASE("derivation fixtures check")
{
    for (const auto& n : corpus::list()) {
        auto f = corpus::get(n);
        if (f.derivation)
            CHECK_MESSAGE(check_derivation(f.derivation).ok, n);
    }
}

TEST_CASE("relabelling helpers")
{
    auto k = corpus::rename_lower(corpus::tetra(), {{"A", "Z"}});
    CHECK(k.has_vertex("Z"));
    CHECK_FALSE(k.has_vertex("A"));
    auto l = corpus::rename_cells(corpus::tetra(), {{"ABC", "top"}});
    CHECK(l.has_triangle("top"));
}
