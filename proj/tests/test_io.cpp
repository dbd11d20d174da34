#include "doctest.h"

#include "menelaus/menelaus.hpp"

using namespace menelaus;

namespace {

std::string error_text(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        return e.what();
    }
    FAIL("expected a parse error");
    return {};
}

} // namespace

TEST_CASE("complex JSON: round trip and positioned errors")
{
    auto j = complex_to_json(corpus::tetra());
    CHECK(j.contains("v"));
    CHECK(j.contains("e"));
    CHECK(j.contains("t"));
    CHECK(complex_to_json(parse_complex(j.dump(2))) == j);

    auto broken = j;
    broken["e"][0].erase("d1");
    CHECK(error_text([&] { complex_from_json(broken); }).find("/e/0") != std::string::npos);
    CHECK(error_text([&] { parse_complex("{\"v\": [\"a\",}"); }).find("line 1") != std::string::npos);
    CHECK(error_text([&] { parse_complex("[1, 2]"); }).size() > 0);
}

TEST_CASE("certificates and violations serialise")
{
    auto c = cert_to_json(corpus::get_cert("decagon2holes"));
    CHECK(c["chi"] == -2);
    CHECK(c["genus"] == 2);
    CHECK(chain_from_json(c["orientation"]) == corpus::get_cert("decagon2holes").orientation);
    auto r = validate_mcomplex(corpus::ex311_b());
    auto v = violation_to_json(std::get<Violation>(r));
    CHECK(v["axiom"] == "EdgeDegreeNotTwo");
    CHECK(v.contains("degree"));
}

TEST_CASE("derivations round trip and stay checkable")
{
    for (const auto& d : {corpus::ex2_derivation(), decide(corpus::des3()).derivation, decide(corpus::decagon_sequent()).derivation}) {
        REQUIRE(d);
        auto j = derivation_to_json(d);
        auto back = parse_derivation(j.dump());
        CHECK(check_derivation(back).ok);
        CHECK(back->conclusion == d->conclusion);
        CHECK(derivation_to_json(back) == j);
    }
}

TEST_CASE("a forged derivation parses but fails the checker")
{
    auto j = derivation_to_json(corpus::ex2_derivation());
    j["premises"][0]["conclusion"] = corpus::unprov1().text();
    auto d = parse_derivation(j.dump());
    auto v = check_derivation(d);
    CHECK_FALSE(v.ok);
    CHECK(v.path.rfind("0", 0) == 0);
}

TEST_CASE("interpretations round trip")
{
    auto f = corpus::get("des3_only_if");
    Interpretation e = *f.interp;
    CHECK(interp_to_json(interp_from_json(interp_to_json(e))) == interp_to_json(e));

    ProjectiveInterp p{{"A", Point3{1, 2, 3}}, {"B", Point3{Rational(1, 2), 0, 1}}};
    Interpretation pi = p;
    auto back = parse_interp(interp_to_json(pi).dump());
    REQUIRE(std::holds_alternative<ProjectiveInterp>(back));
    CHECK(std::get<ProjectiveInterp>(back).at("B")[0] == Rational(1, 2));

    auto bad = interp_to_json(pi);
    bad["projective"]["A"] = Json::array({"0", "0", "0"});
    CHECK_THROWS_AS(interp_from_json(bad), Error);
}

TEST_CASE("decomposition trees round trip")
{
    auto t = decompose(corpus::get_cert("ctr_KL"));
    auto j = tree_to_json(t);
    auto back = tree_from_json(parse_json(j.dump()));
    CHECK(tree_canonical_form(back) == tree_canonical_form(t));
    CHECK(tree_to_json(back) == j);
}

TEST_CASE("DOT output")
{
    auto dot = dual_graph_dot(corpus::tetra(), "tetra");
    CHECK(dot.rfind("graph \"tetra\"", 0) == 0);
    CHECK(dot.find("\"ABC\"") != std::string::npos);
    CHECK(dot.find("label=\"P\"") != std::string::npos);
    CHECK(dot_quote("a\"b") == "\"a\\\"b\"");
    auto tree = tree_dot(decompose(corpus::get_cert("decagon2holes")));
    CHECK(tree.find("--") != std::string::npos);
}
