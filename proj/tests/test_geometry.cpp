#include "doctest.h"

#include "menelaus/menelaus.hpp"

#include <random>

using namespace menelaus;

namespace {

Rational rnd(std::mt19937_64& g, int lo = -20, int hi = 20)
{
    std::uniform_int_distribution<int> n(lo, hi), d(1, 9);
    Rational r(n(g), d(g));
    r.canonicalize();
    return r;
}

Point rnd_point(std::mt19937_64& g) { return {rnd(g), rnd(g)}; }

Rational nonzero(std::mt19937_64& g)
{
    Rational r;
    do
        r = rnd(g);
    while (r == 0);
    return r;
}

// Ratio r not in {0, -1}.
Rational proper_ratio(std::mt19937_64& g)
{
    Rational r;
    do
        r = rnd(g);
    while (r == 0 || r == -1);
    return r;
}

Point rnd_on(std::mt19937_64& g, const Point& x, const Point& y) { return point_with_ratio(x, y, proper_ratio(g)); }

bool noncollinear(const Point& a, const Point& b, const Point& c) { return !collinear(a, b, c); }

// Six points with A, B, C a triangle and P, Q, R on its sides; the last side point is
// either forced onto line PQ or random.
std::array<Point, 6> configuration(std::mt19937_64& g, bool menelaus_wanted)
{
    for (;;) {
        Point a = rnd_point(g), b = rnd_point(g), c = rnd_point(g);
        if (!noncollinear(a, b, c))
            continue;
        Point p = rnd_on(g, b, c), q = rnd_on(g, c, a);
        Point r;
        if (menelaus_wanted) {
            auto m = line_intersection(p, q, a, b);
            if (!m)
                continue;
            r = *m;
        } else {
            r = rnd_on(g, a, b);
        }
        std::array<Point, 6> pts{a, b, c, p, q, r};
        std::set<std::pair<Rational, Rational>> distinct;
        for (const auto& x : pts)
            distinct.insert({x[0], x[1]});
        if (distinct.size() == 6)
            return pts;
    }
}

} // namespace

TEST_CASE("rationals parse as p/q and print back")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(rational_text(Rational(6, 3)) == "2");
    CHECK(rational_text(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("signed ratio: positive between, negative outside")
{
    Point x{0, 0}, y{2, 0};
    CHECK(*ratio(x, y, Point{1, 0}) == 1);
    CHECK(*ratio(x, y, Point{3, 0}) == -3);
    CHECK_FALSE(ratio(x, y, Point{1, 1}));
    CHECK_FALSE(ratio(x, x, Point{1, 1}));
    // (X,Y;Z) is the reciprocal of (Y,X;Z)
    CHECK(*ratio(x, y, Point{5, 0}) * *ratio(y, x, Point{5, 0}) == 1);
}

TEST_CASE("three-ratio identity on random collinear triples")
{
    std::mt19937_64 g(1);
    for (int i = 0; i < 1000; ++i) {
        Point base = rnd_point(g), dir;
        do
            dir = rnd_point(g);
        while (dir[0] == 0 && dir[1] == 0);
        Rational s, t, u;
        do {
            s = rnd(g);
            t = rnd(g);
            u = rnd(g);
        } while (s == t || t == u || s == u);
        auto at = [&](const Rational& k) { return Point{base[0] + k * dir[0], base[1] + k * dir[1]}; };
        Point U = at(s), V = at(t), W = at(u);
        CHECK(*ratio(U, V, W) * *ratio(V, W, U) * *ratio(W, U, V) == 1);
    }
}

TEST_CASE("point_with_ratio realises the requested ratio")
{
    std::mt19937_64 g(2);
    for (int i = 0; i < 200; ++i) {
        Point x = rnd_point(g), y = rnd_point(g);
        if (x == y)
            continue;
        auto r = proper_ratio(g);
        CHECK(*ratio(x, y, point_with_ratio(x, y, r)) == r);
    }
}

TEST_CASE("Menelaus configurations are invariant under the group")
{
    std::mt19937_64 g(3);
    for (int i = 0; i < 100; ++i) {
        auto pts = configuration(g, i % 2 == 0);
        Atom names{"A", "B", "C", "P", "Q", "R"};
        EuclideanInterp v;
        for (int j = 0; j < 6; ++j)
            v[names[j]] = pts[j];
        bool m = satisfies_atomic(v, names);
        CHECK(m == (i % 2 == 0));
        for (const auto& y : orbit(names))
            CHECK(satisfies_atomic(v, y) == m);
    }
}

TEST_CASE("a cell satisfies its formula exactly when h of its boundary is -1")
{
    std::mt19937_64 g(4);
    std::vector<MComplexCert> certs;
    for (const char* name : {"tetra", "torus6_pappus", "decagon2holes", "ctr_K", "decagon10_irreducible"})
        certs.push_back(corpus::get_cert(name));
    int checked = 0;
    while (checked < 1000) {
        const auto& c = certs[g() % certs.size()];
        const auto& ts = c.complex.triangles();
        const auto& x = ts[g() % ts.size()];
        auto letters = nu(c, x.id);
        auto pts = configuration(g, g() % 2 == 0);
        EuclideanInterp v;
        for (int j = 0; j < 6; ++j)
            v[letters[j]] = pts[j];
        auto h = h_value(v, cell_boundary(c.complex, x.id), c.complex);
        REQUIRE(h);
        CHECK(satisfies_atomic(v, letters) == (*h == -1));
        ++checked;
    }
}

TEST_CASE("h is a partial homomorphism on 1-chains")
{
    auto c = corpus::get_cert("tetra");
    std::mt19937_64 g(5);
    auto pts = configuration(g, true);
    EuclideanInterp v;
    Atom letters = nu(c, "ABC");
    for (int j = 0; j < 6; ++j)
        v[letters[j]] = pts[j];
    Chain a{{"P", 1}}, b{{"Q", -1}}, ab{{"P", 1}, {"Q", -1}};
    CHECK(*h_value(v, ab, c.complex) == *h_value(v, a, c.complex) * *h_value(v, b, c.complex));
    Chain missing{{"U", 1}};
    CHECK_THROWS_AS(h_value(v, missing, c.complex), Error);
}

TEST_CASE("soundness harness: closing all but one cell forces the last")
{
    std::mt19937_64 g(6);
    for (const auto& name : corpus::list()) {
        auto f = corpus::get(name);
        if (!f.complex || f.expected_violation)
            continue;
        auto c = certify(*f.complex);
        const auto& ts = c.complex.triangles();
        auto seq = axiomatic_sequent(c);
        int cases = 0;
        for (int i = 0; i < 100; ++i) {
            const auto& open = ts[g() % ts.size()].id;
            auto hc = harness_case(c, open, g);
            REQUIRE_MESSAGE(hc, name);
            CHECK(hc->others_satisfied);
            CHECK_MESSAGE(hc->open_satisfied, name << " open " << open);
            auto fs = seq.formulas();
            auto at = std::find(fs.begin(), fs.end(), Formula::atomic(nu(c, open)));
            REQUIRE(at != fs.end());
            auto e = check_entailment_instance(hc->interp, seq, static_cast<std::size_t>(at - fs.begin()));
            CHECK(e.premises_satisfied);
            CHECK(e.holds());
            ++cases;
        }
        CHECK(cases == 100);
    }
}

TEST_CASE("Desargues in both directions")
{
    for (const char* name : {"des3_only_if", "des3_if"}) {
        auto f = corpus::get(name);
        REQUIRE(f.interp);
        auto e = check_entailment_instance(*f.interp, *f.sequent, *f.conclusion_index);
        CHECK_MESSAGE(e.premises_satisfied, name);
        CHECK_MESSAGE(e.conclusion_satisfied, name);
    }
    auto only_if = corpus::get("des3_only_if");
    CHECK(only_if.sequent->formulas()[*only_if.conclusion_index].text() == "(A,B,C,P,Q,R)");
    auto if_dir = corpus::get("des3_if");
    CHECK(if_dir.sequent->formulas()[*if_dir.conclusion_index].text() == "(A,C,D,W,U,Q)");
}

TEST_CASE("diskon is disjunctive in the context and conjunctive in the conclusion")
{
    auto f = corpus::get("des3_only_if");
    const auto& v = *f.interp;
    Formula yes = parse_formula("(A,B,C,P,Q,R)");
    Formula no = parse_formula("(A,B,C,R,Q,P)");
    REQUIRE(satisfies(v, yes, Polarity::Context));
    REQUIRE_FALSE(satisfies(v, no, Polarity::Context));
    CHECK(satisfies(v, Formula::diskon(yes, no), Polarity::Context));
    CHECK_FALSE(satisfies(v, Formula::diskon(yes, no), Polarity::Conclusion));
    CHECK(satisfies(v, Formula::equiv(no, no), Polarity::Conclusion));
    CHECK_FALSE(satisfies(v, Formula::equiv(yes, no), Polarity::Conclusion));
}

TEST_CASE("missing letters are reported")
{
    EuclideanInterp v{{"A", {0, 0}}};
    CHECK_THROWS_AS(satisfies_atomic(v, Atom{"A", "B", "C", "P", "Q", "R"}), Error);
}

TEST_CASE("projective verdicts do not depend on the proper plane or on rescaling")
{
    std::mt19937_64 g(7);
    int menelaus_seen = 0;
    for (int i = 0; i < 200; ++i) {
        std::array<Point3, 6> pts;
        if (i % 4 == 3) {
            for (auto& p : pts)
                p = {rnd(g), rnd(g), nonzero(g)};
        } else {
            auto e = configuration(g, i % 2 == 0);
            // a random invertible linear map keeps incidences but moves the line at infinity
            std::array<Rational, 9> m;
            do
                for (auto& x : m)
                    x = rnd(g, -3, 3);
            while (m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]) == 0);
            for (int j = 0; j < 6; ++j) {
                Point3 lift{e[j][0], e[j][1], 1};
                Point3 q;
                for (int r = 0; r < 3; ++r)
                    q[r] = m[3 * r] * lift[0] + m[3 * r + 1] * lift[1] + m[3 * r + 2] * lift[2];
                pts[j] = q;
            }
        }
        std::vector<Point3> all(pts.begin(), pts.end());
        auto planes = proper_planes(all, 3);
        REQUIRE(planes.size() == 3);
        bool first = is_menelaus_projective(pts, planes[0]);
        menelaus_seen += first;
        for (const auto& n : planes)
            CHECK(is_menelaus_projective(pts, n) == first);
        CHECK(is_menelaus_projective(pts) == first);
        auto scaled = pts;
        for (auto& p : scaled) {
            auto s = nonzero(g);
            for (auto& x : p)
                x *= s;
        }
        CHECK(is_menelaus_projective(scaled) == first);
        CHECK(is_menelaus_projective(scaled, planes[1]) == first);
    }
    CHECK(menelaus_seen > 0);
}

TEST_CASE("the affine lift of a Euclidean configuration keeps its verdict")
{
    std::mt19937_64 g(8);
    for (int i = 0; i < 50; ++i) {
        auto e = configuration(g, i % 2 == 0);
        std::array<Point3, 6> pts;
        for (int j = 0; j < 6; ++j)
            pts[j] = {e[j][0], e[j][1], 1};
        CHECK(is_menelaus_projective(pts, Point3{0, 0, 1}) == (i % 2 == 0));
    }
}

TEST_CASE("proper planes avoid every point")
{
    std::vector<Point3> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto n = choose_proper_plane(pts);
    for (const auto& p : pts)
        CHECK(dot(n, p) != 0);
    CHECK(n == Point3{1, 1, 1});
}
