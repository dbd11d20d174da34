#pragma once

#include "menelaus/logic.hpp"

#include <gmpxx.h>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace menelaus {

using Rational = mpq_class;
using Point = std::array<Rational, 2>;
using Point3 = std::array<Rational, 3>;

inline Rational parse_rational(const std::string& s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw Error(Errc::ParseError, "bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_text(Rational q)
{
    q.canonicalize();
    return q.get_str();
}

// ---------------------------------------------------------------- ratios

template <std::size_t N>
bool collinear(const std::array<Rational, N>& x, const std::array<Rational, N>& y, const std::array<Rational, N>& z)
{
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if ((y[i] - x[i]) * (z[j] - x[j]) != (y[j] - x[j]) * (z[i] - x[i]))
                return false;
    return true;
}

// (X,Y;Z): XZ/YZ, positive iff Z lies between X and Y.
template <std::size_t N>
std::optional<Rational> ratio(const std::array<Rational, N>& x, const std::array<Rational, N>& y,
                              const std::array<Rational, N>& z)
{
    if (x == y || y == z || x == z || !collinear(x, y, z))
        return std::nullopt;
    std::size_t k = 0;
    for (std::size_t i = 0; i < N; ++i)
        if (abs(y[i] - x[i]) > abs(y[k] - x[k]))
            k = i;
    Rational out = -(z[k] - x[k]) / (z[k] - y[k]);
    return out;
}

// (A,B,C,P,Q,R) with (B,C;P)(C,A;Q)(A,B;R) = -1.
template <std::size_t N>
bool is_menelaus(const std::array<std::array<Rational, N>, 6>& p)
{
    auto r1 = ratio(p[1], p[2], p[3]);
    auto r2 = ratio(p[2], p[0], p[4]);
    auto r3 = ratio(p[0], p[1], p[5]);
    if (!r1 || !r2 || !r3)
        return false;
    return *r1 * *r2 * *r3 == -1;
}

// ---------------------------------------------------------------- Euclidean interpretations

using EuclideanInterp = std::map<Letter, Point>;

inline const Point& lookup(const EuclideanInterp& v, const Letter& l)
{
    auto it = v.find(l);
    if (it == v.end())
        throw Error(Errc::MissingLetter, "no point for letter " + l);
    return it->second;
}

inline bool satisfies_atomic(const EuclideanInterp& v, const Atom& a)
{
    std::array<Point, 6> p;
    for (int i = 0; i < 6; ++i)
        p[i] = lookup(v, a[i]);
    return is_menelaus(p);
}

enum class Polarity { Context, Conclusion };

// Diskon reads as disjunction in the context and conjunction in the conclusion.
inline bool satisfies(const EuclideanInterp& v, const Formula& f, Polarity pol)
{
    switch (f.kind()) {
    case Formula::Kind::Atomic: return satisfies_atomic(v, f.atom());
    case Formula::Kind::Diskon: {
        bool a = satisfies(v, f.left(), pol), b = satisfies(v, f.right(), pol);
        return pol == Polarity::Context ? (a || b) : (a && b);
    }
    case Formula::Kind::Equiv: return satisfies(v, f.left(), pol) == satisfies(v, f.right(), pol);
    }
    return false;
}

struct EntailmentVerdict {
    bool premises_satisfied = true;
    bool conclusion_satisfied = false;
    bool holds() const { return !premises_satisfied || conclusion_satisfied; }
};

inline EntailmentVerdict check_entailment_instance(const EuclideanInterp& v, const Sequent& s, std::size_t conclusion_index)
{
    const auto& fs = s.formulas();
    if (conclusion_index >= fs.size())
        throw Error(Errc::InternalInconsistency, "conclusion index out of range");
    EntailmentVerdict out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i == conclusion_index)
            continue;
        if (!satisfies(v, fs[i], Polarity::Context))
            out.premises_satisfied = false;
    }
    out.conclusion_satisfied = satisfies(v, fs[conclusion_index], Polarity::Conclusion);
    return out;
}

// ---------------------------------------------------------------- h on 1-chains

inline std::optional<Rational> h_edge(const EuclideanInterp& v, const DeltaComplex& k, const std::string& y)
{
    const auto& e = k.edge(y);
    return ratio(lookup(v, e.d0), lookup(v, e.d1), lookup(v, y));
}

inline std::optional<Rational> h_value(const EuclideanInterp& v, const Chain& a, const DeltaComplex& k)
{
    Rational out = 1;
    for (const auto& [y, m] : a) {
        if (m == 0)
            continue;
        auto r = h_edge(v, k, y);
        if (!r)
            return std::nullopt;
        for (long long i = 0; i < (m < 0 ? -m : m); ++i)
            out = m > 0 ? Rational(out * *r) : Rational(out / *r);
    }
    return out;
}

inline Chain cell_boundary(const DeltaComplex& k, const std::string& x) { return boundary2(Chain{{x, 1}}, k); }

// ---------------------------------------------------------------- projective layer

using ProjectiveInterp = std::map<Letter, Point3>;

inline Point3 canonical_projective(Point3 p)
{
    if (p[0] == 0 && p[1] == 0 && p[2] == 0)
        throw Error(Errc::ParseError, "the zero vector is not a projective point");
    mpz_class l = 1;
    for (auto& c : p)
        l = lcm(l, c.get_den());
    std::array<mpz_class, 3> z;
    for (int i = 0; i < 3; ++i)
        z[i] = mpz_class(p[i] * l);
    mpz_class g = 0;
    for (auto& c : z)
        g = gcd(g, c);
    int lead = z[0] != 0 ? 0 : z[1] != 0 ? 1 : 2;
    if (z[lead] < 0)
        g = -g;
    Point3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = Rational(z[i] / g);
    return out;
}

inline Rational dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Integer normals in increasing max-norm, coordinates ordered 0, 1, -1, 2, -2, ... within a shell.
inline std::vector<Point3> proper_planes(const std::vector<Point3>& pts, std::size_t count)
{
    std::vector<Point3> out;
    for (long m = 1; out.size() < count; ++m) {
        std::vector<long> coords{0};
        for (long c = 1; c <= m; ++c) {
            coords.push_back(c);
            coords.push_back(-c);
        }
        for (long a : coords)
            for (long b : coords)
                for (long c : coords) {
                    if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != m || out.size() >= count)
                        continue;
                    Point3 n{Rational(a), Rational(b), Rational(c)};
                    bool ok = true;
                    for (const auto& p : pts)
                        ok = ok && dot(n, p) != 0;
                    if (ok)
                        out.push_back(n);
                }
    }
    return out;
}

inline Point3 choose_proper_plane(const std::vector<Point3>& pts) { return proper_planes(pts, 1).front(); }

inline Point3 project_to_plane(const Point3& p, const Point3& n)
{
    Rational d = dot(n, p);
    return {p[0] / d, p[1] / d, p[2] / d};
}

inline bool is_menelaus_projective(const std::array<Point3, 6>& pts, const std::optional<Point3>& plane = std::nullopt)
{
    std::vector<Point3> v(pts.begin(), pts.end());
    Point3 n = plane ? *plane : choose_proper_plane(v);
    for (const auto& p : v)
        if (dot(n, p) == 0)
            throw Error(Errc::InternalInconsistency, "plane does not meet every point properly");
    std::array<Point3, 6> q;
    for (int i = 0; i < 6; ++i)
        q[i] = project_to_plane(pts[i], n);
    return is_menelaus(q);
}

inline bool satisfies_atomic(const ProjectiveInterp& v, const Atom& a, const std::optional<Point3>& plane = std::nullopt)
{
    std::array<Point3, 6> p;
    for (int i = 0; i < 6; ++i) {
        auto it = v.find(a[i]);
        if (it == v.end())
            throw Error(Errc::MissingLetter, "no point for letter " + a[i]);
        p[i] = it->second;
    }
    return is_menelaus_projective(p, plane);
}

// ---------------------------------------------------------------- planar constructions

inline std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c, const Point& d)
{
    Rational d1x = b[0] - a[0], d1y = b[1] - a[1], d2x = d[0] - c[0], d2y = d[1] - c[1];
    Rational den = d1x * d2y - d1y * d2x;
    if (den == 0)
        return std::nullopt;
    Rational t = ((c[0] - a[0]) * d2y - (c[1] - a[1]) * d2x) / den;
    return Point{a[0] + t * d1x, a[1] + t * d1y};
}

// (X + rY)/(1 + r), the point Z with (X,Y;Z) = r.
inline Point point_with_ratio(const Point& x, const Point& y, const Rational& r)
{
    Rational s = 1 + r;
    return {(x[0] + r * y[0]) / s, (x[1] + r * y[1]) / s};
}

// ---------------------------------------------------------------- soundness harness

struct HarnessCase {
    EuclideanInterp interp;
    std::string open_cell; // the cell whose formula is left unconstrained
    bool others_satisfied = false;
    bool open_satisfied = false;
};

// Random interpretation satisfying nu(x) for every cell x except open_cell, built by fixing the
// ratios on a spanning tree of the dual graph.
inline std::optional<HarnessCase> harness_case(const MComplexCert& cert, const std::string& open_cell, std::mt19937_64& rng,
                                               int attempts = 50)
{
    const auto& k = cert.complex;
    std::uniform_int_distribution<int> coord(-30, 30), num(-9, 9), den(1, 6);
    auto random_ratio = [&] {
        for (;;) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            if (r != 0 && r != -1)
                return r;
        }
    };

    // dual spanning tree from open_cell
    std::map<std::string, std::vector<std::string>> cells_of_edge;
    for (const auto& t : k.triangles())
        for (const auto& e : t.faces())
            cells_of_edge[e].push_back(t.id);
    std::map<std::string, std::string> parent_edge;
    std::vector<std::string> order{open_cell};
    std::set<std::string> seen{open_cell};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& e : k.triangle(order[i]).faces())
            for (const auto& c : cells_of_edge[e])
                if (seen.insert(c).second) {
                    parent_edge[c] = e;
                    order.push_back(c);
                }
    std::set<std::string> tree_edges;
    for (const auto& [c, e] : parent_edge)
        tree_edges.insert(e);

    for (int attempt = 0; attempt < attempts; ++attempt) {
        EuclideanInterp v;
        std::set<Point> used;
        for (const auto& w : k.vertices()) {
            Point p;
            do
                p = {Rational(coord(rng)), Rational(coord(rng))};
            while (used.count(p));
            used.insert(p);
            v[w] = p;
        }
        std::map<std::string, Rational> r;
        for (const auto& e : k.edges())
            if (!tree_edges.count(e.id))
                r[e.id] = random_ratio();
        bool ok = true;
        for (auto it = order.rbegin(); it != order.rend() && ok; ++it) {
            if (*it == open_cell)
                continue;
            const auto& t = k.triangle(*it);
            const auto& pe = parent_edge.at(*it);
            // r(d0) r(d2) / r(d1) = -1
            Rational val;
            if (pe == t.d0)
                val = -r.at(t.d1) / r.at(t.d2);
            else if (pe == t.d2)
                val = -r.at(t.d1) / r.at(t.d0);
            else
                val = -r.at(t.d0) * r.at(t.d2);
            if (val == -1)
                ok = false;
            r[pe] = val;
        }
        if (!ok)
            continue;
        for (const auto& e : k.edges())
            v[e.id] = point_with_ratio(v.at(e.d0), v.at(e.d1), r.at(e.id));
        HarnessCase hc{v, open_cell, true, false};
        for (const auto& t : k.triangles()) {
            bool s = satisfies_atomic(v, nu(k, t.id));
            if (t.id == open_cell)
                hc.open_satisfied = s;
            else
                hc.others_satisfied = hc.others_satisfied && s;
        }
        if (!hc.others_satisfied)
            continue;
        return hc;
    }
    return std::nullopt;
}

} // namespace menelaus
