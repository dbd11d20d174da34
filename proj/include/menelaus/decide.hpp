#pragma once

#include "menelaus/derivation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace menelaus {

struct Budget {
    int max_cells = 6;             // largest candidate axiom, in 2-cells
    int max_rounds = 8;            // depth of the backward search
    std::size_t max_seqs = 100000; // distinct sequents examined
};

struct RefutationCertificate {
    enum class Reason { OddLength, OrbitMismatch, NotAxiomaticUpToReconstruction, SaturationExhausted };
    Reason reason = Reason::SaturationExhausted;
    bool euler_parity = false;
    std::size_t formula_count = 0;
    std::size_t letter_count = 0;
    std::string detail;
};

inline std::string_view reason_name(RefutationCertificate::Reason r)
{
    using R = RefutationCertificate::Reason;
    switch (r) {
    case R::OddLength: return "OddLength";
    case R::OrbitMismatch: return "OrbitMismatch";
    case R::NotAxiomaticUpToReconstruction: return "NotAxiomaticUpToReconstruction";
    case R::SaturationExhausted: return "SaturationExhausted";
    }
    return "?";
}

struct SearchTrace {
    std::size_t sequents = 0;         // memoized sequents
    int deepest = 0;
    std::vector<std::string> limits;  // "<budget>: <sequent>" for each cut-off branch
};

struct Decision {
    enum class Status { Derivable, Underivable, ResourceExceeded };
    Status status = Status::Underivable;
    DerivPtr derivation;
    std::optional<RefutationCertificate> certificate;
    SearchTrace trace;
};

inline std::string_view status_name(Decision::Status s)
{
    switch (s) {
    case Decision::Status::Derivable: return "Derivable";
    case Decision::Status::Underivable: return "Underivable";
    case Decision::Status::ResourceExceeded: return "ResourceExceeded";
    }
    return "?";
}

// ---------------------------------------------------------------- orbit bridges

// Shortest chain of schema steps from a to b, both ends included.
inline std::vector<Atom> orbit_path(const Atom& a, const Atom& b)
{
    std::map<Atom, Atom> prev{{a, a}};
    std::deque<Atom> q{a};
    while (!q.empty()) {
        auto x = q.front();
        q.pop_front();
        if (x == b)
            break;
        for (const auto& g : {perm_s, perm_t}) {
            auto y = apply_group(g, x);
            if (prev.emplace(y, x).second)
                q.push_back(y);
        }
    }
    if (!prev.count(b))
        throw Error(Errc::InternalInconsistency, "no orbit path between " + atom_text(a) + " and " + atom_text(b));
    std::vector<Atom> path{b};
    while (!(path.back() == a))
        path.push_back(prev.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

inline DerivPtr schema_axiom(const Atom& a, const Atom& b)
{
    auto si = schema_instance({a, b});
    if (!si)
        throw Error(Errc::InternalInconsistency, "not a schema instance");
    return make_axiom(Sequent::of_atoms({a, b}), "schema:" + std::string(schema_name(si->kind)));
}

// Derivation of |- a, b for a and b in one orbit.
inline DerivPtr orbit_bridge(const Atom& a, const Atom& b)
{
    auto path = orbit_path(a, b);
    if (path.size() == 1)
        return schema_axiom(a, a);
    auto d = schema_axiom(path[0], path[1]);
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        d = make_cut(d, schema_axiom(path[i], path[i + 1]), Formula::atomic(path[i]));
    return d;
}

// Replaces one occurrence of `from` in the conclusion of d by `to`.
inline DerivPtr orbit_replace(const DerivPtr& d, const Atom& from, const Atom& to)
{
    if (from == to)
        return d;
    return make_cut(d, orbit_bridge(from, to), Formula::atomic(from));
}

// ---------------------------------------------------------------- quick refutation

inline std::optional<RefutationCertificate> quick_refute(const Sequent& s)
{
    using R = RefutationCertificate::Reason;
    auto as = s.atoms();
    RefutationCertificate c;
    c.formula_count = as.size();
    c.letter_count = letters(s).size();
    if (as.size() % 2 == 1) {
        c.reason = R::OddLength;
        c.detail = "every derivable atomic sequent has even length";
        return c;
    }
    if (as.size() == 2 && !same_orbit(as[0], as[1])) {
        c.reason = R::OrbitMismatch;
        c.detail = "the two formulas lie in different orbits";
        return c;
    }
    if (as.size() == 4 && c.letter_count % 2 == 1) {
        const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& p : pairings)
            if (same_orbit(as[p[0]], as[p[1]]) && same_orbit(as[p[2]], as[p[3]]))
                return std::nullopt;
        c.reason = R::NotAxiomaticUpToReconstruction;
        c.euler_parity = true;
        c.detail = "an axiom with 4 cells has 6 edges and chi + 2 vertices, an even letter count, but there are " +
                   std::to_string(c.letter_count) + " letters and no split into two orbit pairs";
        return c;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- search

namespace detail {

// Orbit-minimal index patterns of six distinct sorted letters.
inline const std::vector<std::array<int, 6>>& orbit_patterns()
{
    static const std::vector<std::array<int, 6>> pats = [] {
        std::set<Atom> seen;
        std::array<int, 6> p{0, 1, 2, 3, 4, 5};
        do {
            Atom a;
            for (int i = 0; i < 6; ++i)
                a[i] = std::string(1, static_cast<char>('0' + p[i]));
            seen.insert(orbit_min(a));
        } while (std::next_permutation(p.begin(), p.end()));
        std::vector<std::array<int, 6>> out;
        for (const auto& a : seen) {
            std::array<int, 6> q;
            for (int i = 0; i < 6; ++i)
                q[i] = a[i][0] - '0';
            out.push_back(q);
        }
        return out;
    }();
    return pats;
}

// The orbit members of a with vertices in increasing order, one per choice of transversal.
inline std::vector<Atom> sorted_transversals(const Atom& a)
{
    std::vector<Atom> out;
    for (const auto& y : orbit(a))
        if (y[0] < y[1] && y[1] < y[2])
            out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Atom> canonical_atoms(const std::vector<Atom>& as)
{
    std::vector<Atom> c;
    for (const auto& a : as)
        c.push_back(orbit_min(a));
    std::sort(c.begin(), c.end());
    return c;
}

inline std::set<Letter> atom_letters(const std::vector<Atom>& as)
{
    std::set<Letter> out;
    for (const auto& a : as)
        out.insert(a.begin(), a.end());
    return out;
}

class Search {
public:
    enum class St { Yes, No, Unknown };
    struct Entry {
        St st = St::No;
        DerivPtr d;
    };

    explicit Search(Budget b) : b_(b) {}

    SearchTrace trace() const
    {
        auto t = trace_;
        t.sequents = atomic_memo_.size() + full_memo_.size();
        return t;
    }

    // Derivation of exactly s on Yes.
    Entry full(const Sequent& s, int depth)
    {
        if (s.is_atomic())
            return atomic_actual(s, depth);
        auto key = s.text();
        if (auto it = full_memo_.find(key); it != full_memo_.end())
            return it->second;
        if (auto e = guard(key, depth))
            return *e;
        Entry res{St::No, nullptr};
        bool unknown = false;
        std::set<std::string> tried;
        for (const auto& chi : s.formulas()) {
            if (chi.is_atomic() || !tried.insert(chi.text()).second)
                continue;
            auto ctx = *s.without(chi);
            if (chi.kind() == Formula::Kind::Diskon) {
                auto p1 = ctx.with(chi.left()), p2 = ctx.with(chi.right());
                if (!viable(p1) || !viable(p2))
                    continue;
                auto e1 = full(p1, depth + 1);
                if (e1.st == St::No)
                    continue;
                auto e2 = full(p2, depth + 1);
                if (e1.st == St::Yes && e2.st == St::Yes) {
                    res = {St::Yes, make_diskon(e1.d, e2.d, chi.left(), chi.right())};
                    break;
                }
                unknown |= e1.st == St::Unknown || e2.st == St::Unknown;
            } else {
                const auto& fs = ctx.formulas();
                std::set<std::string> seen;
                for (std::size_t mask = 0; mask < (std::size_t{1} << fs.size()) && res.st != St::Yes; ++mask) {
                    std::vector<Formula> g1, g2;
                    for (std::size_t i = 0; i < fs.size(); ++i)
                        (mask >> i & 1 ? g1 : g2).push_back(fs[i]);
                    auto p1 = Sequent(g1).with(chi.left()), p2 = Sequent(g2).with(chi.right());
                    if (!seen.insert(p1.text() + "|" + p2.text()).second || !viable(p1) || !viable(p2))
                        continue;
                    auto e1 = full(p1, depth + 1);
                    if (e1.st == St::No)
                        continue;
                    auto e2 = full(p2, depth + 1);
                    if (e1.st == St::Yes && e2.st == St::Yes)
                        res = {St::Yes, make_equiv(e1.d, e2.d, chi.left(), chi.right())};
                    else
                        unknown |= e1.st == St::Unknown || e2.st == St::Unknown;
                }
            }
            if (res.st == St::Yes)
                break;
        }
        if (res.st != St::Yes && unknown)
            res.st = St::Unknown;
        full_memo_[key] = res;
        return res;
    }

    Entry atomic_actual(const Sequent& s, int depth)
    {
        auto as = s.atoms();
        auto e = atomic(canonical_atoms(as), depth);
        if (e.st != St::Yes)
            return e;
        auto d = e.d;
        for (const auto& a : as)
            d = orbit_replace(d, orbit_min(a), a);
        return {St::Yes, d};
    }

    // canon: sorted orbit minima. Derivation of exactly canon on Yes.
    Entry atomic(const std::vector<Atom>& canon, int depth)
    {
        if (plainly_underivable(canon))
            return {St::No, nullptr};
        auto key = Sequent::of_atoms(canon).text();
        if (auto it = atomic_memo_.find(key); it != atomic_memo_.end())
            return it->second;
        if (auto e = guard(key, depth))
            return *e;
        Entry res = atomic_uncached(canon, depth);
        atomic_memo_[key] = res;
        return res;
    }

private:
    Budget b_;
    SearchTrace trace_;
    std::map<std::string, Entry> atomic_memo_, full_memo_;

    static bool viable(const Sequent& s) { return s.size() >= 2 && letters_shared(s); }

    // Four formulas admit no cut, so they are two orbit pairs or a 4-cell sphere,
    // which has four vertices and six edges.
    static bool plainly_underivable(const std::vector<Atom>& canon)
    {
        if (canon.size() % 2 == 1)
            return true;
        if (canon.size() != 4 || (canon[0] == canon[1] && canon[2] == canon[3]))
            return false;
        return atom_letters(canon).size() != 10;
    }

    std::optional<Entry> guard(const std::string& key, int depth)
    {
        trace_.deepest = std::max(trace_.deepest, depth);
        if (depth > b_.max_rounds) {
            trace_.limits.push_back("rounds: " + key);
            return Entry{St::Unknown, nullptr};
        }
        if (atomic_memo_.size() + full_memo_.size() >= b_.max_seqs) {
            trace_.limits.push_back("seqs: " + key);
            return Entry{St::Unknown, nullptr};
        }
        return std::nullopt;
    }

    Entry atomic_uncached(const std::vector<Atom>& canon, int depth)
    {
        const std::size_t n = canon.size();
        if (n == 0 || n % 2 == 1)
            return {St::No, nullptr};
        if (n == 2)
            return canon[0] == canon[1] ? Entry{St::Yes, schema_axiom(canon[0], canon[0])} : Entry{St::No, nullptr};
        auto seq = Sequent::of_atoms(canon);
        if (!letters_shared(seq))
            return {St::No, nullptr};

        bool unknown = false;
        // An M-complex with n cells has 2n + chi letters, chi even.
        if (atom_letters(canon).size() % 2 == 0) {
            if (static_cast<int>(n) <= b_.max_cells) {
                if (auto d = axiom_search(canon))
                    return {St::Yes, d};
            } else {
                trace_.limits.push_back("cells: " + seq.text());
                unknown = true;
            }
        }

        for (std::size_t mask = 1; mask < (std::size_t{1} << n); mask += 2) {
            std::vector<Atom> g1, g2;
            for (std::size_t i = 0; i < n; ++i)
                (mask >> i & 1 ? g1 : g2).push_back(canon[i]);
            const std::size_t k = g1.size();
            if (k == n)
                continue;
            if (k % 2 == 0) {
                if (k < 2 || k > n - 2)
                    continue;
                if (!letters_shared(Sequent::of_atoms(g1)) || !letters_shared(Sequent::of_atoms(g2)))
                    continue;
                auto e1 = atomic(g1, depth + 1);
                if (e1.st == St::No)
                    continue;
                auto e2 = atomic(g2, depth + 1);
                if (e1.st == St::Yes && e2.st == St::Yes)
                    return {St::Yes, make_ecut(e1.d, e2.d)};
                unknown |= e1.st == St::Unknown || e2.st == St::Unknown;
                continue;
            }
            if (k < 3 || k + 3 > n)
                continue;
            auto r = cut_split(g1, g2, depth, unknown);
            if (r)
                return {St::Yes, r};
        }
        return {unknown ? St::Unknown : St::No, nullptr};
    }

    DerivPtr cut_split(const std::vector<Atom>& g1, const std::vector<Atom>& g2, int depth, bool& unknown)
    {
        auto count_in = [](const std::vector<Atom>& g) {
            std::map<Letter, int> c;
            for (const auto& a : g)
                for (const auto& l : a)
                    ++c[l];
            return c;
        };
        auto c1 = count_in(g1), c2 = count_in(g2);
        if (!three_faces(g1, c1) || !three_faces(g2, c2))
            return nullptr;
        std::set<Letter> must, inter;
        for (const auto& [l, m] : c1) {
            if (c2.count(l))
                inter.insert(l);
            if (m == 1)
                must.insert(l);
        }
        for (const auto& [l, m] : c2)
            if (m == 1)
                must.insert(l);
        if (must.size() > 6 || inter.size() < 6)
            return nullptr;
        for (const auto& l : must)
            if (!inter.count(l))
                return nullptr;
        std::vector<Letter> optional_letters;
        for (const auto& l : inter)
            if (!must.count(l))
                optional_letters.push_back(l);
        const std::size_t extra = 6 - must.size();
        if (optional_letters.size() < extra)
            return nullptr;

        std::vector<bool> pick(optional_letters.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(extra), true);
        do {
            std::vector<Letter> chosen(must.begin(), must.end());
            for (std::size_t i = 0; i < pick.size(); ++i)
                if (pick[i])
                    chosen.push_back(optional_letters[i]);
            std::sort(chosen.begin(), chosen.end());
            for (const auto& pat : orbit_patterns()) {
                Atom phi;
                for (int i = 0; i < 6; ++i)
                    phi[i] = chosen[pat[i]];
                auto p1 = g1, p2 = g2;
                p1.push_back(phi);
                p2.push_back(phi);
                std::sort(p1.begin(), p1.end());
                std::sort(p2.begin(), p2.end());
                if (!letters_shared(Sequent::of_atoms(p1)) || !letters_shared(Sequent::of_atoms(p2)))
                    continue;
                auto e1 = atomic(p1, depth + 1);
                if (e1.st == St::No)
                    continue;
                auto e2 = atomic(p2, depth + 1);
                if (e1.st == St::Yes && e2.st == St::Yes)
                    return make_cut(e1.d, e2.d, Formula::atomic(phi));
                unknown |= e1.st == St::Unknown || e2.st == St::Unknown;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return nullptr;
    }

    // A side of three becomes a four-formula premise. Three cells of a 4-cell
    // sphere already carry all ten of its letters.
    static bool three_faces(const std::vector<Atom>& g, const std::map<Letter, int>& c)
    {
        if (g.size() != 3 || g[0] == g[1] || g[1] == g[2] || g[0] == g[2])
            return true;
        return c.size() == 10;
    }

    // Some choice of orbit representatives reconstructs to an M-complex.
    DerivPtr axiom_search(const std::vector<Atom>& canon)
    {
        std::vector<std::vector<Atom>> choices;
        for (const auto& a : canon)
            choices.push_back(sorted_transversals(a));
        std::vector<Atom> reps;
        std::map<Letter, int> role; // 0 vertex, 1.. edge uses
        std::map<Letter, std::pair<Letter, Letter>> ends;
        DerivPtr found;
        std::function<void(std::size_t)> go = [&](std::size_t i) {
            if (found)
                return;
            if (i == canon.size()) {
                for (const auto& [l, r] : role)
                    if (r == 1)
                        return;
                auto k = reconstruct_complex(reps);
                if (!k || !std::holds_alternative<MComplexCert>(validate_mcomplex(*k)))
                    return;
                auto d = make_axiom(Sequent::of_atoms(reps), "complex:reconstructed");
                for (std::size_t j = 0; j < reps.size(); ++j)
                    d = orbit_replace(d, reps[j], canon[j]);
                found = d;
                return;
            }
            for (const auto& y : choices[i]) {
                auto role0 = role;
                auto ends0 = ends;
                bool ok = true;
                for (int p = 0; p < 3 && ok; ++p) {
                    auto [it, fresh] = role.emplace(y[p], 0);
                    ok = fresh || it->second == 0;
                }
                const std::pair<Letter, Letter> inc[3] = {{y[2], y[1]}, {y[2], y[0]}, {y[1], y[0]}};
                for (int p = 0; p < 3 && ok; ++p) {
                    auto [it, fresh] = role.emplace(y[3 + p], 1);
                    if (!fresh) {
                        ok = it->second == 1; // a third use would exceed edge degree two
                        ++it->second;
                    }
                    auto [et, efresh] = ends.emplace(y[3 + p], inc[p]);
                    ok = ok && (efresh || et->second == inc[p]);
                }
                if (ok) {
                    reps.push_back(y);
                    go(i + 1);
                    reps.pop_back();
                }
                role = std::move(role0);
                ends = std::move(ends0);
                if (found)
                    return;
            }
        };
        go(0);
        return found;
    }
};

inline Decision finish(Search& search, const Sequent& s, Search::Entry e)
{
    using R = RefutationCertificate::Reason;
    Decision out;
    out.trace = search.trace();
    if (e.st == Search::St::Yes) {
        out.status = Decision::Status::Derivable;
        out.derivation = e.d;
        if (!(e.d->conclusion == s))
            throw Error(Errc::InternalInconsistency, "derived " + e.d->conclusion.text() + " for " + s.text());
        return out;
    }
    if (e.st == Search::St::Unknown) {
        out.status = Decision::Status::ResourceExceeded;
        return out;
    }
    out.status = Decision::Status::Underivable;
    RefutationCertificate c;
    c.formula_count = s.size();
    c.letter_count = letters(s).size();
    if (s.is_atomic() && c.letter_count % 2 == 1) {
        c.reason = R::NotAxiomaticUpToReconstruction;
        c.euler_parity = true;
        c.detail = std::to_string(c.letter_count) + " letters over " + std::to_string(c.formula_count) +
                   " formulas: no reconstruction has even Euler characteristic, and every split into cut "
                   "premises was refuted";
    } else {
        c.reason = R::SaturationExhausted;
        c.detail = "no axiom, cut or introduction reaches the sequent within the subformula domain";
    }
    out.certificate = c;
    return out;
}

} // namespace detail

inline Decision decide_atomic(const Sequent& s, Budget b = {})
{
    if (!s.is_atomic())
        throw Error(Errc::NotAtomic, s.text());
    if (auto c = quick_refute(s)) {
        Decision d;
        d.status = Decision::Status::Underivable;
        d.certificate = c;
        return d;
    }
    detail::Search search(b);
    auto e = search.atomic_actual(s, 0);
    return detail::finish(search, s, e);
}

inline Decision decide(const Sequent& s, Budget b = {})
{
    if (s.is_atomic())
        return decide_atomic(s, b);
    detail::Search search(b);
    auto e = search.full(s, 0);
    return detail::finish(search, s, e);
}

} // namespace menelaus
