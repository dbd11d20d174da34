#pragma once

#include "menelaus/derivation.hpp"

#include <tuple>
#include <vector>

namespace menelaus {

struct CutMeasure {
    int degree = 0;
    int rank = 0;
    auto operator<=>(const CutMeasure&) const = default;
};

// Number of sequents through which the traced occurrence of phi in the conclusion
// of d is inherited, stopping where it is introduced or comes from an axiom.
inline int occurrence_rank(const DerivPtr& d, const Formula& phi)
{
    switch (d->rule) {
    case Rule::Axiom: return 1;
    case Rule::Diskon:
        if (d->principal == phi)
            return 1;
        return 1 + occurrence_rank(d->premises[0], phi) + occurrence_rank(d->premises[1], phi);
    case Rule::Equiv: {
        if (d->principal == phi)
            return 1;
        auto g = d->premises[0]->conclusion.without(d->principal.left());
        return 1 + occurrence_rank(d->premises[g && g->contains(phi) ? 0 : 1], phi);
    }
    case Rule::Cut: {
        auto g = d->premises[0]->conclusion.without(d->cut);
        return 1 + occurrence_rank(d->premises[g && g->contains(phi) ? 0 : 1], phi);
    }
    case Rule::ECut: return 1 + occurrence_rank(d->premises[d->premises[0]->conclusion.contains(phi) ? 0 : 1], phi);
    }
    return 1;
}

inline CutMeasure cut_measure(const DerivPtr& d)
{
    return {d->cut.degree(), occurrence_rank(d->premises[0], d->cut) + occurrence_rank(d->premises[1], d->cut)};
}

struct RewriteStep {
    Rule rule;              // Cut or ECut being rewritten
    CutMeasure before;      // cuts: (degree, rank); empty cuts: (0, introductions above)
    std::vector<CutMeasure> after; // measures of the newly created nodes of the same kind
};

namespace detail {

inline bool offending(const DerivPtr& d)
{
    if (!d->is_cut())
        return false;
    return intro_count(d->premises[0]) + intro_count(d->premises[1]) > 0;
}

inline CutMeasure ecut_measure(const DerivPtr& d) { return {0, static_cast<int>(intro_count(d->premises[0]) + intro_count(d->premises[1]))}; }

class Normalizer {
public:
    std::vector<RewriteStep> steps;

    DerivPtr norm(const DerivPtr& d)
    {
        if (d->premises.empty())
            return d;
        std::vector<DerivPtr> ps;
        bool same = true;
        for (const auto& p : d->premises) {
            ps.push_back(norm(p));
            same = same && ps.back() == p;
        }
        return fix(same ? d : rebuild(d, std::move(ps)));
    }

private:
    // premises of d are normal
    DerivPtr fix(const DerivPtr& d)
    {
        if (!offending(d))
            return d;
        DerivPtr r = d->rule == Rule::ECut ? rewrite_ecut(d) : rewrite_cut(d);
        std::vector<DerivPtr> ps;
        for (const auto& p : r->premises)
            ps.push_back(fix(p));
        r = rebuild(r, std::move(ps));
        return r->is_cut() ? fix(r) : r;
    }

    DerivPtr rewrite_ecut(const DerivPtr& d)
    {
        RewriteStep st{Rule::ECut, ecut_measure(d), {}};
        const auto& l = d->premises[0];
        const auto& r = d->premises[1];
        DerivPtr out;
        std::vector<DerivPtr> fresh;
        if (l->is_intro()) {
            if (l->rule == Rule::Diskon) {
                fresh = {make_ecut(l->premises[0], r), make_ecut(l->premises[1], r)};
                out = make_diskon(fresh[0], fresh[1], l->principal.left(), l->principal.right());
            } else {
                fresh = {make_ecut(l->premises[0], r)};
                out = make_equiv(fresh[0], l->premises[1], l->principal.left(), l->principal.right());
            }
        } else {
            if (r->rule == Rule::Diskon) {
                fresh = {make_ecut(l, r->premises[0]), make_ecut(l, r->premises[1])};
                out = make_diskon(fresh[0], fresh[1], r->principal.left(), r->principal.right());
            } else {
                fresh = {make_ecut(l, r->premises[0])};
                out = make_equiv(fresh[0], r->premises[1], r->principal.left(), r->principal.right());
            }
        }
        for (const auto& f : fresh)
            st.after.push_back(ecut_measure(f));
        record(std::move(st));
        return out;
    }

    DerivPtr rewrite_cut(const DerivPtr& d)
    {
        RewriteStep st{Rule::Cut, cut_measure(d), {}};
        const auto& l = d->premises[0];
        const auto& r = d->premises[1];
        const auto& phi = d->cut;
        DerivPtr out;
        std::vector<DerivPtr> fresh;
        auto push_into = [&](const DerivPtr& side, bool left) {
            auto cut_with = [&](const DerivPtr& p) { return left ? make_cut(p, r, phi) : make_cut(l, p, phi); };
            if (side->rule == Rule::Diskon) {
                fresh = {cut_with(side->premises[0]), cut_with(side->premises[1])};
                return make_diskon(fresh[0], fresh[1], side->principal.left(), side->principal.right());
            }
            auto g = side->premises[0]->conclusion.without(side->principal.left());
            if (g && g->contains(phi)) {
                fresh = {cut_with(side->premises[0])};
                return make_equiv(fresh[0], side->premises[1], side->principal.left(), side->principal.right());
            }
            fresh = {cut_with(side->premises[1])};
            return make_equiv(side->premises[0], fresh[0], side->principal.left(), side->principal.right());
        };
        if (l->is_intro() && !(l->principal == phi)) {
            out = push_into(l, true);
        } else if (r->is_intro() && !(r->principal == phi)) {
            out = push_into(r, false);
        } else if (l->is_intro() && r->is_intro()) {
            // rank 2: phi is principal on both sides
            if (phi.kind() == Formula::Kind::Diskon) {
                fresh = {make_cut(l->premises[0], r->premises[0], phi.left())};
                out = fresh[0];
            } else {
                fresh = {make_cut(l->premises[0], r->premises[0], phi.left()),
                         make_cut(l->premises[1], r->premises[1], phi.right())};
                out = make_ecut(fresh[0], fresh[1]);
            }
        } else {
            throw Error(Errc::InternalInconsistency, "offending cut with no applicable reduction");
        }
        for (const auto& f : fresh)
            st.after.push_back(cut_measure(f));
        record(std::move(st));
        return out;
    }

    void record(RewriteStep st)
    {
        for (const auto& a : st.after)
            if (!(a < st.before))
                throw Error(Errc::InternalInconsistency, "normalization measure did not decrease");
        steps.push_back(std::move(st));
    }
};

} // namespace detail

struct NormalizeResult {
    DerivPtr derivation;
    std::vector<RewriteStep> steps;
};

inline NormalizeResult normalize_with_log(const DerivPtr& d)
{
    detail::Normalizer n;
    auto out = n.norm(d);
    return {out, std::move(n.steps)};
}

inline DerivPtr normalize(const DerivPtr& d) { return normalize_with_log(d).derivation; }

} // namespace menelaus
