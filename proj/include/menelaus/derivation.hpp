#pragma once

#include "menelaus/logic.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace menelaus {

enum class Rule { Axiom, Cut, ECut, Diskon, Equiv };

inline std::string_view rule_name(Rule r)
{
    switch (r) {
    case Rule::Axiom: return "axiom";
    case Rule::Cut: return "cut";
    case Rule::ECut: return "ecut";
    case Rule::Diskon: return "diskon";
    case Rule::Equiv: return "equiv";
    }
    return "?";
}

struct Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

struct Derivation {
    Rule rule = Rule::Axiom;
    Sequent conclusion;
    std::vector<DerivPtr> premises;
    Formula cut;              // Cut
    Formula principal;        // Diskon, Equiv: the introduced formula
    std::string axiom_source; // Axiom: "complex:<name>" or "schema:id|perm|switch"

    bool is_intro() const { return rule == Rule::Diskon || rule == Rule::Equiv; }
    bool is_cut() const { return rule == Rule::Cut || rule == Rule::ECut; }
};

inline DerivPtr make_axiom(Sequent s, std::string source)
{
    auto d = std::make_shared<Derivation>();
    d->rule = Rule::Axiom;
    d->conclusion = std::move(s);
    d->axiom_source = std::move(source);
    return d;
}

inline DerivPtr make_cut(DerivPtr l, DerivPtr r, const Formula& phi)
{
    auto a = l->conclusion.without(phi);
    auto b = r->conclusion.without(phi);
    if (!a || !b)
        throw Error(Errc::InternalInconsistency, "cut formula " + phi.text() + " missing from a premise");
    auto d = std::make_shared<Derivation>();
    d->rule = Rule::Cut;
    d->conclusion = a->merged(*b);
    d->premises = {std::move(l), std::move(r)};
    d->cut = phi;
    return d;
}

inline DerivPtr make_ecut(DerivPtr l, DerivPtr r)
{
    auto d = std::make_shared<Derivation>();
    d->rule = Rule::ECut;
    d->conclusion = l->conclusion.merged(r->conclusion);
    d->premises = {std::move(l), std::move(r)};
    return d;
}

// premises |- G,phi and |- G,psi give |- G,(phi * psi)
inline DerivPtr make_diskon(DerivPtr l, DerivPtr r, const Formula& phi, const Formula& psi)
{
    auto g = l->conclusion.without(phi);
    if (!g)
        throw Error(Errc::InternalInconsistency, "diskon: " + phi.text() + " missing");
    auto h = r->conclusion.without(psi);
    if (!h || !(*h == *g))
        throw Error(Errc::InternalInconsistency, "diskon: premises do not share a context");
    auto d = std::make_shared<Derivation>();
    d->rule = Rule::Diskon;
    d->principal = Formula::diskon(phi, psi);
    d->conclusion = g->with(d->principal);
    d->premises = {std::move(l), std::move(r)};
    return d;
}

// premises |- G,phi and |- D,psi give |- G,D,(phi <-> psi)
inline DerivPtr make_equiv(DerivPtr l, DerivPtr r, const Formula& phi, const Formula& psi)
{
    auto g = l->conclusion.without(phi);
    auto h = r->conclusion.without(psi);
    if (!g || !h)
        throw Error(Errc::InternalInconsistency, "equiv: principal subformula missing");
    auto d = std::make_shared<Derivation>();
    d->rule = Rule::Equiv;
    d->principal = Formula::equiv(phi, psi);
    d->conclusion = g->merged(*h).with(d->principal);
    d->premises = {std::move(l), std::move(r)};
    return d;
}

// Same rule and payload over new premises; the conclusion is recomputed.
inline DerivPtr rebuild(const DerivPtr& d, std::vector<DerivPtr> ps)
{
    switch (d->rule) {
    case Rule::Axiom: return d;
    case Rule::Cut: return make_cut(ps[0], ps[1], d->cut);
    case Rule::ECut: return make_ecut(ps[0], ps[1]);
    case Rule::Diskon: return make_diskon(ps[0], ps[1], d->principal.left(), d->principal.right());
    case Rule::Equiv: return make_equiv(ps[0], ps[1], d->principal.left(), d->principal.right());
    }
    return d;
}

struct Verdict {
    bool ok = true;
    std::string path; // premise indices from the root, e.g. "0.1"
    std::string reason;
};

namespace detail {

inline std::string check_axiom(const Derivation& d)
{
    if (!d.conclusion.is_atomic())
        return "axiom with a non-atomic formula";
    auto as = d.conclusion.atoms();
    const auto& src = d.axiom_source;
    if (src.rfind("schema:", 0) == 0) {
        auto si = schema_instance(as);
        if (!si)
            return "not an instance of an axiom schema";
        if (std::string(schema_name(si->kind)) != src.substr(7))
            return "schema mismatch: expected " + std::string(schema_name(si->kind));
        return {};
    }
    if (src.rfind("complex:", 0) == 0) {
        auto k = reconstruct_complex(as);
        if (!k)
            return "sextuples do not determine a Delta-complex";
        auto r = validate_mcomplex(*k);
        if (auto* v = std::get_if<Violation>(&r))
            return "reconstructed complex fails: " + std::string(axiom_name(v->axiom));
        return {};
    }
    return "unknown axiom source '" + src + "'";
}

inline std::string check_node(const Derivation& d)
{
    auto need = [&](std::size_t n) { return d.premises.size() == n; };
    switch (d.rule) {
    case Rule::Axiom:
        if (!need(0))
            return "axiom with premises";
        return check_axiom(d);
    case Rule::Cut: {
        if (!need(2) || !d.cut.valid())
            return "malformed cut";
        auto a = d.premises[0]->conclusion.without(d.cut);
        auto b = d.premises[1]->conclusion.without(d.cut);
        if (!a || !b)
            return "cut formula not in both premises";
        if (!(a->merged(*b) == d.conclusion))
            return "conclusion is not the merge of the premises minus the cut formula";
        return {};
    }
    case Rule::ECut:
        if (!need(2))
            return "malformed empty cut";
        if (!(d.premises[0]->conclusion.merged(d.premises[1]->conclusion) == d.conclusion))
            return "conclusion is not the merge of the premises";
        return {};
    case Rule::Diskon: {
        if (!need(2) || !d.principal.valid() || d.principal.kind() != Formula::Kind::Diskon)
            return "malformed diskon introduction";
        auto g = d.conclusion.without(d.principal);
        if (!g)
            return "principal formula not in conclusion";
        auto g1 = d.premises[0]->conclusion.without(d.principal.left());
        auto g2 = d.premises[1]->conclusion.without(d.principal.right());
        if (!g1 || !g2)
            return "premises lack the principal subformulas";
        if (!(*g1 == *g2))
            return "premises have different contexts";
        if (!(*g1 == *g))
            return "context differs from the conclusion";
        return {};
    }
    case Rule::Equiv: {
        if (!need(2) || !d.principal.valid() || d.principal.kind() != Formula::Kind::Equiv)
            return "malformed equiv introduction";
        auto g = d.conclusion.without(d.principal);
        if (!g)
            return "principal formula not in conclusion";
        auto g1 = d.premises[0]->conclusion.without(d.principal.left());
        auto g2 = d.premises[1]->conclusion.without(d.principal.right());
        if (!g1 || !g2)
            return "premises lack the principal subformulas";
        if (!(g1->merged(*g2) == *g))
            return "contexts do not add up to the conclusion";
        return {};
    }
    }
    return "unknown rule";
}

} // namespace detail

inline Verdict check_derivation(const DerivPtr& d)
{
    std::function<Verdict(const DerivPtr&, const std::string&)> go = [&](const DerivPtr& n, const std::string& path) {
        for (std::size_t i = 0; i < n->premises.size(); ++i) {
            auto v = go(n->premises[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i));
            if (!v.ok)
                return v;
        }
        auto why = detail::check_node(*n);
        if (!why.empty())
            return Verdict{false, path, std::string(rule_name(n->rule)) + ": " + why};
        return Verdict{};
    };
    return go(d, "");
}

inline std::size_t derivation_size(const DerivPtr& d)
{
    std::size_t n = 1;
    for (const auto& p : d->premises)
        n += derivation_size(p);
    return n;
}

inline std::size_t derivation_depth(const DerivPtr& d)
{
    std::size_t n = 0;
    for (const auto& p : d->premises)
        n = std::max(n, derivation_depth(p));
    return n + 1;
}

inline void for_each_node(const DerivPtr& d, const std::function<void(const DerivPtr&)>& f)
{
    for (const auto& p : d->premises)
        for_each_node(p, f);
    f(d);
}

inline std::size_t intro_count(const DerivPtr& d)
{
    std::size_t n = 0;
    for_each_node(d, [&](const DerivPtr& x) { n += x->is_intro() ? 1 : 0; });
    return n;
}

// No introduction occurs above a cut.
inline bool is_normal(const DerivPtr& d)
{
    bool ok = true;
    for_each_node(d, [&](const DerivPtr& x) {
        if (x->is_cut())
            for (const auto& p : x->premises)
                if (intro_count(p))
                    ok = false;
    });
    return ok;
}

// Every letter of each formula occurs in some other formula of the sequent.
inline bool letters_shared(const Sequent& s)
{
    const auto& fs = s.formulas();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::set<Letter> mine, rest;
        fs[i].collect_letters(mine);
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (j != i)
                fs[j].collect_letters(rest);
        for (const auto& l : mine)
            if (!rest.count(l))
                return false;
    }
    return true;
}

} // namespace menelaus
