#pragma once

#include "menelaus/complex.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace menelaus {

using Letter = std::string;
using Atom = std::array<Letter, 6>;

inline std::string atom_text(const Atom& a)
{
    std::string s = "(";
    for (int i = 0; i < 6; ++i) {
        if (i)
            s += ",";
        s += a[i];
    }
    return s + ")";
}

inline Atom make_atomic(const std::array<Letter, 6>& letters)
{
    for (int i = 0; i < 6; ++i) {
        if (letters[i].empty())
            throw Error(Errc::ParseError, "empty letter at position " + std::to_string(i + 1));
        for (int j = i + 1; j < 6; ++j)
            if (letters[i] == letters[j])
                throw Error(Errc::RepeatedLetter, "positions " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                      " of " + atom_text(letters));
    }
    return letters;
}

// ---------------------------------------------------------------- the group G

using Perm = std::array<int, 6>;

inline constexpr Perm perm_id{0, 1, 2, 3, 4, 5};
inline constexpr Perm perm_s{1, 2, 0, 4, 5, 3}; // (123)(456)
inline constexpr Perm perm_t{0, 5, 4, 3, 2, 1}; // (26)(35)

inline Atom apply_group(const Perm& g, const Atom& a)
{
    Atom r;
    for (int i = 0; i < 6; ++i)
        r[i] = a[g[i]];
    return r;
}

// apply_group(compose(g, h), a) == apply_group(g, apply_group(h, a))
inline Perm compose(const Perm& g, const Perm& h)
{
    Perm r;
    for (int i = 0; i < 6; ++i)
        r[i] = h[g[i]];
    return r;
}

struct GroupTable {
    std::vector<Perm> elements;             // BFS order from the identity
    std::map<Perm, std::string> words;      // generator word, applied left to right
};

inline const GroupTable& group()
{
    static const GroupTable table = [] {
        GroupTable t;
        t.elements.push_back(perm_id);
        t.words[perm_id] = "";
        for (std::size_t i = 0; i < t.elements.size(); ++i) {
            auto p = t.elements[i];
            for (auto [c, x] : {std::pair{'s', perm_s}, std::pair{'t', perm_t}}) {
                auto q = compose(x, p);
                if (!t.words.count(q)) {
                    t.words[q] = t.words[p] + c;
                    t.elements.push_back(q);
                }
            }
        }
        return t;
    }();
    return table;
}

inline bool in_group(const Perm& p) { return group().words.count(p) != 0; }

inline std::vector<Atom> orbit(const Atom& a)
{
    std::set<Atom> s;
    for (const auto& g : group().elements)
        s.insert(apply_group(g, a));
    return {s.begin(), s.end()};
}

inline Atom orbit_min(const Atom& a)
{
    Atom best = a;
    for (const auto& g : group().elements)
        best = std::min(best, apply_group(g, a));
    return best;
}

inline std::optional<Perm> group_element_between(const Atom& a, const Atom& b)
{
    for (const auto& g : group().elements)
        if (apply_group(g, a) == b)
            return g;
    return std::nullopt;
}

inline bool same_orbit(const Atom& a, const Atom& b) { return group_element_between(a, b).has_value(); }

// ---------------------------------------------------------------- formulas

class Formula {
public:
    enum class Kind { Atomic, Diskon, Equiv };

    Formula() = default;

    static Formula atomic(const Atom& a);
    static Formula diskon(const Formula& l, const Formula& r) { return binary(Kind::Diskon, l, r); }
    static Formula equiv(const Formula& l, const Formula& r) { return binary(Kind::Equiv, l, r); }

    Kind kind() const;
    bool is_atomic() const { return kind() == Kind::Atomic; }
    const Atom& atom() const;
    const Formula& left() const;
    const Formula& right() const;
    const std::string& text() const;
    int degree() const;
    bool valid() const { return static_cast<bool>(n_); }

    void collect_letters(std::set<Letter>& out) const
    {
        if (is_atomic())
            out.insert(atom().begin(), atom().end());
        else {
            left().collect_letters(out);
            right().collect_letters(out);
        }
    }

    bool operator==(const Formula& o) const { return n_ == o.n_ || text() == o.text(); }
    bool operator<(const Formula& o) const { return text() < o.text(); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static Formula binary(Kind k, const Formula& l, const Formula& r);
    std::shared_ptr<const Node> n_;
};

struct Formula::Node {
    Kind kind = Kind::Atomic;
    Atom atom;
    Formula l, r;
    std::string text;
    int degree = 0;
};

inline Formula Formula::atomic(const Atom& a)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atomic;
    n->atom = make_atomic(a);
    n->text = atom_text(a);
    return Formula(std::move(n));
}

inline Formula Formula::binary(Kind k, const Formula& l, const Formula& r)
{
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->l = l;
    n->r = r;
    n->text = "(" + l.text() + (k == Kind::Diskon ? " * " : " <-> ") + r.text() + ")";
    n->degree = 1 + l.degree() + r.degree();
    return Formula(std::move(n));
}

inline Formula::Kind Formula::kind() const { return n_->kind; }
inline const Atom& Formula::atom() const { return n_->atom; }
inline const Formula& Formula::left() const { return n_->l; }
inline const Formula& Formula::right() const { return n_->r; }
inline const std::string& Formula::text() const { return n_->text; }
inline int Formula::degree() const { return n_->degree; }

// ---------------------------------------------------------------- sequents

class Sequent {
public:
    Sequent() = default;
    explicit Sequent(std::vector<Formula> fs) : fs_(std::move(fs)) { std::sort(fs_.begin(), fs_.end()); }
    static Sequent of_atoms(const std::vector<Atom>& as)
    {
        std::vector<Formula> fs;
        for (const auto& a : as)
            fs.push_back(Formula::atomic(a));
        return Sequent(std::move(fs));
    }

    const std::vector<Formula>& formulas() const { return fs_; }
    std::size_t size() const { return fs_.size(); }
    bool empty() const { return fs_.empty(); }

    bool contains(const Formula& f) const { return std::binary_search(fs_.begin(), fs_.end(), f); }
    std::size_t count(const Formula& f) const
    {
        auto r = std::equal_range(fs_.begin(), fs_.end(), f);
        return static_cast<std::size_t>(r.second - r.first);
    }
    Sequent with(const Formula& f) const
    {
        Sequent s = *this;
        s.fs_.insert(std::upper_bound(s.fs_.begin(), s.fs_.end(), f), f);
        return s;
    }
    // removes one occurrence; nullopt if absent
    std::optional<Sequent> without(const Formula& f) const
    {
        auto it = std::lower_bound(fs_.begin(), fs_.end(), f);
        if (it == fs_.end() || !(*it == f))
            return std::nullopt;
        Sequent s = *this;
        s.fs_.erase(s.fs_.begin() + (it - fs_.begin()));
        return s;
    }
    Sequent merged(const Sequent& o) const
    {
        std::vector<Formula> r;
        r.reserve(fs_.size() + o.fs_.size());
        std::merge(fs_.begin(), fs_.end(), o.fs_.begin(), o.fs_.end(), std::back_inserter(r));
        Sequent s;
        s.fs_ = std::move(r);
        return s;
    }
    // multiset difference o must be contained in *this
    std::optional<Sequent> minus(const Sequent& o) const
    {
        Sequent s = *this;
        for (const auto& f : o.fs_) {
            auto r = s.without(f);
            if (!r)
                return std::nullopt;
            s = std::move(*r);
        }
        return s;
    }

    bool is_atomic() const
    {
        return std::all_of(fs_.begin(), fs_.end(), [](const Formula& f) { return f.is_atomic(); });
    }
    std::vector<Atom> atoms() const
    {
        std::vector<Atom> r;
        for (const auto& f : fs_) {
            if (!f.is_atomic())
                throw Error(Errc::NotAtomic, f.text());
            r.push_back(f.atom());
        }
        return r;
    }

    std::string text() const
    {
        std::string s = "|-";
        for (std::size_t i = 0; i < fs_.size(); ++i)
            s += (i ? ", " : " ") + fs_[i].text();
        return s;
    }

    bool operator==(const Sequent& o) const
    {
        if (fs_.size() != o.fs_.size())
            return false;
        for (std::size_t i = 0; i < fs_.size(); ++i)
            if (!(fs_[i] == o.fs_[i]))
                return false;
        return true;
    }
    bool operator<(const Sequent& o) const { return text() < o.text(); }

private:
    std::vector<Formula> fs_;
};

inline std::set<Letter> letters(const Sequent& s)
{
    std::set<Letter> out;
    for (const auto& f : s.formulas())
        f.collect_letters(out);
    return out;
}

inline std::size_t size(const Sequent& s) { return s.size(); }

// ---------------------------------------------------------------- text syntax

class Parser {
public:
    explicit Parser(std::string_view src) : s_(src) {}

    Sequent sequent()
    {
        ws();
        expect("|-");
        std::vector<Formula> fs;
        ws();
        if (p_ < s_.size()) {
            fs.push_back(formula());
            ws();
            while (p_ < s_.size() && s_[p_] == ',') {
                ++p_;
                fs.push_back(formula());
                ws();
            }
        }
        end();
        return Sequent(std::move(fs));
    }

    Formula whole_formula()
    {
        auto f = formula();
        ws();
        end();
        return f;
    }

    Formula formula()
    {
        ws();
        expect("(");
        ws();
        if (p_ < s_.size() && s_[p_] == '(') {
            auto l = formula();
            ws();
            Formula::Kind k;
            if (s_.substr(p_, 1) == "*") {
                ++p_;
                k = Formula::Kind::Diskon;
            } else if (s_.substr(p_, 3) == "<->") {
                p_ += 3;
                k = Formula::Kind::Equiv;
            } else
                fail("expected '*' or '<->'");
            auto r = formula();
            ws();
            expect(")");
            return k == Formula::Kind::Diskon ? Formula::diskon(l, r) : Formula::equiv(l, r);
        }
        std::array<Letter, 6> a;
        for (int i = 0; i < 6; ++i) {
            if (i) {
                ws();
                expect(",");
            }
            ws();
            a[i] = letter();
        }
        ws();
        expect(")");
        return Formula::atomic(a);
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(Errc::ParseError, "column " + std::to_string(p_ + 1) + ": " + what);
    }
    void ws()
    {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_])))
            ++p_;
    }
    void expect(std::string_view t)
    {
        if (s_.substr(p_, t.size()) != t)
            fail("expected '" + std::string(t) + "'");
        p_ += t.size();
    }
    void end()
    {
        if (p_ != s_.size())
            fail("trailing input");
    }
    Letter letter()
    {
        auto b = p_;
        while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_'))
            ++p_;
        if (b == p_)
            fail("expected a letter");
        return Letter(s_.substr(b, p_ - b));
    }

    std::string_view s_;
    std::size_t p_ = 0;
};

inline Sequent parse_sequent(std::string_view s) { return Parser(s).sequent(); }
inline Formula parse_formula(std::string_view s) { return Parser(s).whole_formula(); }

// ---------------------------------------------------------------- nu and axioms

inline Atom nu(const DeltaComplex& k, const std::string& x)
{
    const auto& t = k.triangle(x);
    auto v = k.tri_vertices(t);
    Atom a{v[0], v[1], v[2], t.d0, t.d1, t.d2};
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            if (a[i] == a[j])
                throw Error(Errc::NameCollision, "2-cell '" + x + "': letter '" + a[i] + "' is both a vertex and an edge");
    return make_atomic(a);
}

inline Atom nu(const MComplexCert& c, const std::string& x) { return nu(c.complex, x); }

inline Sequent axiomatic_sequent(const MComplexCert& c)
{
    std::vector<Atom> as;
    for (const auto& t : c.complex.triangles())
        as.push_back(nu(c.complex, t.id));
    return Sequent::of_atoms(as);
}

struct SchemaInstance {
    enum class Kind { Identity, Perm, Switch } kind;
};

inline std::string_view schema_name(SchemaInstance::Kind k)
{
    switch (k) {
    case SchemaInstance::Kind::Identity: return "id";
    case SchemaInstance::Kind::Perm: return "perm";
    case SchemaInstance::Kind::Switch: return "switch";
    }
    return "?";
}

// Complex whose 2-cells are the formula occurrences, or nullopt when the incidences
// forced by the sextuples are inconsistent.
inline std::optional<DeltaComplex> reconstruct_complex(const std::vector<Atom>& as,
                                                       const std::vector<std::string>& cell_names = {})
{
    ComplexSpec s;
    std::map<Letter, int> role; // 0 vertex, 1 edge
    std::map<Letter, std::pair<Letter, Letter>> ends;
    for (const auto& a : as) {
        for (int i = 0; i < 6; ++i) {
            int r = i < 3 ? 0 : 1;
            auto [it, fresh] = role.emplace(a[i], r);
            if (!fresh && it->second != r)
                return std::nullopt;
            if (fresh && r == 0)
                s.v.push_back(a[i]);
        }
        std::array<std::pair<Letter, Letter>, 3> inc{std::pair{a[2], a[1]}, std::pair{a[2], a[0]},
                                                     std::pair{a[1], a[0]}};
        for (int i = 0; i < 3; ++i) {
            auto [it, fresh] = ends.emplace(a[3 + i], inc[i]);
            if (!fresh && it->second != inc[i])
                return std::nullopt;
            if (fresh)
                s.e.push_back({a[3 + i], inc[i].first, inc[i].second});
        }
    }
    for (std::size_t i = 0; i < as.size(); ++i)
        s.t.push_back({i < cell_names.size() ? cell_names[i] : "x" + std::to_string(i + 1), as[i][3], as[i][4],
                       as[i][5]});
    try {
        return DeltaComplex::make(std::move(s));
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline std::optional<SchemaInstance> schema_instance(const std::vector<Atom>& as)
{
    if (as.size() != 2)
        return std::nullopt;
    const auto &a = as[0], &b = as[1];
    if (a == b)
        return SchemaInstance{SchemaInstance::Kind::Identity};
    if (apply_group(perm_s, a) == b || apply_group(perm_s, b) == a)
        return SchemaInstance{SchemaInstance::Kind::Perm};
    if (apply_group(perm_t, a) == b)
        return SchemaInstance{SchemaInstance::Kind::Switch};
    return std::nullopt;
}

using AxiomVerdict = std::variant<std::monostate, MComplexCert, SchemaInstance>;

inline AxiomVerdict is_axiomatic(const Sequent& s)
{
    auto as = s.atoms();
    if (auto si = schema_instance(as))
        return *si;
    auto k = reconstruct_complex(as);
    if (!k)
        return std::monostate{};
    auto r = validate_mcomplex(*k);
    if (auto* c = std::get_if<MComplexCert>(&r))
        return std::move(*c);
    return std::monostate{};
}

} // namespace menelaus
