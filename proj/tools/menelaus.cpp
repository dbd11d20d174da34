// Command-line front end over the menelaus library.

#include "menelaus/menelaus.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace menelaus;

namespace {

enum Exit : int { Ok = 0, Negative = 1, Exceeded = 2, Malformed = 3, Usage = 64 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string example, file, budget, plane, out, sequent, formula, triangle, format = "json";
    std::string left, lcell, right, rcell;
    std::size_t conclusion = 0;
    bool conclusion_given = false;
    bool json = false, all = false;
};

struct Report {
    int code = Ok;
    Json json = Json::object();
    std::string text;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

corpus::Fixture fixture(const std::string& name)
{
    try {
        return corpus::get(name);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

void need_source(const Options& o)
{
    if (o.example.empty() == o.file.empty())
        throw UsageError("give exactly one of --example NAME or --file PATH");
}

DeltaComplex load_complex(const Options& o)
{
    need_source(o);
    if (!o.file.empty())
        return parse_complex(read_file(o.file));
    auto f = fixture(o.example);
    if (!f.complex)
        throw UsageError("'" + o.example + "' is a " + std::string(corpus::kind_name(f.kind)) + ", not a complex");
    return *f.complex;
}

MComplexCert load_cert(const Options& o)
{
    auto k = load_complex(o);
    auto r = validate_mcomplex(k);
    if (auto* v = std::get_if<Violation>(&r))
        throw Error(Errc::NotMComplex, std::string(axiom_name(v->axiom)) + ": " + v->message);
    return std::get<MComplexCert>(r);
}

// Sequent text, or a complex whose axiomatic sequent is meant.
Sequent sequent_of_text(const std::string& text)
{
    auto t = trim(text);
    if (!t.empty() && t.front() == '{')
        return axiomatic_sequent(certify(parse_complex(t)));
    return parse_sequent(t);
}

Sequent load_sequent(const Options& o)
{
    if (!o.sequent.empty()) {
        if (!o.example.empty() || !o.file.empty())
            throw UsageError("--sequent excludes --example and --file");
        return parse_sequent(o.sequent);
    }
    need_source(o);
    if (!o.file.empty())
        return sequent_of_text(read_file(o.file));
    auto f = fixture(o.example);
    if (f.sequent)
        return *f.sequent;
    if (f.derivation)
        return f.derivation->conclusion;
    if (f.complex)
        return axiomatic_sequent(certify(*f.complex));
    throw UsageError("'" + o.example + "' carries no sequent");
}

DerivPtr load_derivation(const Options& o)
{
    need_source(o);
    if (!o.file.empty())
        return parse_derivation(read_file(o.file));
    auto f = fixture(o.example);
    if (!f.derivation)
        throw UsageError("'" + o.example + "' is not a derivation");
    return f.derivation;
}

MComplexCert named_cert(const std::string& what)
{
    if (std::filesystem::exists(what))
        return certify(parse_complex(read_file(what)));
    auto f = fixture(what);
    if (!f.complex)
        throw UsageError("'" + what + "' is not a complex");
    return certify(*f.complex);
}

Budget parse_budget(const std::string& spec)
{
    Budget b;
    if (spec.empty())
        return b;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("budget items look like cells=N");
        auto key = item.substr(0, eq);
        long long n = 0;
        try {
            std::size_t used = 0;
            n = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1 || n < 0)
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("bad budget value in '" + item + "'");
        }
        if (key == "cells")
            b.max_cells = static_cast<int>(n);
        else if (key == "rounds")
            b.max_rounds = static_cast<int>(n);
        else if (key == "seqs")
            b.max_seqs = static_cast<std::size_t>(n);
        else
            throw UsageError("unknown budget '" + key + "'");
    }
    return b;
}

std::optional<Point3> parse_plane(const std::string& spec)
{
    if (spec.empty())
        return std::nullopt;
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(trim(item));
    if (parts.size() != 3)
        throw UsageError("--plane takes nx,ny,nz");
    Point3 n;
    try {
        for (int i = 0; i < 3; ++i)
            n[i] = parse_rational(parts[i]);
    } catch (const Error& e) {
        throw UsageError(std::string("--plane: ") + e.what());
    }
    if (n[0] == 0 && n[1] == 0 && n[2] == 0)
        throw UsageError("--plane: the zero vector is not a plane");
    return n;
}

std::array<std::string, 3> parse_triangle(const std::string& spec)
{
    std::array<std::string, 3> es;
    std::stringstream ss(spec);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i == 3)
            throw UsageError("--triangle takes three edge ids");
        es[i++] = trim(item);
    }
    if (i != 3)
        throw UsageError("--triangle takes three edge ids");
    return es;
}

void write_out(const Options& o, const std::string& body)
{
    if (o.out.empty())
        return;
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw UsageError("cannot write '" + o.out + "'");
    f << body;
}

std::string list_text(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs)
        s += (s.empty() ? "" : " ") + x;
    return s;
}

Json triangle_json(const CutTriangle& t)
{
    return Json{{"edges", t.edges}, {"left", t.left}, {"right", t.right}};
}

// ---------------------------------------------------------------- verbs

Report cmd_validate(const Options& o)
{
    Report r;
    auto k = load_complex(o);
    auto v = validate_mcomplex(k);
    if (auto* bad = std::get_if<Violation>(&v)) {
        r.code = Negative;
        r.json = {{"m_complex", false}, {"violation", violation_to_json(*bad)}};
        r.text = "not an M-complex: " + std::string(axiom_name(bad->axiom)) + " (" + bad->message + ")\n";
        if (!bad->witness.empty())
            r.text += "witness: " + list_text(bad->witness) + "\n";
        return r;
    }
    const auto& c = std::get<MComplexCert>(v);
    r.json = {{"m_complex", true}, {"certificate", cert_to_json(c)}};
    r.text = "M-complex: " + std::to_string(k.num_vertices()) + " vertices, " + std::to_string(k.num_edges()) + " edges, " +
             std::to_string(k.num_triangles()) + " triangles, chi=" + std::to_string(euler_characteristic(k)) +
             ", g=" + std::to_string(genus(c)) + "\n";
    return r;
}

Report cmd_sequent(const Options& o)
{
    Report r;
    auto c = load_cert(o);
    auto s = axiomatic_sequent(c);
    Json cells = Json::object();
    for (const auto& t : c.complex.triangles())
        cells[t.id] = atom_text(nu(c, t.id));
    r.json = {{"sequent", s.text()}, {"nu", cells}};
    for (const auto& t : c.complex.triangles())
        r.text += "nu " + t.id + " = " + atom_text(nu(c, t.id)) + "\n";
    r.text += s.text() + "\n";
    write_out(o, s.text() + "\n");
    return r;
}

Report cmd_decide(const Options& o)
{
    Report r;
    auto s = load_sequent(o);
    auto d = decide(s, parse_budget(o.budget));
    r.json["sequent"] = s.text();
    r.json["status"] = status_name(d.status);
    r.text = std::string(status_name(d.status)) + "\n";
    switch (d.status) {
    case Decision::Status::Derivable:
        r.json["derivation"] = derivation_to_json(d.derivation);
        r.text += "derivation: " + std::to_string(derivation_size(d.derivation)) + " nodes, depth " +
                  std::to_string(derivation_depth(d.derivation)) + "\n";
        write_out(o, r.json["derivation"].dump(2) + "\n");
        break;
    case Decision::Status::Underivable: {
        const auto& c = *d.certificate;
        r.code = Negative;
        r.json["certificate"] = {{"reason", reason_name(c.reason)},
                                 {"euler_parity", c.euler_parity},
                                 {"formulas", c.formula_count},
                                 {"letters", c.letter_count},
                                 {"detail", c.detail}};
        r.text += "certificate: " + std::string(reason_name(c.reason)) + (c.euler_parity ? " (Euler parity)" : "") + "\n";
        r.text += c.detail + "\n";
        break;
    }
    case Decision::Status::ResourceExceeded:
        r.code = Exceeded;
        break;
    }
    r.json["trace"] = {{"sequents", d.trace.sequents}, {"deepest", d.trace.deepest}, {"limits", d.trace.limits.size()}};
    if (d.status == Decision::Status::ResourceExceeded) {
        r.text += "trace: " + std::to_string(d.trace.sequents) + " sequents, depth " + std::to_string(d.trace.deepest) + ", " +
                  std::to_string(d.trace.limits.size()) + " branches cut off\n";
        if (!d.trace.limits.empty())
            r.text += "first cut-off: " + d.trace.limits.front() + "\n";
    }
    return r;
}

Report cmd_check_proof(const Options& o)
{
    Report r;
    auto d = load_derivation(o);
    auto v = check_derivation(d);
    r.json = {{"valid", v.ok}, {"conclusion", d->conclusion.text()}, {"normal", is_normal(d)}};
    if (v.ok) {
        r.text = "valid derivation of " + d->conclusion.text() + "\n";
    } else {
        r.code = Negative;
        r.json["path"] = v.path;
        r.json["reason"] = v.reason;
        r.text = "invalid at node " + (v.path.empty() ? std::string("root") : v.path) + ": " + v.reason + "\n";
    }
    return r;
}

Report cmd_normalize(const Options& o)
{
    Report r;
    auto d = load_derivation(o);
    auto v = check_derivation(d);
    if (!v.ok)
        throw Error(Errc::ParseError, "invalid derivation at node " + (v.path.empty() ? std::string("root") : v.path) + ": " + v.reason);
    auto n = normalize_with_log(d);
    Json steps = Json::array();
    for (const auto& st : n.steps) {
        Json after = Json::array();
        for (const auto& a : st.after)
            after.push_back({a.degree, a.rank});
        steps.push_back({{"rule", rule_name(st.rule)}, {"before", {st.before.degree, st.before.rank}}, {"after", after}});
    }
    r.json = {{"steps", steps}, {"derivation", derivation_to_json(n.derivation)}};
    r.text = std::to_string(n.steps.size()) + " rewrite steps; " + std::to_string(derivation_size(d)) + " -> " +
             std::to_string(derivation_size(n.derivation)) + " nodes; normal=" + (is_normal(n.derivation) ? "yes" : "no") + "\n";
    write_out(o, r.json["derivation"].dump(2) + "\n");
    return r;
}

Report cmd_interp_check(const Options& o)
{
    Report r;
    Interpretation v;
    Sequent s;
    bool want = o.conclusion_given;
    std::size_t ci = o.conclusion;
    if (!o.example.empty()) {
        if (!o.file.empty())
            throw UsageError("give exactly one of --example NAME or --file PATH");
        auto f = fixture(o.example);
        if (!f.interp)
            throw UsageError("'" + o.example + "' is not an interpretation");
        v = *f.interp;
        s = *f.sequent;
        if (!want && f.conclusion_index) {
            want = true;
            ci = *f.conclusion_index;
        }
    } else {
        if (o.file.empty() || o.sequent.empty())
            throw UsageError("interp-check needs --example NAME, or --file PATH with --sequent TEXT");
        v = parse_interp(read_file(o.file));
        s = parse_sequent(o.sequent);
    }
    auto plane = parse_plane(o.plane);
    // satisfaction of each formula as a premise and as the conclusion
    std::vector<std::pair<bool, bool>> sat;
    if (auto* pv = std::get_if<ProjectiveInterp>(&v)) {
        for (const auto& f : s.formulas()) {
            if (!f.is_atomic())
                throw UsageError("projective interpretations are checked on atomic formulas only");
            bool ok = satisfies_atomic(*pv, f.atom(), plane);
            sat.push_back({ok, ok});
        }
    } else {
        if (plane)
            throw UsageError("--plane applies to projective interpretations");
        const auto& ev = std::get<EuclideanInterp>(v);
        for (const auto& f : s.formulas())
            sat.push_back({satisfies(ev, f, Polarity::Context), satisfies(ev, f, Polarity::Conclusion)});
    }
    Json each = Json::array();
    bool all = true;
    for (std::size_t i = 0; i < sat.size(); ++i) {
        const auto& f = s.formulas()[i];
        bool ok = sat[i].second;
        all = all && ok;
        each.push_back({{"formula", f.text()}, {"satisfied", ok}});
        r.text += std::string(ok ? "true  " : "false ") + f.text() + "\n";
    }
    r.json["formulas"] = each;
    if (!want) {
        r.json["all_satisfied"] = all;
        r.code = all ? Ok : Negative;
        return r;
    }
    if (ci >= s.size())
        throw UsageError("--conclusion is out of range");
    EntailmentVerdict e;
    for (std::size_t i = 0; i < sat.size(); ++i)
        if (i != ci)
            e.premises_satisfied = e.premises_satisfied && sat[i].first;
    e.conclusion_satisfied = sat[ci].second;
    const auto& c = s.formulas()[ci];
    r.json["conclusion"] = c.text();
    r.json["premises_satisfied"] = e.premises_satisfied;
    r.json["conclusion_satisfied"] = e.conclusion_satisfied;
    r.json["holds"] = e.holds();
    r.text += "conclusion " + c.text() + ": premises " + (e.premises_satisfied ? "satisfied" : "not satisfied") + ", conclusion " +
              (e.conclusion_satisfied ? "satisfied" : "not satisfied") + "\n";
    r.code = e.holds() ? Ok : Negative;
    return r;
}

Report cmd_sum(const Options& o)
{
    Report r;
    if (o.left.empty() || o.right.empty() || o.lcell.empty() || o.rcell.empty())
        throw UsageError("sum needs --left X --lcell id --right Y --rcell id");
    auto sc = sum_to_cut(named_cert(o.left), o.lcell, named_cert(o.right), o.rcell);
    auto v = check_derivation(sc.derivation);
    r.json = {{"complex", complex_to_json(sc.complex.complex)},
              {"certificate", cert_to_json(sc.complex)},
              {"sequent", sc.sum.text()},
              {"derivation", derivation_to_json(sc.derivation)},
              {"derivation_valid", v.ok}};
    const auto& k = sc.complex.complex;
    r.text = "sum: " + std::to_string(k.num_vertices()) + " vertices, " + std::to_string(k.num_edges()) + " edges, " +
             std::to_string(k.num_triangles()) + " triangles, chi=" + std::to_string(euler_characteristic(k)) + ", g=" +
             std::to_string(genus(sc.complex)) + "\n" + sc.sum.text() + "\ncut on " + sc.cut.text() + ": derivation " +
             (v.ok ? "valid" : "INVALID") + "\n";
    write_out(o, complex_to_json(k).dump() + "\n");
    return r;
}

Report cmd_cut_triangles(const Options& o)
{
    Report r;
    auto c = load_cert(o);
    Json ts = Json::array();
    for (const auto& t : find_cut_triangles(c)) {
        ts.push_back(triangle_json(t));
        r.text += "{" + t.edges[0] + "," + t.edges[1] + "," + t.edges[2] + "}  " + list_text(t.left) + " | " + list_text(t.right) + "\n";
    }
    auto irr = is_irreducible(c);
    r.json = {{"cut_triangles", ts}, {"irreducibility", irreducibility_name(irr)}};
    r.text += std::string(irreducibility_name(irr)) + "\n";
    return r;
}

Report cmd_split(const Options& o)
{
    Report r;
    auto c = load_cert(o);
    CutTriangle t;
    if (o.triangle.empty()) {
        auto ts = find_cut_triangles(c);
        if (ts.empty())
            throw Error(Errc::NotACutTriangle, "the complex has no cut-triangle");
        t = ts.front();
    } else {
        t.edges = parse_triangle(o.triangle);
    }
    auto sp = split(c, t);
    r.json = {{"triangle", triangle_json(sp.triangle)},
              {"cell", sp.cell},
              {"left", complex_to_json(sp.left.complex)},
              {"right", complex_to_json(sp.right.complex)}};
    r.text = "split along {" + sp.triangle.edges[0] + "," + sp.triangle.edges[1] + "," + sp.triangle.edges[2] + "}, fresh cell " + sp.cell +
             "\nleft:  " + list_text(sp.triangle.left) + " + " + sp.cell + "\nright: " + list_text(sp.triangle.right) + " + " + sp.cell + "\n";
    return r;
}

Report cmd_decompose(const Options& o)
{
    Report r;
    auto c = load_cert(o);
    auto trees = o.all ? all_decompositions(c) : std::vector<DecompositionTree>{decompose(c)};
    Json js = Json::array();
    for (const auto& t : trees)
        js.push_back(tree_to_json(t));
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const auto& t = trees[i];
        r.text += "tree " + std::to_string(i) + ": " + std::to_string(t.nodes.size()) + " irreducible parts\n";
        for (std::size_t n = 0; n < t.nodes.size(); ++n)
            r.text += "  node " + std::to_string(n) + ": " + std::to_string(t.nodes[n].complex.num_triangles()) + " triangles\n";
        for (const auto& e : t.edges)
            r.text += "  " + std::to_string(e.a) + " -- " + std::to_string(e.b) + " on " + e.cell_a + "/" + e.cell_b + "\n";
    }
    if (o.all)
        r.json = {{"trees", js}};
    else
        r.json = {{"tree", js[0]}};
    if (o.format == "dot") {
        r.text.clear();
        for (const auto& t : trees)
            r.text += tree_dot(t);
        write_out(o, r.text);
    } else
        write_out(o, (o.all ? Json(js) : js[0]).dump(2) + "\n");
    return r;
}

Report cmd_orbit(const Options& o)
{
    Report r;
    if (o.formula.empty())
        throw UsageError("orbit needs --formula '(A,B,C,P,Q,R)'");
    auto f = parse_formula(o.formula);
    if (!f.is_atomic())
        throw UsageError("orbit takes an atomic formula");
    Json xs = Json::array();
    for (const auto& a : orbit(f.atom())) {
        xs.push_back(atom_text(a));
        r.text += atom_text(a) + "\n";
    }
    r.json = {{"formula", f.text()}, {"orbit", xs}, {"minimum", atom_text(orbit_min(f.atom()))}};
    return r;
}

Json fixture_payload(const corpus::Fixture& f)
{
    switch (f.kind) {
    case corpus::Fixture::Kind::Complex: return complex_to_json(*f.complex);
    case corpus::Fixture::Kind::Sequent: return f.sequent->text();
    case corpus::Fixture::Kind::Interpretation: return interp_to_json(Interpretation{*f.interp});
    case corpus::Fixture::Kind::Derivation: return derivation_to_json(f.derivation);
    }
    return nullptr;
}

Report cmd_example(const Options& o)
{
    Report r;
    if (o.example.empty()) {
        Json names = Json::array();
        for (const auto& n : corpus::list()) {
            auto f = corpus::get(n);
            names.push_back({{"name", n}, {"kind", corpus::kind_name(f.kind)}, {"note", f.note}});
            r.text += n + std::string(24 > n.size() ? 24 - n.size() : 1, ' ') + std::string(corpus::kind_name(f.kind)) + "  " + f.note + "\n";
        }
        r.json = {{"fixtures", names}};
        return r;
    }
    auto f = fixture(o.example);
    auto payload = fixture_payload(f);
    r.json = {{"name", f.name}, {"kind", corpus::kind_name(f.kind)}, {"note", f.note}, {"payload", payload}};
    if (f.sequent && f.kind != corpus::Fixture::Kind::Sequent)
        r.json["sequent"] = f.sequent->text();
    if (f.conclusion_index)
        r.json["conclusion"] = *f.conclusion_index;
    if (f.expected_violation)
        r.json["expected_violation"] = axiom_name(*f.expected_violation);
    r.text = f.name + " (" + std::string(corpus::kind_name(f.kind)) + "): " + f.note + "\n" +
             (payload.is_string() ? payload.get<std::string>() : payload.dump(2)) + "\n";
    return r;
}

Report cmd_export(const Options& o)
{
    Report r;
    auto k = load_complex(o);
    std::string body;
    if (o.format == "dot")
        body = dual_graph_dot(k, o.example.empty() ? "dual" : o.example);
    else if (o.format == "json")
        body = complex_to_json(k).dump() + "\n";
    else
        throw UsageError("--format is json or dot");
    r.json = {{"format", o.format}, {"body", body}};
    r.text = body;
    write_out(o, body);
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Menelaus sequent system: complexes, proofs, geometry and the cyclic operad"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool source = true) {
        if (source) {
            sub->add_option("--example", o.example, "built-in fixture name");
            sub->add_option("--file", o.file, "input file");
        }
        sub->add_flag("--json", o.json, "machine-readable report");
        sub->add_option("--out", o.out, "also write the main artifact here");
        return sub;
    };

    std::map<std::string, std::function<Report(const Options&)>> verbs;
    auto verb = [&](const std::string& name, const std::string& help, std::function<Report(const Options&)> f, bool source = true) {
        verbs[name] = std::move(f);
        return common(app.add_subcommand(name, help), source);
    };

    verb("validate", "check the M-complex axioms", cmd_validate);
    verb("sequent", "axiomatic sequent of an M-complex", cmd_sequent);
    auto* dec = verb("decide", "decide derivability of a sequent", cmd_decide);
    dec->add_option("--sequent", o.sequent, "sequent text, e.g. '|- (A,B,C,P,Q,R), (A,B,C,P,Q,R)'");
    dec->add_option("--budget", o.budget, "cells=N,rounds=N,seqs=N");
    verb("check-proof", "check a derivation", cmd_check_proof);
    verb("normalize", "eliminate introductions above cuts", cmd_normalize);
    auto* ic = verb("interp-check", "evaluate formulas under an interpretation", cmd_interp_check);
    ic->add_option("--sequent", o.sequent, "sequent text");
    ic->add_option("--plane", o.plane, "proper plane normal nx,ny,nz for projective points");
    ic->add_option_function<std::size_t>("--conclusion", [&](const std::size_t& i) {
        o.conclusion = i;
        o.conclusion_given = true;
    }, "index of the conclusion formula");
    auto* sum = verb("sum", "connected sum and its cut derivation", cmd_sum, false);
    sum->add_option("--left", o.left, "left complex (fixture or file)");
    sum->add_option("--lcell", o.lcell, "removed cell of the left complex");
    sum->add_option("--right", o.right, "right complex (fixture or file)");
    sum->add_option("--rcell", o.rcell, "removed cell of the right complex");
    auto* sp = verb("split", "split along a cut-triangle", cmd_split);
    sp->add_option("--triangle", o.triangle, "three edge ids; default the least cut-triangle");
    verb("cut-triangles", "list cut-triangles", cmd_cut_triangles);
    auto* de = verb("decompose", "decomposition into irreducible parts", cmd_decompose);
    de->add_flag("--all", o.all, "every decomposition tree");
    de->add_option("--format", o.format, "json or dot, for --out");
    auto* orb = verb("orbit", "orbit of an atomic formula under the group", cmd_orbit, false);
    orb->add_option("--formula", o.formula, "atomic formula");
    auto* ex = verb("example", "list fixtures or print one", cmd_example, false);
    ex->add_option("name", o.example, "fixture name");
    ex->add_option("--example", o.example, "fixture name");
    auto* exp = verb("export", "write a complex as JSON or as a dual-graph diagram", cmd_export);
    exp->add_option("--format", o.format, "json or dot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    const auto& name = app.get_subcommands().front()->get_name();
    try {
        auto r = verbs.at(name)(o);
        if (o.json)
            std::cout << r.json.dump(2) << "\n";
        else
            std::cout << r.text;
        return r.code;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        if (o.json)
            std::cout << Json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return Malformed;
    }
}
