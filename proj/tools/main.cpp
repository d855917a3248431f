// Command-line front end: each subcommand prints a JSON (or Markdown) report.
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage or input error,
// 3 size limit exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "schreier/catalog.hpp"
#include "schreier/cohomology.hpp"
#include "schreier/generators.hpp"
#include "schreier/suite.hpp"

namespace fs = std::filesystem;
using namespace schreier;

namespace {

struct Options {
    std::string hom, action, module, out, format = "json", scope = "all", kind;
    std::vector<std::size_t> params;
    bool report = false, lemmas = false, all = false, extract = false, oracle = false, regular = false;
    std::uint64_t seed = 0;
    std::size_t limit = 1024;
};

json elems(const FiniteMonoid& m, const std::vector<Elem>& xs) {
    json j = json::array();
    for (Elem x : xs) j.push_back(m.name(x));
    return j;
}

json verdicts_json(const std::vector<Verdict>& vs) {
    json j = json::array();
    for (const auto& v : vs) {
        json e;
        e["anchor"] = v.anchor;
        e["pass"] = v.pass;
        if (!v.pass) e["witness"] = v.witness;
        j.push_back(std::move(e));
    }
    return j;
}

json report_json(const CartesianReport& r) {
    const auto& m = *r.hom.source();
    json j;
    j["kernel"] = elems(m, r.kernel);
    j["pcar"] = elems(m, r.pcar);
    j["car"] = elems(m, r.car);
    j["is_prefibration"] = r.is_prefibration;
    j["is_fibration"] = r.is_fibration;
    json fibers = json::object();
    for (Elem n = 0; n < r.fiber_index.size(); ++n) fibers[r.hom.target()->name(n)] = elems(m, r.fiber_index[n]);
    j["fibers"] = std::move(fibers);
    return j;
}

class Report {
public:
    explicit Report(std::string command) { doc_["command"] = std::move(command); doc_["inputs"] = json::object(); }

    void input(const std::string& path) { doc_["inputs"][path] = digest(load_json(path)); }
    json& results() { return doc_["results"]; }
    void ledger(const std::vector<Verdict>& vs) { append(ledger_, vs); }
    bool ok() const { return all_pass(ledger_); }

    int emit(const std::string& format) {
        doc_["ledger"] = verdicts_json(ledger_);
        if (format == "md") {
            std::cout << markdown();
        } else {
            std::cout << doc_.dump(2) << "\n";
        }
        for (const auto& v : ledger_) {
            if (!v.pass) {
                std::cerr << "verdict failed: " << v.anchor << " (" << v.witness << ")\n";
                return 1;
            }
        }
        return 0;
    }

private:
    std::string markdown() const {
        std::ostringstream s;
        s << "# " << doc_["command"].get<std::string>() << "\n\n";
        for (const auto& [path, d] : doc_["inputs"].items()) s << "- input `" << path << "` digest `" << d.get<std::string>() << "`\n";
        if (doc_.contains("results")) {
            s << "\n## Results\n\n";
            for (const auto& [k, v] : doc_["results"].items()) {
                const auto text = v.dump();
                s << "- **" << k << "**: " << (text.size() > 160 ? text.substr(0, 157) + "..." : text) << "\n";
            }
        }
        s << "\n## Verdicts\n\n| anchor | pass | witness |\n|---|---|---|\n";
        for (const auto& v : ledger_) s << "| " << v.anchor << " | " << (v.pass ? "yes" : "no") << " | " << v.witness << " |\n";
        return s.str();
    }

    json doc_;
    std::vector<Verdict> ledger_;
};

int cmd_analyze(const Options& o) {
    Report rep("analyze");
    rep.input(o.hom);
    const auto h = load_hom(o.hom);
    const auto r = analyze(h);
    rep.results() = report_json(r);
    if (o.lemmas) rep.ledger(check_closure_lemmas(r));
    return rep.emit(o.format);
}

int cmd_lax_validate(const Options& o) {
    Report rep("lax validate");
    rep.input(o.action);
    const auto a = load_action(o.action);
    const auto v = validate_lax(*a);
    rep.results()["is_pseudo"] = v.is_pseudo;
    rep.ledger(v.axioms);
    return rep.emit(o.format);
}

int cmd_groth(const Options& o) {
    Report rep("groth");
    rep.input(o.action);
    const auto g = groth(load_action(o.action));
    json out;
    out["monoid"] = monoid_to_json(*g.underlying);
    out["projection"] = g.projection.map();
    out["inclusion"] = g.inclusion.map();
    if (!o.out.empty()) {
        json file = monoid_to_json(*g.underlying);
        file["kind"] = "monoid";
        save_json(o.out, file);
        rep.results()["written"] = o.out;
    }
    rep.results()["order"] = g.underlying->order();
    rep.results()["is_group"] = g.underlying->is_group();
    rep.results()["projection"] = g.projection.map();
    rep.results()["inclusion"] = g.inclusion.map();
    if (auto iso = find_isomorphism(g.underlying, q8())) rep.results()["isomorphic_to_q8"] = true;
    if (o.report) {
        const auto gr = groth_projection_report(g);
        rep.results()["report"] = report_json(gr.report);
        rep.ledger(gr.verdicts);
    }
    if (o.out.empty()) rep.results()["monoid"] = out["monoid"];
    return rep.emit(o.format);
}

json cleavage_json(const Cleavage& cl) {
    const auto& m = *cl.hom.source();
    json j;
    json kappa = json::object();
    for (Elem n = 0; n < cl.kappa.size(); ++n) kappa[cl.hom.target()->name(n)] = m.name(cl.kappa[n]);
    j["kappa"] = std::move(kappa);
    json xi = json::object();
    for (Elem x = 0; x < cl.xi.size(); ++x) xi[m.name(x)] = m.name(cl.iota(cl.xi[x]));
    j["xi"] = std::move(xi);
    return j;
}

int cmd_cleavage(const Options& o) {
    Report rep("cleavage");
    rep.input(o.hom);
    const auto h = load_hom(o.hom);
    const auto r = analyze(h);
    const auto cl = canonical_cleavage(r);
    rep.results()["canonical"] = cleavage_json(cl);
    rep.results()["cleavage_count"] = cleavage_count(cl);
    if (o.all) {
        json list = json::array();
        for (const auto& c : enumerate_cleavages(h, o.limit)) list.push_back(cleavage_json(c));
        rep.results()["cleavages"] = std::move(list);
    }
    const auto act = extract_action(cl);
    const auto lv = validate_lax(*act);
    if (o.extract) rep.results()["action"] = action_to_json(*act);
    rep.results()["is_pseudo"] = lv.is_pseudo;
    const auto rec = reconstruct(cl);
    rep.ledger(lv.axioms);
    rep.ledger({Verdict{"round_trip_iso", rec.ok(), rec.ok() ? "" : "reconstruction failed"},
                Verdict{"pseudo_iff_fibration", lv.is_pseudo == r.is_fibration, ""}});
    return rep.emit(o.format);
}

json perm_json(const Perm& p) { return json(p); }

int cmd_aut(const Options& o) {
    Report rep("aut");
    rep.input(o.hom);
    const auto h = load_hom(o.hom);
    const auto cl = canonical_cleavage(h);
    const auto triples = aut_A(cl);
    const auto c = compute_C(cl);
    const auto rh = rho(cl, triples, c);
    json list = json::array();
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& t = triples[i];
        list.push_back({{"psi", perm_json(t.psi)}, {"theta", perm_json(t.theta)}, {"eta", perm_json(t.eta)},
                        {"xi", t.xi}, {"rho", rh.image[i]}});
    }
    rep.results()["aut_A"] = std::move(list);
    json cj = json::array();
    for (std::size_t i = 0; i < c.pairs.size(); ++i) {
        cj.push_back({{"theta", perm_json(c.pairs[i].first)}, {"eta", perm_json(c.pairs[i].second)}, {"alpha", c.witness[i]}});
    }
    rep.results()["C"] = std::move(cj);
    rep.ledger({c.subgroup});
    rep.ledger(rh.verdicts);
    bool audited = std::all_of(triples.begin(), triples.end(), [](const AutTriple& t) { return t.audited; });
    rep.ledger({Verdict{"aut_triples_audited", audited, audited ? "" : "a parametrized map failed its audit"}});
    if (o.oracle) {
        std::vector<Perm> perms;
        for (const auto& t : triples) perms.push_back(t.psi);
        const bool same = perms == aut_A_bruteforce(h);
        rep.ledger({Verdict{"aut_parametric_equals_bruteforce", same, same ? "" : "enumerations differ"}});
    }
    return rep.emit(o.format);
}

int cmd_h2(const Options& o) {
    Report rep("h2");
    rep.input(o.module);
    const auto mod = load_module(o.module);
    const auto classes = h2(mod, o.regular);
    json list = json::array();
    for (const auto& c : classes) list.push_back({{"representative", c.representative}, {"size", c.size}});
    rep.results()["regular"] = o.regular;
    rep.results()["classes"] = std::move(list);
    rep.results()["class_count"] = classes.size();
    const auto b = verify_h2_bijection(mod, o.regular);
    rep.results()["cocycles"] = b.cocycles;
    rep.results()["congruence_classes"] = b.congruence_classes;
    rep.ledger(b.verdicts);
    return rep.emit(o.format);
}

int cmd_verify_exact(const Options& o) {
    Report rep("verify-exact");
    rep.input(o.hom);
    const auto h = load_hom(o.hom);
    const auto cl = canonical_cleavage(h);
    const auto ex = verify_exact_sequences(cl, o.seed);
    const auto z = z1_iso(cl);
    rep.results()["seed"] = o.seed;
    rep.results()["cleavages_checked"] = ex.cleavages_checked;
    rep.results()["sampled"] = ex.sampled;
    rep.results()["z1_size"] = z.cocycles.size();
    rep.results()["aut_AN_size"] = z.aut_AN_size;
    rep.ledger(ex.first);
    rep.ledger(ex.second);
    rep.ledger(z.verdicts);
    return rep.emit(o.format);
}

int cmd_generate(const Options& o) {
    const auto& p = o.params;
    auto need = [&](std::size_t k) {
        if (p.size() != k) throw CLI::ValidationError("generate " + o.kind, "expects " + std::to_string(k) + " integer(s)");
    };
    MonoidPtr m;
    if (o.kind == "cyclic-group") {
        need(1);
        m = cyclic_group(p[0]);
    } else if (o.kind == "cyclic-monoid") {
        need(2);
        m = cyclic_monoid(p[0], p[1]);
    } else if (o.kind == "klein4") {
        need(0);
        m = klein4();
    } else if (o.kind == "q8") {
        need(0);
        m = q8();
    } else if (o.kind == "truncated-add") {
        need(1);
        m = truncated_add(p[0]);
    } else if (o.kind == "full-transformation") {
        need(1);
        m = full_transformation(p[0]);
    } else {
        throw CLI::ValidationError("generate", "unknown kind '" + o.kind + "'");
    }
    json j = monoid_to_json(*m);
    j["kind"] = "monoid";
    if (!o.out.empty()) {
        save_json(o.out, j);
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_suite(const Options& o) {
    const auto catalog = load_catalog(default_catalog_dir());
    const auto report = run_suite(catalog, o.scope, o.seed);
    json doc;
    doc["command"] = "suite";
    doc["scope"] = o.scope;
    doc["seed"] = o.seed;
    json inputs = json::object();
    for (const auto& f : fs::directory_iterator(catalog.dir)) {
        if (f.path().extension() == ".json") inputs[f.path().filename().string()] = digest(load_json(f.path()));
    }
    // directory_iterator order is unspecified
    json sorted = json::object();
    std::vector<std::string> keys;
    for (const auto& [k, v] : inputs.items()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) sorted[k] = inputs[k];
    doc["inputs"] = std::move(sorted);
    doc["results"] = report.to_json();
    if (o.format == "md") {
        std::cout << "# suite (" << o.scope << ")\n\n| anchor | passed | checked |\n|---|---|---|\n";
        for (const auto& [anchor, c] : doc["results"]["ledger"].items()) {
            std::cout << "| " << anchor << " | " << c["passed"] << " | " << c["checked"] << " |\n";
        }
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    for (const auto& e : report.entries) {
        if (!e.verdict.pass) {
            std::cerr << "verdict failed: " << e.verdict.anchor << " on " << e.subject << " (" << e.verdict.witness << ")\n";
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite monoid fibrations, Grothendieck constructions and Schreier extensions"};
    app.require_subcommand(1);
    Options o;
    auto fmt = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Precartesian and cartesian elements of a homomorphism");
    analyze_cmd->add_option("--hom", o.hom)->required()->check(CLI::ExistingFile);
    analyze_cmd->add_flag("--lemmas", o.lemmas, "Also check the closure lemmas");
    fmt(analyze_cmd);

    auto* lax_cmd = app.add_subcommand("lax", "Lax actions");
    lax_cmd->require_subcommand(1);
    auto* validate_cmd = lax_cmd->add_subcommand("validate", "Check the lax action axioms");
    validate_cmd->add_option("--action", o.action)->required()->check(CLI::ExistingFile);
    fmt(validate_cmd);

    auto* groth_cmd = app.add_subcommand("groth", "Grothendieck construction of a lax action");
    groth_cmd->add_option("--action", o.action)->required()->check(CLI::ExistingFile);
    groth_cmd->add_option("--out", o.out, "Write the monoid JSON here");
    groth_cmd->add_flag("--report", o.report, "Analyze the projection");
    fmt(groth_cmd);

    auto* cleavage_cmd = app.add_subcommand("cleavage", "Cleavages and the extracted lax action");
    cleavage_cmd->add_option("--hom", o.hom)->required()->check(CLI::ExistingFile);
    cleavage_cmd->add_flag("--all", o.all, "List every cleavage up to --limit");
    cleavage_cmd->add_flag("--extract", o.extract, "Emit the extracted action");
    cleavage_cmd->add_option("--limit", o.limit, "Maximum cleavages listed");
    fmt(cleavage_cmd);

    auto* aut_cmd = app.add_subcommand("aut", "Kernel-preserving cartesian automorphisms");
    aut_cmd->add_option("--hom", o.hom)->required()->check(CLI::ExistingFile);
    aut_cmd->add_flag("--oracle", o.oracle, "Cross-check against brute force (order <= 8)");
    fmt(aut_cmd);

    auto* h2_cmd = app.add_subcommand("h2", "Second cohomology of a module");
    h2_cmd->add_option("--module", o.module)->required()->check(CLI::ExistingFile);
    h2_cmd->add_flag("--regular", o.regular, "Unit-valued cocycles only");
    fmt(h2_cmd);

    auto* exact_cmd = app.add_subcommand("verify-exact", "Check both automorphism exact sequences");
    exact_cmd->add_option("--hom", o.hom)->required()->check(CLI::ExistingFile);
    exact_cmd->add_option("--seed", o.seed, "Seed for sampled cleavages");
    fmt(exact_cmd);

    auto* gen_cmd = app.add_subcommand("generate", "Generate a monoid table");
    gen_cmd->add_option("kind", o.kind, "cyclic-group k | cyclic-monoid k n | klein4 | q8 | truncated-add k | full-transformation n")
        ->required();
    gen_cmd->add_option("params", o.params, "Integer parameters");
    gen_cmd->add_option("--out", o.out, "Output file");

    auto* suite_cmd = app.add_subcommand("suite", "Run the invariant ledger over the catalog");
    std::vector<std::string> scopes = suite_scopes();
    scopes.push_back("all");
    suite_cmd->add_option("--scope", o.scope)->check(CLI::IsMember(scopes));
    suite_cmd->add_option("--seed", o.seed);
    fmt(suite_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "Catalog management");
    catalog_cmd->require_subcommand(1);
    auto* build_cmd = catalog_cmd->add_subcommand("build", "Write the builtin catalog");
    build_cmd->add_option("--out", o.out)->required();
    auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(o);
        if (*validate_cmd) return cmd_lax_validate(o);
        if (*groth_cmd) return cmd_groth(o);
        if (*cleavage_cmd) return cmd_cleavage(o);
        if (*aut_cmd) return cmd_aut(o);
        if (*h2_cmd) return cmd_h2(o);
        if (*exact_cmd) return cmd_verify_exact(o);
        if (*gen_cmd) return cmd_generate(o);
        if (*suite_cmd) return cmd_suite(o);
        if (*build_cmd) {
            write_catalog(o.out);
            return 0;
        }
        if (*list_cmd) {
            const auto c = load_catalog(default_catalog_dir());
            for (const auto& e : c.monoids) std::cout << "monoid  " << e.id << "\n";
            for (const auto& e : c.homs) std::cout << "hom     " << e.id << "\n";
            for (const auto& e : c.actions) std::cout << "action  " << e.id << "\n";
            for (const auto& e : c.modules) std::cout << "module  " << e.id << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << " (requested " << e.requested() << ", bound " << e.bound() << ")\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Shape ? 2 : 1;
    }
    return 2;
}
