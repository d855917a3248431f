#include "schreier/suite.hpp"

#include <algorithm>
#include <map>

namespace schreier {

namespace {

constexpr std::size_t kBruteForceOrder = 8;
constexpr std::size_t kProductOrder = 64;
constexpr std::size_t kTransportSweep = 64;

struct Ledger {
    std::vector<LedgerEntry>& out;
    std::string scope;

    void add(const std::string& subject, const Verdict& v) { out.push_back({scope, subject, v}); }
    void add(const std::string& subject, const std::vector<Verdict>& vs) {
        for (const auto& v : vs) add(subject, v);
    }
    void check(const std::string& subject, const std::string& anchor, bool pass, const std::string& witness = {}) {
        add(subject, Verdict{anchor, pass, pass ? std::string{} : witness});
    }
    // Records an unexpected exception as a failed verdict.
    template <class F>
    void guard(const std::string& subject, const std::string& anchor, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            check(subject, anchor, false, e.what());
        }
    }
};

void monoid_core(const Catalog& c, Ledger& l) {
    for (const auto& [id, m] : c.monoids) {
        l.guard(id, "monoid_reaudit", [&] {
            auto again = make_monoid_flat(m->order(), m->flat_table(), m->identity());
            l.check(id, "monoid_reaudit", *again == *m);
        });
        bool units_ok = true;
        for (Elem x : m->unit_elements()) {
            const Elem y = m->inverse(x);
            units_ok = units_ok && m->mul(x, y) == m->identity() && m->mul(y, x) == m->identity() && m->is_unit(y);
            for (Elem z : m->unit_elements()) units_ok = units_ok && m->is_unit(m->mul(x, z));
        }
        l.check(id, "units_form_group", units_ok);
        l.check(id, "opposite_involution", *opposite(opposite(m)) == *m);
        auto iso = find_isomorphism(m, m);
        l.check(id, "self_isomorphism", iso.has_value() && iso->is_bijective() && !audit_hom(*m, *m, iso->map()));
    }
    for (const auto& [id, h] : c.homs) {
        const auto k = kernel(h);
        bool closed = k.contains(h.source()->identity());
        for (Elem x : k.elements) {
            for (Elem y : k.elements) closed = closed && k.contains(h.source()->mul(x, y));
        }
        l.check(id, "kernel_submonoid", closed);
    }
}

void fibration(const Catalog& c, Ledger& l) {
    for (const auto& [id, h] : c.homs) {
        const auto r = analyze(h);
        l.add(id, check_closure_lemmas(r));
        l.check(id, "cartesian_definitional_agreement", [&] {
            for (Elem x = 0; x < h.source()->order(); ++x) {
                if (is_cartesian(h, x) != r.in_car(x) || is_precartesian(h, x) != r.in_pcar(x)) return false;
            }
            return true;
        }());
        l.add(id, check_closure_lemmas(analyze_opposite(h)));
    }
    for (const auto& [rid, rho] : c.homs) {
        for (const auto& [sid, sigma] : c.homs) {
            if (same_monoid(rho.target(), sigma.source())) {
                l.guard(rid + "," + sid, "composite", [&] { l.add(rid + "," + sid, compose_check(rho, sigma).verdicts); });
            }
            if (rho.source()->order() * sigma.source()->order() <= kProductOrder) {
                l.guard(rid + "," + sid, "product", [&] { l.add(rid + "," + sid, product_check(rho, sigma)); });
            }
            if (same_monoid(rho.target(), sigma.target())) {
                l.guard(rid + "," + sid, "pullback", [&] { l.add(rid + "," + sid, pullback_check(rho, sigma)); });
            }
        }
    }
}

void lax(const Catalog& c, Ledger& l) {
    for (const auto& [id, a] : c.actions) {
        const auto v = validate_lax(*a);
        l.add(id, v.axioms);
        l.check(id, "pseudo_gamma_invertible", v.is_pseudo == a->gamma_invertible());
        l.guard(id, "lax_hom_unital", [&] {
            const auto idh = identity_lax_hom(a);
            l.check(id, "lax_hom_unital", compose_lax_homs(idh, idh) == idh);
            const auto cell = validate_two_cell(TwoCell{idh, idh, a->carrier()->identity()});
            l.check(id, "identity_cell_valid", cell.valid && cell.is_pseudo_cell);
        });
    }
}

void grothendieck(const Catalog& c, Ledger& l) {
    for (const auto& [id, a] : c.actions) {
        l.guard(id, "groth_construction", [&] {
            const auto g = groth(a);
            l.add(id, groth_projection_report(g).verdicts);
            const auto idbar = groth_on_hom(identity_lax_hom(a), g, g);
            l.check(id, "groth_preserves_identity", idbar == identity_hom(g.underlying));
            const Elem cell = groth_on_cell(TwoCell{identity_lax_hom(a), identity_lax_hom(a), a->carrier()->identity()}, g, g);
            l.check(id, "groth_cell_in_kernel", g.projection(cell) == a->acting()->identity());
        });
    }
}

void cleavage(const Catalog& c, Ledger& l) {
    for (const auto& [id, h] : c.homs) {
        const auto r = analyze(h);
        if (!r.is_prefibration) continue;
        l.guard(id, "round_trip_iso", [&] {
            const auto cl = canonical_cleavage(r);
            const auto rec = reconstruct(cl);
            l.check(id, "round_trip_iso", rec.ok(), "reconstruction is not a cartesian isomorphism over the base");
            const auto act = extract_action(cl);
            const auto lv = validate_lax(*act);
            l.check(id, "extracted_action_lax", lv.ok());
            l.check(id, "pseudo_iff_fibration", lv.is_pseudo == r.is_fibration);
            const auto count = cleavage_count(cl);
            if (count <= kTransportSweep) {
                const auto all = enumerate_cleavages(h, count + 1);
                l.check(id, "cleavage_torsor_count", all.size() == count);
                for (const auto& other : all) {
                    const auto t = transport(cl, other);
                    l.add(id, t.verdicts);
                    l.check(id, "twisted_cleavage_precartesian",
                            std::all_of(other.kappa.begin(), other.kappa.end(), [&](Elem k) { return r.in_pcar(k); }));
                    l.add(id, transport_tau(identity_hom(h.source()), cl, other, cl, cl));
                }
            }
        });
    }
    for (const auto& [id, a] : c.actions) {
        l.guard(id, "round_trip_action", [&] {
            const auto g = groth(a);
            const auto ex = extract_action(canonical_cleavage(g.projection));
            l.check(id, "round_trip_action", relate_actions(*a, *ex).has_value());
        });
    }
}

void automorphism(const Catalog& c, Ledger& l) {
    for (const auto& [id, h] : c.homs) {
        const auto r = analyze(h);
        if (!r.is_prefibration || h.source()->order() > kBruteForceOrder) continue;
        l.guard(id, "aut_parametric_equals_bruteforce", [&] {
            const auto cl = canonical_cleavage(r);
            const auto triples = aut_A(cl);
            l.check(id, "aut_triples_audited",
                    std::all_of(triples.begin(), triples.end(), [](const AutTriple& t) { return t.audited; }));
            std::vector<Perm> perms;
            for (const auto& t : triples) perms.push_back(t.psi);
            l.check(id, "aut_parametric_equals_bruteforce", perms == aut_A_bruteforce(h));
            const auto cg = compute_C(cl);
            l.add(id, cg.subgroup);
            l.add(id, rho(cl, triples, cg).verdicts);
        });
    }
}

bool regular_schreier(const Cleavage& cl) {
    try {
        require_regular_schreier(cl);
        return true;
    } catch (const Error&) {
        return false;
    }
}

void cohomology(const Catalog& c, Ledger& l, std::uint64_t seed) {
    for (const auto& [id, mod] : c.modules) {
        l.guard(id, "h2_bijection", [&] { l.add(id, verify_h2_bijection(mod, true).verdicts); });
    }
    for (const auto& [id, h] : c.homs) {
        const auto r = analyze(h);
        if (!r.is_prefibration) continue;
        const auto cl = canonical_cleavage(r);
        if (!regular_schreier(cl)) continue;
        l.guard(id, "regular_extension", [&] {
            l.add(id, schreier_conditions(extension_from_hom(h)));
            l.add(id, z1_iso(cl).verdicts);
            const auto ex = verify_exact_sequences(cl, seed);
            l.add(id, ex.first);
            l.add(id, ex.second);
        });
    }
}

} // namespace

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    return std::size_t(std::count_if(entries.begin(), entries.end(), [](const LedgerEntry& e) { return !e.verdict.pass; }));
}

json SuiteReport::to_json() const {
    json list = json::array();
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_anchor;
    for (const auto& e : entries) {
        json j;
        j["scope"] = e.scope;
        j["subject"] = e.subject;
        j["anchor"] = e.verdict.anchor;
        j["pass"] = e.verdict.pass;
        if (!e.verdict.pass) j["witness"] = e.verdict.witness;
        list.push_back(std::move(j));
        auto& [pass, total] = by_anchor[e.verdict.anchor];
        ++total;
        if (e.verdict.pass) ++pass;
    }
    json ledger = json::object();
    for (const auto& [anchor, counts] : by_anchor) {
        ledger[anchor] = {{"passed", counts.first}, {"checked", counts.second}};
    }
    json out;
    out["entries"] = std::move(list);
    out["ledger"] = std::move(ledger);
    out["checked"] = entries.size();
    out["failed"] = failures();
    return out;
}

const std::vector<std::string>& suite_scopes() {
    static const std::vector<std::string> scopes{"monoid-core",  "fibration-analysis", "lax-action",
                                                 "grothendieck", "cleavage-transport", "automorphism",
                                                 "cohomology-extensions"};
    return scopes;
}

SuiteReport run_suite(const Catalog& catalog, const std::string& scope, std::uint64_t seed) {
    const auto& scopes = suite_scopes();
    if (scope != "all" && std::find(scopes.begin(), scopes.end(), scope) == scopes.end()) {
        throw Error(ErrorKind::Parse, "unknown suite scope '" + scope + "'");
    }
    SuiteReport report;
    auto run = [&](const std::string& s, auto&& fn) {
        if (scope != "all" && scope != s) return;
        Ledger l{report.entries, s};
        fn(l);
    };
    run("monoid-core", [&](Ledger& l) { monoid_core(catalog, l); });
    run("fibration-analysis", [&](Ledger& l) { fibration(catalog, l); });
    run("lax-action", [&](Ledger& l) { lax(catalog, l); });
    run("grothendieck", [&](Ledger& l) { grothendieck(catalog, l); });
    run("cleavage-transport", [&](Ledger& l) { cleavage(catalog, l); });
    run("automorphism", [&](Ledger& l) { automorphism(catalog, l); });
    run("cohomology-extensions", [&](Ledger& l) { cohomology(catalog, l, seed); });
    return report;
}

} // namespace schreier
