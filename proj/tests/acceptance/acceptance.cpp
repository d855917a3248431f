// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failing criteria. Catalog directory: argv[1], else
// $SCHREIER_CATALOG, else ./catalog.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "../oracles/oracles.hpp"
#include "schreier/catalog.hpp"
#include "schreier/cohomology.hpp"
#include "schreier/generators.hpp"
#include "schreier/suite.hpp"

using namespace schreier;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

bool regular_schreier(const MonoidHom& h) {
    try {
        require_regular_schreier(canonical_cleavage(h));
        return true;
    } catch (const Error&) {
        return false;
    }
}

Outcome quaternion(const Catalog& c) {
    auto g = groth(c.action("quaternion_action"));
    const bool iso = find_isomorphism(g.underlying, q8()).has_value();
    const bool fib = analyze(g.projection).is_fibration;
    std::ostringstream s;
    s << std::boolalpha << "order " << g.underlying->order() << ", isomorphic to Q8 " << iso << ", projection fibration " << fib;
    return {g.underlying->order() == 8 && iso && fib, s.str()};
}

Outcome counterexample(const Catalog& c) {
    const auto& h = c.hom("c33_to_c3");
    auto r = analyze(h);
    const auto m = oracle::raw(*h.source());
    const auto n = oracle::raw(*h.target());
    const auto s = oracle::raw_map(h);
    const auto pc = oracle::pcar_set(m, n, s);
    const auto ca = oracle::car_set(m, n, s);
    const bool agrees = std::vector<int>(r.pcar.begin(), r.pcar.end()) == pc &&
                        std::vector<int>(r.car.begin(), r.car.end()) == ca;
    std::ostringstream out;
    out << std::boolalpha << "prefibration " << r.is_prefibration << ", fibration " << r.is_fibration << ", |Pcar| " << r.pcar.size()
        << ", |Car| " << r.car.size() << ", oracle agrees " << agrees;
    return {r.is_prefibration && !r.is_fibration && r.pcar.size() == 3 && r.car.size() == 1 && agrees, out.str()};
}

Outcome lemma_ledger(const Catalog& c) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t max_order = 0;
    for (const auto& [id, h] : c.homs) max_order = std::max({max_order, h.source()->order(), h.target()->order()});
    auto rep = run_suite(c, "fibration-analysis");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream s;
    s << c.homs.size() << " homomorphisms (max order " << max_order << "), " << rep.entries.size() << " verdicts, "
      << rep.failures() << " violations, " << secs << " s";
    for (const auto& e : rep.entries) {
        if (!e.verdict.pass) {
            s << "; first: " << e.verdict.anchor << " on " << e.subject << " (" << e.verdict.witness << ")";
            break;
        }
    }
    return {c.homs.size() >= 20 && max_order <= 12 && rep.ok() && secs <= 60.0, s.str()};
}

Outcome round_trip_a(const Catalog& c) {
    std::size_t checked = 0, failed = 0;
    for (const auto& [id, h] : c.homs) {
        if (!analyze(h).is_prefibration) continue;
        ++checked;
        if (!reconstruct(canonical_cleavage(h)).ok()) ++failed;
    }
    return {checked > 0 && failed == 0, std::to_string(checked) + " prefibrations, " + std::to_string(failed) + " failures"};
}

Outcome round_trip_b(const Catalog& c) {
    std::size_t checked = 0, failed = 0;
    for (const auto& [id, a] : c.actions) {
        if (!validate_lax(*a).ok()) continue;
        ++checked;
        auto g = groth(a);
        auto back = extract_action(canonical_cleavage(g.projection));
        if (!relate_actions(*a, *back)) ++failed;
    }
    return {checked > 0 && failed == 0, std::to_string(checked) + " actions, " + std::to_string(failed) + " failures"};
}

Outcome dichotomy(const Catalog& c) {
    std::size_t checked = 0, failed = 0, pseudo = 0;
    auto one = [&](const MonoidHom& h) {
        auto r = analyze(h);
        if (!r.is_prefibration) return;
        ++checked;
        const bool p = validate_lax(*extract_action(canonical_cleavage(r))).is_pseudo;
        pseudo += p;
        if (p != r.is_fibration) ++failed;
    };
    for (const auto& [id, h] : c.homs) one(h);
    for (const auto& [id, a] : c.actions)
        if (validate_lax(*a).ok()) one(groth(a).projection);
    std::ostringstream s;
    s << checked << " prefibrations (" << pseudo << " pseudo, " << checked - pseudo << " lax only), " << failed
      << " mismatches";
    return {checked > 0 && failed == 0 && pseudo < checked, s.str()};
}

Outcome h2_small(const Catalog& c) {
    const auto& m = c.module("c2_on_c2_trivial");
    const auto classes = h2(m, true);
    const auto b = verify_h2_bijection(m, true);
    oracle::Module om{oracle::raw(*m.acting()), oracle::raw(*m.carrier()), {m.phi_table().begin(), m.phi_table().end()}};
    const auto cs = oracle::cocycles(om, true);
    const int oc = oracle::h2_count(om, cs);
    const int og = oracle::congruence_count(om, cs);
    std::ostringstream s;
    s << classes.size() << " classes, " << b.congruence_classes << " congruence classes, oracle " << oc << "/" << og;
    return {classes.size() == 2 && b.congruence_classes == 2 && b.ok() && oc == 2 && og == 2, s.str()};
}

Outcome aut_oracle(const Catalog& c) {
    std::size_t checked = 0, failed = 0;
    std::string first;
    for (const auto& [id, h] : c.homs) {
        if (h.source()->order() > 8 || !regular_schreier(h)) continue;
        ++checked;
        std::set<Perm> param, brute, literal;
        for (const auto& t : aut_A(canonical_cleavage(h))) param.insert(t.psi);
        for (const auto& p : aut_A_bruteforce(h)) brute.insert(p);
        for (const auto& p : oracle::aut_A(oracle::raw(*h.source()), oracle::raw(*h.target()), oracle::raw_map(h)))
            literal.insert(Perm(p.begin(), p.end()));
        if (param != brute || param != literal) {
            ++failed;
            if (first.empty()) first = id;
        }
    }
    std::string d = std::to_string(checked) + " regular extensions, " + std::to_string(failed) + " discrepancies";
    if (!first.empty()) d += " (first " + first + ")";
    return {checked > 0 && failed == 0, d};
}

bool trivial_extension(const MonoidHom& h) {
    if (!regular_schreier(h)) return false;
    auto act = extract_action(canonical_cleavage(h));
    const auto& a = *act->carrier();
    for (Elem g : act->gamma_table())
        if (g != a.identity()) return false;
    for (Elem x = 0; x < a.order(); ++x)
        for (Elem n = 0; n < act->acting()->order(); ++n)
            if (act->phi(n, x) != x) return false;
    return true;
}

Outcome exact(const Catalog& c) {
    std::vector<std::string> ids{"q8_over_klein4", "c4_to_c2"};
    for (const auto& [id, h] : c.homs)
        if (trivial_extension(h) && h.target()->order() > 1 && h.source()->order() > h.target()->order()) ids.push_back(id);
    std::size_t failed = 0, cleavages = 0;
    std::string list, first;
    for (const auto& id : ids) {
        auto r = verify_exact_sequences(canonical_cleavage(c.hom(id)));
        cleavages += r.cleavages_checked;
        if (!r.ok() || r.sampled) {
            ++failed;
            if (first.empty()) first = id;
        }
        list += (list.empty() ? "" : ",") + id;
    }
    std::string d = std::to_string(ids.size()) + " extensions [" + list + "], " + std::to_string(cleavages) +
                    " cleavages swept, " + std::to_string(failed) + " failures";
    if (!first.empty()) d += " (first " + first + ")";
    return {failed == 0 && ids.size() >= 5, d};
}

Outcome z1_check(const Catalog& c) {
    std::size_t checked = 0, failed = 0;
    for (const auto& [id, h] : c.homs) {
        if (!regular_schreier(h)) continue;
        ++checked;
        if (!z1_iso(canonical_cleavage(h)).ok()) ++failed;
    }
    auto v = z1_iso(canonical_cleavage(c.hom("klein4_to_c2")));
    auto w = z1_iso(canonical_cleavage(c.hom("c4_to_c2")));
    std::ostringstream s;
    s << checked << " regular extensions, " << failed << " failures; C2/C2: |Z1| " << v.cocycles.size() << ", |Aut^{A,N}| "
      << v.aut_AN_size << " (split), " << w.cocycles.size() << "/" << w.aut_AN_size << " (cyclic)";
    const bool small = v.cocycles.size() == 2 && v.aut_AN_size == 2 && w.cocycles.size() == 2 && w.aut_AN_size == 2;
    return {checked > 0 && failed == 0 && small, s.str()};
}

} // namespace

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? std::filesystem::path(argv[1]) : default_catalog_dir();
    Catalog catalog;
    try {
        catalog = load_catalog(dir);
    } catch (const std::exception& e) {
        std::cerr << "cannot load catalog " << dir << ": " << e.what() << "\n";
        return 100;
    }

    const std::vector<std::pair<std::string, std::function<Outcome(const Catalog&)>>> criteria{
        {"quaternion reproduction", quaternion},
        {"C(3,3) counterexample", counterexample},
        {"lemma ledger", lemma_ledger},
        {"round trip A (reconstruction)", round_trip_a},
        {"round trip B (re-extracted actions)", round_trip_b},
        {"lax/pseudo dichotomy", dichotomy},
        {"H2 of C2 in C2", h2_small},
        {"automorphism oracle equivalence", aut_oracle},
        {"exact sequences", exact},
        {"Z1 isomorphism", z1_check},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second(catalog);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures;
}
