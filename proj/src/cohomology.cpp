#include "schreier/cohomology.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace schreier {

namespace {

// Pairs (p,q) grouped by the largest of p, q, pq.
std::vector<std::vector<std::pair<Elem, Elem>>> pair_schedule(const FiniteMonoid& n) {
    std::vector<std::vector<std::pair<Elem, Elem>>> checks(n.order());
    for (Elem p = 0; p < n.order(); ++p) {
        for (Elem q = 0; q < n.order(); ++q) checks[std::max({p, q, n.mul(p, q)})].emplace_back(p, q);
    }
    return checks;
}

std::uint64_t pointed_map_count(std::size_t base, std::size_t values, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (std::size_t i = 1; i < base; ++i) {
        if (values != 0 && count > cap / values) return cap + 1;
        count *= values;
    }
    return count;
}

Table ones(const NModule& mod) {
    const std::size_t nn = mod.acting()->order();
    return Table(nn * nn, mod.carrier()->identity());
}

NModule module_of(const Cleavage& cl) {
    return NModule(cl.hom.target(), cl.carrier(), extract_action(cl)->phi_table());
}

// A-index of every element of M in the image of iota.
std::vector<Elem> iota_inverse(const ExtensionRecord& e) {
    std::vector<Elem> inv(e.total->order(), kNoElem);
    for (Elem a = 0; a < e.iota.map().size(); ++a) inv[e.iota(a)] = a;
    return inv;
}

Table cocycle_of(const ExtensionRecord& e, const Cleavage& cl) {
    const auto inv = iota_inverse(e);
    const auto act = extract_action(cl);
    Table out(act->gamma_table().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = inv[cl.iota(act->gamma_table()[i])];
    return out;
}

Table lambda1_table(const Perm& theta, const LaxAction& act) {
    const auto& a = *act.carrier();
    Table out(act.gamma_table().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Elem g = act.gamma_table()[i];
        out[i] = a.mul(g, a.inverse(theta[g]));
    }
    return out;
}

Table lambda2_table(const Perm& eta, const LaxAction& act) {
    const auto& a = *act.carrier();
    const std::size_t nn = act.acting()->order();
    Table out(nn * nn);
    for (Elem p = 0; p < nn; ++p) {
        for (Elem q = 0; q < nn; ++q) out[p * nn + q] = a.mul(act.gamma(eta[p], eta[q]), a.inverse(act.gamma(p, q)));
    }
    return out;
}

LaxActionPtr regular_action(const Cleavage& cl) {
    auto act = extract_action(cl);
    if (!act->gamma_invertible()) throw Error(ErrorKind::NotRegular, "extracted cocycle is not unit-valued");
    return act;
}

Verdict verdict(std::string anchor) { return Verdict{std::move(anchor), true, {}}; }

void fail(Verdict& v, std::string witness) {
    if (v.pass) {
        v.pass = false;
        v.witness = std::move(witness);
    }
}

} // namespace

NModule::NModule(MonoidPtr acting, MonoidPtr carrier, std::vector<Elem> phi) {
    if (!carrier->is_commutative()) throw Error(ErrorKind::NotCommutative, "module carrier must be commutative");
    action_ = std::make_shared<const LaxAction>(strictify(acting, carrier, std::move(phi)));
}

LaxActionPtr NModule::with_gamma(std::vector<Elem> gamma) const {
    return std::make_shared<const LaxAction>(acting(), carrier(), phi_table(), std::move(gamma));
}

bool is_cocycle(const NModule& mod, const Table& g) {
    const auto& n = *mod.acting();
    const auto& a = *mod.carrier();
    const std::size_t nn = n.order();
    if (g.size() != nn * nn) return false;
    if (std::any_of(g.begin(), g.end(), [&](Elem v) { return v >= a.order(); })) return false;
    auto at = [&](Elem p, Elem q) { return g[p * nn + q]; };
    for (Elem p = 0; p < nn; ++p) {
        if (at(p, n.identity()) != a.identity() || at(n.identity(), p) != a.identity()) return false;
    }
    for (Elem p = 0; p < nn; ++p) {
        for (Elem q = 0; q < nn; ++q) {
            for (Elem k = 0; k < nn; ++k) {
                if (a.mul(at(n.mul(p, q), k), mod.phi(k, at(p, q))) != a.mul(at(p, n.mul(q, k)), at(q, k))) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_regular(const NModule& mod, const Table& g) {
    return std::all_of(g.begin(), g.end(), [&](Elem v) { return mod.carrier()->is_unit(v); });
}

std::vector<Table> enumerate_cocycles(const NModule& mod, bool regular_only, std::uint64_t budget) {
    const auto& n = *mod.acting();
    const auto& a = *mod.carrier();
    const std::size_t nn = n.order();
    const Elem one = n.identity();

    // Free cells in row-major order; slot[p*nn+q] is the cell's position or -1.
    std::vector<std::size_t> cells;
    std::vector<long> slot(nn * nn, -1);
    for (Elem p = 0; p < nn; ++p) {
        for (Elem q = 0; q < nn; ++q) {
            if (p != one && q != one) {
                slot[p * nn + q] = long(cells.size());
                cells.push_back(p * nn + q);
            }
        }
    }
    // Each non-identity triple is checked once its last free cell is set.
    std::vector<std::vector<std::array<Elem, 3>>> triples(cells.size());
    for (Elem p = 0; p < nn; ++p) {
        for (Elem q = 0; q < nn; ++q) {
            for (Elem k = 0; k < nn; ++k) {
                if (p == one || q == one || k == one) continue;
                long last = -1;
                for (std::size_t c : {n.mul(p, q) * nn + k, std::size_t(p) * nn + q, p * nn + n.mul(q, k),
                                      std::size_t(q) * nn + k}) {
                    last = std::max(last, slot[c]);
                }
                triples[std::size_t(last)].push_back({p, q, k});
            }
        }
    }
    std::vector<Elem> values;
    if (regular_only) {
        values = a.unit_elements();
    } else {
        values.resize(a.order());
        std::iota(values.begin(), values.end(), Elem(0));
    }

    Table g(nn * nn, a.identity());
    auto holds = [&](const std::array<Elem, 3>& t) {
        const auto [p, q, k] = t;
        return a.mul(g[n.mul(p, q) * nn + k], mod.phi(k, g[p * nn + q])) ==
               a.mul(g[p * nn + n.mul(q, k)], g[q * nn + k]);
    };
    std::vector<Table> out;
    std::uint64_t nodes = 0;
    std::function<void(std::size_t)> search = [&](std::size_t i) {
        if (i == cells.size()) {
            out.push_back(g);
            return;
        }
        for (Elem v : values) {
            if (++nodes > budget) {
                throw SizeLimitError(std::size_t(nodes), std::size_t(budget),
                                     "cocycle search exceeded " + std::to_string(budget) + " nodes");
            }
            g[cells[i]] = v;
            if (std::all_of(triples[i].begin(), triples[i].end(), holds)) search(i + 1);
        }
        g[cells[i]] = a.identity();
    };
    search(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Elem>> cohomologous(const NModule& mod, const Table& g, const Table& gp) {
    const auto& n = *mod.acting();
    const auto& a = *mod.carrier();
    const std::size_t nn = n.order();
    const auto checks = pair_schedule(n);
    std::vector<Elem> tau(nn, a.identity());
    auto ok = [&](Elem p, Elem q) {
        return a.mul(g[p * nn + q], tau[n.mul(p, q)]) == a.mul(a.mul(gp[p * nn + q], tau[q]), mod.phi(q, tau[p]));
    };
    std::function<bool(Elem)> search = [&](Elem i) -> bool {
        if (i == nn) return true;
        for (Elem u : a.unit_elements()) {
            if (i == n.identity() && u != a.identity()) continue;
            tau[i] = u;
            if (std::all_of(checks[i].begin(), checks[i].end(), [&](const auto& pq) { return ok(pq.first, pq.second); }) &&
                search(i + 1)) {
                return true;
            }
        }
        return false;
    };
    if (search(0)) return tau;
    return std::nullopt;
}

Table apply_coboundary(const NModule& mod, const Table& g, const std::vector<Elem>& tau) {
    const auto& n = *mod.acting();
    const auto& a = *mod.carrier();
    const std::size_t nn = n.order();
    Table out(g.size());
    for (Elem p = 0; p < nn; ++p) {
        for (Elem q = 0; q < nn; ++q) {
            const Elem denom = a.inverse(a.mul(tau[q], mod.phi(q, tau[p])));
            out[p * nn + q] = a.mul(a.mul(g[p * nn + q], tau[n.mul(p, q)]), denom);
        }
    }
    return out;
}

namespace {

template <class F>
void for_each_coboundary(const NModule& mod, std::uint64_t budget, F&& f) {
    const auto& n = *mod.acting();
    const auto& a = *mod.carrier();
    const auto count = pointed_map_count(n.order(), a.unit_elements().size(), budget);
    if (count > budget) {
        throw SizeLimitError(std::size_t(count), std::size_t(budget), "coboundary orbit too large to enumerate");
    }
    for_each_pointed_map(n.order(), n.identity(), a.unit_elements(), a.identity(),
                         [&](const std::vector<Elem>& tau) {
                             f(tau);
                             return true;
                         });
}

} // namespace

Table class_representative(const NModule& mod, const Table& g) {
    Table best = g;
    for_each_coboundary(mod, kDefaultSearchBudget, [&](const std::vector<Elem>& tau) {
        auto t = apply_coboundary(mod, g, tau);
        if (t < best) best = std::move(t);
    });
    return best;
}

std::vector<CocycleClass> h2(const NModule& mod, bool regular, std::uint64_t budget) {
    const auto cocycles = enumerate_cocycles(mod, regular, budget);
    std::set<Table> seen;
    std::vector<CocycleClass> out;
    for (const auto& g : cocycles) {
        if (seen.count(g)) continue;
        std::set<Table> orbit;
        for_each_coboundary(mod, budget, [&](const std::vector<Elem>& tau) { orbit.insert(apply_coboundary(mod, g, tau)); });
        seen.insert(orbit.begin(), orbit.end());
        out.push_back(CocycleClass{*orbit.begin(), orbit.size()});
    }
    std::sort(out.begin(), out.end(),
              [](const CocycleClass& x, const CocycleClass& y) { return x.representative < y.representative; });
    return out;
}

ExtensionRecord extension_from_cocycle(const NModule& mod, const Table& gamma) {
    const auto g = groth(mod.with_gamma(gamma));
    const bool regular = analyze(g.projection).is_fibration;
    return ExtensionRecord{mod, g.underlying, g.inclusion, g.projection, regular};
}

ExtensionRecord extension_from_hom(const MonoidHom& sigma) {
    const auto report = analyze(sigma);
    const auto cl = canonical_cleavage(report);
    NModule mod = module_of(cl);
    MonoidHom iota(cl.carrier(), sigma.source(), cl.kernel.to_parent);
    return ExtensionRecord{std::move(mod), sigma.source(), std::move(iota), sigma, report.is_fibration};
}

std::vector<Verdict> schreier_conditions(const ExtensionRecord& e) {
    const auto& m = *e.total;
    const auto& a = *e.module.carrier();
    auto trivial = verdict("schreier_composite_trivial");
    for (Elem x = 0; x < a.order(); ++x) {
        if (e.sigma(e.iota(x)) != e.sigma.target()->identity()) fail(trivial, "a=" + a.name(x));
    }
    const auto report = analyze(e.sigma);
    auto pre = verdict("schreier_prefibration");
    if (!report.is_prefibration) fail(pre, "projection is not a prefibration");
    auto exact = verdict("schreier_kernel_iso");
    if (!e.iota.is_injective()) fail(exact, "inclusion not injective");
    if (image(e.iota).elements != report.kernel) fail(exact, "inclusion image differs from the kernel");
    auto compat = verdict("schreier_action_compatible");
    for (Elem x = 0; x < a.order(); ++x) {
        for (Elem y = 0; y < m.order(); ++y) {
            if (m.mul(e.iota(x), y) != m.mul(y, e.iota(e.module.phi(e.sigma(y), x)))) {
                fail(compat, "(" + a.name(x) + "," + m.name(y) + ")");
            }
        }
    }
    return {trivial, pre, exact, compat};
}

std::optional<MonoidHom> congruent(const ExtensionRecord& e, const ExtensionRecord& ep) {
    if (!(e.module == ep.module)) return std::nullopt;
    const auto cl = canonical_cleavage(e.sigma);
    const auto rp = analyze(ep.sigma);
    const auto clp = canonical_cleavage(rp);
    const auto inv = iota_inverse(e);
    const auto& a = *e.module.carrier();
    const auto& n = *e.sigma.target();
    const auto& m = *e.total;
    const auto& mp = *ep.total;
    if (m.order() != mp.order()) return std::nullopt;

    std::optional<MonoidHom> found;
    const auto count = pointed_map_count(n.order(), a.unit_elements().size(), kDefaultSearchBudget);
    if (count > kDefaultSearchBudget) {
        throw SizeLimitError(std::size_t(count), std::size_t(kDefaultSearchBudget), "congruence search too large");
    }
    std::vector<Elem> beta(m.order());
    for_each_pointed_map(n.order(), n.identity(), a.unit_elements(), a.identity(), [&](const std::vector<Elem>& t) {
        for (Elem x = 0; x < m.order(); ++x) {
            const Elem b = e.sigma(x);
            const Elem ax = inv[cl.iota(cl.xi[x])];
            beta[x] = mp.mul(mp.mul(clp.kappa[b], ep.iota(t[b])), ep.iota(ax));
        }
        if (audit_hom(m, mp, beta)) return true;
        for (Elem x : analyze(e.sigma).pcar) {
            if (!rp.in_pcar(beta[x])) return true;
        }
        found.emplace(e.total, ep.total, beta);
        return false;
    });
    if (found && (!found->is_bijective() || !(compose(ep.sigma, *found) == e.sigma) ||
                  !(compose(*found, e.iota) == ep.iota))) {
        found.reset();
    }
    return found;
}

H2Bijection verify_h2_bijection(const NModule& mod, bool regular, std::uint64_t budget) {
    H2Bijection out;
    const auto cocycles = enumerate_cocycles(mod, regular, budget);
    const auto classes = h2(mod, regular, budget);
    out.cocycles = cocycles.size();
    out.classes = classes.size();

    std::map<Table, std::size_t> class_of;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for_each_coboundary(mod, budget, [&](const std::vector<Elem>& tau) {
            class_of[apply_coboundary(mod, classes[c].representative, tau)] = c;
        });
    }

    std::vector<ExtensionRecord> exts;
    exts.reserve(cocycles.size());
    for (const auto& g : cocycles) exts.push_back(extension_from_cocycle(mod, g));

    auto schreier = verdict("h2_extensions_are_schreier");
    auto reg = verdict("h2_regular_iff_fibration");
    for (std::size_t i = 0; i < exts.size(); ++i) {
        for (const auto& v : schreier_conditions(exts[i])) {
            if (!v.pass) fail(schreier, "cocycle " + std::to_string(i) + ": " + v.anchor);
        }
        if (exts[i].regular != is_regular(mod, cocycles[i])) fail(reg, "cocycle " + std::to_string(i));
    }

    std::vector<std::size_t> parent(exts.size());
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = root(parent[i]);
    };
    auto iff = verdict("h2_cohomologous_iff_congruent");
    for (std::size_t i = 0; i < exts.size(); ++i) {
        for (std::size_t j = i + 1; j < exts.size(); ++j) {
            const bool cong = congruent(exts[i], exts[j]).has_value();
            const bool coh = class_of.at(cocycles[i]) == class_of.at(cocycles[j]);
            if (cong != coh) fail(iff, "cocycles " + std::to_string(i) + " and " + std::to_string(j));
            if (cong) parent[root(i)] = root(j);
        }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < exts.size(); ++i) roots.insert(root(i));
    out.congruence_classes = roots.size();
    auto counts = verdict("h2_class_counts_equal");
    if (out.congruence_classes != out.classes) {
        fail(counts, std::to_string(out.classes) + " classes vs " + std::to_string(out.congruence_classes) +
                         " congruence classes");
    }

    // Each extension comes back from its own canonical cleavage in its own class.
    auto surj = verdict("h2_extensions_recovered");
    for (std::size_t i = 0; i < exts.size(); ++i) {
        const auto cl = canonical_cleavage(exts[i].sigma);
        const auto g = cocycle_of(exts[i], cl);
        auto it = class_of.find(g);
        if (it == class_of.end() || it->second != class_of.at(cocycles[i])) {
            fail(surj, "cocycle " + std::to_string(i));
            continue;
        }
        if (!congruent(exts[i], extension_from_cocycle(mod, g))) fail(surj, "no congruence for cocycle " + std::to_string(i));
    }
    out.verdicts = {schreier, reg, iff, counts, surj};
    return out;
}

void require_regular_schreier(const Cleavage& cl) {
    if (!cl.carrier()->is_commutative()) throw Error(ErrorKind::NotRegularSchreier, "kernel is not commutative");
    if (!analyze(cl.hom).is_fibration) throw Error(ErrorKind::NotRegularSchreier, "projection is not a fibration");
    const auto act = extract_action(cl);
    if (!act->gamma_invertible()) throw Error(ErrorKind::NotRegularSchreier, "cocycle is not unit-valued");
    try {
        (void)strictify(act->acting(), act->carrier(), act->phi_table());
    } catch (const Error& e) {
        throw Error(ErrorKind::NotRegularSchreier, std::string("kernel action is not strict: ") + e.what());
    }
}

AutSubgroups aut_subgroups(const Cleavage& cl) {
    require_regular_schreier(cl);
    const auto act = extract_action(cl);
    const auto& a = *cl.carrier();
    const auto& n = *cl.hom.target();
    AutSubgroups out;
    out.triples = aut_A(cl);
    Perm id_a(a.order()), id_n(n.order());
    std::iota(id_a.begin(), id_a.end(), Elem(0));
    std::iota(id_n.begin(), id_n.end(), Elem(0));
    for (std::size_t i = 0; i < out.triples.size(); ++i) {
        const bool th = out.triples[i].theta == id_a;
        const bool et = out.triples[i].eta == id_n;
        if (th && et) out.aut_AN.push_back(i);
        if (th) out.aut_A_fix.push_back(i);
        if (et) out.aut_N_fix.push_back(i);
    }
    for (const auto& theta : automorphisms(cl.carrier())) {
        bool ok = true;
        for (Elem b = 0; b < n.order() && ok; ++b) {
            for (Elem x = 0; x < a.order() && ok; ++x) ok = theta[act->phi(b, x)] == act->phi(b, theta[x]);
        }
        if (ok) out.c1.push_back(theta);
    }
    for (const auto& eta : automorphisms(cl.hom.target())) {
        bool ok = true;
        for (Elem b = 0; b < n.order() && ok; ++b) {
            for (Elem x = 0; x < a.order() && ok; ++x) ok = act->phi(eta[b], x) == act->phi(b, x);
        }
        if (ok) out.c2.push_back(eta);
    }

    const auto c = compute_C(cl);
    std::vector<Perm> c1_from_c, c2_from_c;
    for (const auto& [theta, eta] : c.pairs) {
        if (eta == id_n) c1_from_c.push_back(theta);
        if (theta == id_a) c2_from_c.push_back(eta);
    }
    auto c1v = verdict("c1_matches_c");
    if (c1_from_c != out.c1) fail(c1v, "direct C1 differs from the slice of C");
    auto c2v = verdict("c2_matches_c");
    if (c2_from_c != out.c2) fail(c2v, "direct C2 differs from the slice of C");

    auto index_of = [&](const Perm& psi) -> std::size_t {
        auto it = std::lower_bound(out.triples.begin(), out.triples.end(), psi,
                                   [](const AutTriple& t, const Perm& p) { return t.psi < p; });
        if (it == out.triples.end() || it->psi != psi) return std::size_t(-1);
        return std::size_t(it - out.triples.begin());
    };
    auto check_rho = [&](const std::vector<std::size_t>& group, bool use_theta, const std::vector<Perm>& target,
                         const char* anchor) {
        auto v = verdict(anchor);
        for (std::size_t i : group) {
            const Perm& img = use_theta ? out.triples[i].theta : out.triples[i].eta;
            if (!std::binary_search(target.begin(), target.end(), img)) fail(v, "image outside target subgroup");
            for (std::size_t j : group) {
                const std::size_t k = index_of(compose_perm(out.triples[i].psi, out.triples[j].psi));
                if (k == std::size_t(-1) || !std::binary_search(group.begin(), group.end(), k)) {
                    fail(v, "subgroup not closed");
                    continue;
                }
                const Perm& pk = use_theta ? out.triples[k].theta : out.triples[k].eta;
                const Perm& pj = use_theta ? out.triples[j].theta : out.triples[j].eta;
                if (pk != compose_perm(img, pj)) fail(v, "not multiplicative");
            }
        }
        return v;
    };
    out.verdicts = {c1v, c2v, check_rho(out.aut_N_fix, true, out.c1, "rho1_homomorphism"),
                    check_rho(out.aut_A_fix, false, out.c2, "rho2_homomorphism")};
    return out;
}

std::vector<std::vector<Elem>> z1(const NModule& mod) {
    const auto& n = *mod.acting();
    const auto& a = *mod.carrier();
    const std::size_t nn = n.order();
    const auto checks = pair_schedule(n);
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> xi(nn, a.identity());
    auto ok = [&](Elem p, Elem q) { return xi[n.mul(p, q)] == a.mul(mod.phi(q, xi[p]), xi[q]); };
    std::function<void(Elem)> search = [&](Elem i) {
        if (i == nn) {
            out.push_back(xi);
            return;
        }
        for (Elem u : a.unit_elements()) {
            if (i == n.identity() && u != a.identity()) continue;
            xi[i] = u;
            if (std::all_of(checks[i].begin(), checks[i].end(), [&](const auto& pq) { return ok(pq.first, pq.second); })) {
                search(i + 1);
            }
        }
        xi[i] = a.identity();
    };
    search(0);
    return out;
}

Z1Iso z1_iso(const Cleavage& cl) {
    const auto subs = aut_subgroups(cl);
    const auto mod = module_of(cl);
    const auto& m = *cl.hom.source();
    const auto& a = *cl.carrier();
    Z1Iso out;
    out.cocycles = z1(mod);
    out.aut_AN_size = subs.aut_AN.size();

    std::set<Perm> aut_an;
    for (std::size_t i : subs.aut_AN) aut_an.insert(subs.triples[i].psi);

    auto formula = verdict("z1_formulas_agree");
    auto member = verdict("z1_lands_in_aut_AN");
    for (const auto& xi : out.cocycles) {
        Perm psi(m.order());
        for (Elem x = 0; x < m.order(); ++x) {
            const Elem b = cl.hom(x);
            psi[x] = m.mul(x, cl.iota(xi[b]));
            const Elem param = m.mul(cl.kappa[b], cl.iota(a.mul(xi[b], cl.xi[x])));
            if (param != psi[x]) fail(formula, m.name(x));
        }
        if (!aut_an.count(psi)) fail(member, "psi outside Aut^{A,N}");
        out.automorphisms.push_back(std::move(psi));
    }
    auto bij = verdict("z1_bijective");
    const std::set<Perm> distinct(out.automorphisms.begin(), out.automorphisms.end());
    if (distinct.size() != out.cocycles.size()) fail(bij, "two cocycles give one automorphism");
    if (distinct != aut_an) fail(bij, "Aut^{A,N} has elements outside the image");

    auto hom = verdict("z1_homomorphism");
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t i = 0; i < out.cocycles.size(); ++i) index[out.cocycles[i]] = i;
    std::vector<Elem> one(cl.kappa.size(), a.identity());
    if (!index.count(one) || out.automorphisms[index.at(one)] != [&] {
            Perm id(m.order());
            std::iota(id.begin(), id.end(), Elem(0));
            return id;
        }()) {
        fail(hom, "trivial cocycle does not give the identity");
    }
    for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
        for (std::size_t j = 0; j < out.cocycles.size(); ++j) {
            std::vector<Elem> prod(one.size());
            for (Elem b = 0; b < prod.size(); ++b) prod[b] = a.mul(out.cocycles[i][b], out.cocycles[j][b]);
            auto it = index.find(prod);
            if (it == index.end()) {
                fail(hom, "Z^1 not closed under products");
                continue;
            }
            if (out.automorphisms[it->second] != compose_perm(out.automorphisms[i], out.automorphisms[j])) {
                fail(hom, "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    out.verdicts = {formula, member, bij, hom};
    append(out.verdicts, subs.verdicts);
    return out;
}

Table lambda1(const Perm& theta, const Cleavage& cl) {
    const auto act = regular_action(cl);
    return class_representative(module_of(cl), lambda1_table(theta, *act));
}

Table lambda2(const Perm& eta, const Cleavage& cl) {
    const auto act = regular_action(cl);
    return class_representative(module_of(cl), lambda2_table(eta, *act));
}

ExactnessReport verify_exact_sequences(const Cleavage& cl, std::uint64_t seed) {
    const auto subs = aut_subgroups(cl);
    const auto mod = module_of(cl);
    const auto act = regular_action(cl);
    const auto trivial = class_representative(mod, ones(mod));
    ExactnessReport out;

    std::vector<Cleavage> sweep;
    const auto& units_a = cl.carrier()->unit_elements();
    const auto& n = *cl.hom.target();
    constexpr std::size_t kFullSweep = 256;
    constexpr std::size_t kSamples = 32;
    if (cleavage_count(cl) <= kFullSweep) {
        for_each_pointed_map(n.order(), n.identity(), units_a, cl.carrier()->identity(),
                             [&](const std::vector<Elem>& eta) {
                                 sweep.push_back(twist(cl, eta));
                                 return true;
                             });
    } else {
        out.sampled = true;
        std::mt19937_64 rng(seed);
        for (std::size_t s = 0; s < kSamples; ++s) {
            std::vector<Elem> eta(n.order(), cl.carrier()->identity());
            for (Elem b = 0; b < n.order(); ++b) {
                if (b != n.identity()) eta[b] = units_a[rng() % units_a.size()];
            }
            sweep.push_back(twist(cl, eta));
        }
    }
    out.cleavages_checked = sweep.size();

    auto run = [&](const std::vector<std::size_t>& fixed_other, bool theta_side, const std::vector<Perm>& c,
                   const std::string& tag) {
        std::vector<Verdict> vs;
        auto inj = verdict(tag + "_injective");
        for (std::size_t i : subs.aut_AN) {
            if (!std::binary_search(fixed_other.begin(), fixed_other.end(), i)) fail(inj, "Aut^{A,N} element missing");
        }
        auto ker = verdict(tag + "_kernel");
        std::vector<std::size_t> kernel;
        std::set<Perm> image;
        for (std::size_t i : fixed_other) {
            const Perm& img = theta_side ? subs.triples[i].theta : subs.triples[i].eta;
            image.insert(img);
            Perm id(img.size());
            std::iota(id.begin(), id.end(), Elem(0));
            if (img == id) kernel.push_back(i);
        }
        if (kernel != subs.aut_AN) fail(ker, "kernel differs from Aut^{A,N}");

        auto cocycle = verdict(tag + "_lambda_cocycle");
        auto indep = verdict(tag + "_lambda_cleavage_independent");
        auto exact = verdict(tag + "_image_is_lambda_kernel");
        for (const auto& p : c) {
            const auto table = theta_side ? lambda1_table(p, *act) : lambda2_table(p, *act);
            if (!is_cocycle(mod, table)) fail(cocycle, "lambda of a C element is not a cocycle");
            const auto cls = class_representative(mod, table);
            for (std::size_t s = 0; s < sweep.size(); ++s) {
                const auto other = extract_action(sweep[s]);
                const auto t2 = theta_side ? lambda1_table(p, *other) : lambda2_table(p, *other);
                if (class_representative(mod, t2) != cls) fail(indep, "cleavage " + std::to_string(s));
            }
            const bool in_kernel = cls == trivial;
            if (in_kernel != (image.count(p) > 0)) {
                fail(exact, in_kernel ? "trivial obstruction without preimage" : "preimage with nontrivial obstruction");
            }
        }
        for (const auto& img : image) {
            if (!std::binary_search(c.begin(), c.end(), img)) fail(exact, "image outside C");
        }
        vs = {inj, ker, cocycle, indep, exact};
        return vs;
    };
    out.first = run(subs.aut_N_fix, true, subs.c1, "exact1");
    out.first.push_back(subs.verdicts[0]);
    out.first.push_back(subs.verdicts[2]);
    out.second = run(subs.aut_A_fix, false, subs.c2, "exact2");
    out.second.push_back(subs.verdicts[1]);
    out.second.push_back(subs.verdicts[3]);
    return out;
}

} // namespace schreier
