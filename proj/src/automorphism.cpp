#include "schreier/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace schreier {

Perm compose_perm(const Perm& g, const Perm& f) {
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
    return out;
}

Perm invert_perm(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = Elem(i);
    return out;
}

namespace {

Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), Elem(0));
    return p;
}

bool is_bijection(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (Elem x : p) {
        if (x >= p.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// psi(A) = A and psi(Pcar) inside Pcar, assuming psi is a bijective endomorphism.
bool preserves_kernel_and_pcar(const Perm& psi, const CartesianReport& r) {
    for (Elem k : r.kernel) {
        if (!r.in_kernel(psi[k])) return false;
    }
    for (Elem x : r.pcar) {
        if (!r.in_pcar(psi[x])) return false;
    }
    return true;
}

} // namespace

std::vector<AutTriple> aut_A(const Cleavage& cl) {
    const auto report = analyze(cl.hom);
    if (!report.is_prefibration) throw Error(ErrorKind::NotPrefibration, "homomorphism is not a prefibration");
    const auto act = extract_action(cl);
    const auto& a = *cl.carrier();
    const auto& n = *cl.hom.target();
    const auto& m = *cl.hom.source();
    const std::size_t nn = n.order();

    std::vector<std::vector<std::pair<Elem, Elem>>> checks(nn);
    for (Elem p = 0; p < nn; ++p) {
        for (Elem q = 0; q < nn; ++q) checks[std::max({p, q, n.mul(p, q)})].emplace_back(p, q);
    }

    std::vector<AutTriple> out;
    const auto thetas = automorphisms(cl.carrier());
    const auto etas = automorphisms(cl.hom.target());
    for (const auto& theta : thetas) {
        for (const auto& eta : etas) {
            std::vector<std::vector<Elem>> domain(nn);
            bool feasible = true;
            for (Elem b = 0; b < nn && feasible; ++b) {
                for (Elem u : a.unit_elements()) {
                    if (b == n.identity() && u != a.identity()) continue;
                    bool ok = true;
                    for (Elem x = 0; x < a.order() && ok; ++x) {
                        ok = a.mul(act->phi(eta[b], theta[x]), u) == a.mul(u, theta[act->phi(b, x)]);
                    }
                    if (ok) domain[b].push_back(u);
                }
                feasible = !domain[b].empty();
            }
            if (!feasible) continue;

            std::vector<Elem> xi(nn, a.identity());
            auto cocycle_ok = [&](Elem p, Elem q) {
                const Elem lhs = a.mul(a.mul(act->gamma(eta[p], eta[q]), act->phi(eta[q], xi[p])), xi[q]);
                return lhs == a.mul(xi[n.mul(p, q)], theta[act->gamma(p, q)]);
            };
            std::function<void(Elem)> search = [&](Elem i) {
                if (i == nn) {
                    AutTriple t{theta, eta, xi, Perm(m.order()), false};
                    for (Elem x = 0; x < m.order(); ++x) {
                        const Elem b = cl.hom(x);
                        t.psi[x] = m.mul(cl.kappa[eta[b]], cl.iota(a.mul(xi[b], theta[cl.xi[x]])));
                    }
                    t.audited = is_bijection(t.psi) && !audit_hom(m, m, t.psi) &&
                                preserves_kernel_and_pcar(t.psi, report);
                    out.push_back(std::move(t));
                    return;
                }
                for (Elem u : domain[i]) {
                    xi[i] = u;
                    if (std::all_of(checks[i].begin(), checks[i].end(),
                                    [&](const auto& pq) { return cocycle_ok(pq.first, pq.second); })) {
                        search(i + 1);
                    }
                }
            };
            search(0);
        }
    }
    std::sort(out.begin(), out.end(), [](const AutTriple& x, const AutTriple& y) { return x.psi < y.psi; });
    return out;
}

std::vector<Perm> aut_A_bruteforce(const MonoidHom& sigma) {
    const auto& m = *sigma.source();
    constexpr std::size_t kMaxOrder = 8;
    if (m.order() > kMaxOrder) {
        throw SizeLimitError(m.order(), kMaxOrder, "brute-force automorphism scan limited to order 8");
    }
    const auto report = analyze(sigma);
    std::vector<Elem> rest;
    for (Elem x = 0; x < m.order(); ++x) {
        if (x != m.identity()) rest.push_back(x);
    }
    std::vector<Perm> out;
    Perm psi(m.order());
    do {
        psi[m.identity()] = m.identity();
        std::size_t j = 0;
        for (Elem x = 0; x < m.order(); ++x) {
            if (x != m.identity()) psi[x] = rest[j++];
        }
        if (!audit_hom(m, m, psi) && preserves_kernel_and_pcar(psi, report)) out.push_back(psi);
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Perm, Perm> restrict_and_descend(const Perm& psi, const Cleavage& cl) {
    const auto report = analyze(cl.hom);
    if (!report.is_prefibration) throw Error(ErrorKind::NotPrefibration, "homomorphism is not a prefibration");
    const auto& m = *cl.hom.source();
    const auto& n = *cl.hom.target();
    if (psi.size() != m.order() || !is_bijection(psi)) {
        throw Error(ErrorKind::NotHomomorphism, "map is not a bijection of the total monoid");
    }
    if (auto bad = audit_hom(m, m, psi)) throw Error(ErrorKind::NotHomomorphism, *bad);
    for (Elem k : report.kernel) {
        if (!report.in_kernel(psi[k])) {
            throw Error(ErrorKind::NotKernelPreserving, "kernel element " + m.name(k) + " leaves the kernel");
        }
    }
    for (Elem x : report.pcar) {
        if (!report.in_pcar(psi[x])) {
            throw Error(ErrorKind::NotCartesian, "precartesian " + m.name(x) + " maps outside Pcar");
        }
    }
    Perm eta(n.order(), kNoElem);
    for (Elem x = 0; x < m.order(); ++x) {
        Elem& slot = eta[cl.hom(x)];
        const Elem v = cl.hom(psi[x]);
        if (slot != kNoElem && slot != v) {
            throw Error(ErrorKind::NotWellDefined, "fiber of " + n.name(cl.hom(x)) + " is split by psi at " + m.name(x));
        }
        slot = v;
    }
    if (!is_bijection(eta)) throw Error(ErrorKind::NotWellDefined, "induced base map is not a bijection");
    Perm theta(cl.carrier()->order());
    for (Elem a = 0; a < theta.size(); ++a) theta[a] = cl.kernel.from_parent[psi[cl.iota(a)]];
    return {theta, eta};
}

Elem CGroup::find(const Perm& theta, const Perm& eta) const {
    const auto key = std::make_pair(theta, eta);
    auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
    if (it == pairs.end() || *it != key) return kNoElem;
    return Elem(it - pairs.begin());
}

CGroup compute_C(const Cleavage& cl) {
    const auto act = extract_action(cl);
    const auto& a = *cl.carrier();
    const auto& n = *cl.hom.target();
    CGroup c;
    for (const auto& theta : automorphisms(cl.carrier())) {
        for (const auto& eta : automorphisms(cl.hom.target())) {
            std::vector<Elem> alpha(n.order(), kNoElem);
            bool member = true;
            for (Elem b = 0; b < n.order() && member; ++b) {
                for (Elem u : a.unit_elements()) {
                    bool ok = true;
                    for (Elem x = 0; x < a.order() && ok; ++x) {
                        ok = a.mul(act->phi(eta[b], theta[x]), u) == a.mul(u, theta[act->phi(b, x)]);
                    }
                    if (ok) {
                        alpha[b] = u;
                        break;
                    }
                }
                member = alpha[b] != kNoElem;
            }
            if (member) {
                c.pairs.emplace_back(theta, eta);
                c.witness.push_back(std::move(alpha));
            }
        }
    }
    // automorphisms() is sorted, so pairs already are; keep witness aligned regardless.
    std::vector<std::size_t> order(c.pairs.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return c.pairs[i] < c.pairs[j]; });
    CGroup sorted;
    for (std::size_t i : order) {
        sorted.pairs.push_back(c.pairs[i]);
        sorted.witness.push_back(c.witness[i]);
    }
    c = std::move(sorted);

    const Perm id_a = identity_perm(a.order());
    const Perm id_n = identity_perm(n.order());
    if (c.find(id_a, id_n) == kNoElem) {
        c.subgroup = {"c_is_subgroup", false, "identity pair missing"};
        return c;
    }
    for (const auto& [t1, e1] : c.pairs) {
        if (c.find(invert_perm(t1), invert_perm(e1)) == kNoElem) {
            c.subgroup = {"c_is_subgroup", false, "not closed under inverses"};
            return c;
        }
        for (const auto& [t2, e2] : c.pairs) {
            if (c.find(compose_perm(t1, t2), compose_perm(e1, e2)) == kNoElem) {
                c.subgroup = {"c_is_subgroup", false, "not closed under composition"};
                return c;
            }
        }
    }
    return c;
}

RhoReport rho(const Cleavage& cl, const std::vector<AutTriple>& triples, const CGroup& c) {
    RhoReport out;
    Verdict sub{"aut_subgroup", true, {}};
    Verdict into{"rho_into_c", true, {}};
    Verdict hom{"rho_homomorphism", true, {}};
    auto index_of = [&](const Perm& psi) -> Elem {
        auto it = std::lower_bound(triples.begin(), triples.end(), psi,
                                   [](const AutTriple& t, const Perm& p) { return t.psi < p; });
        if (it == triples.end() || it->psi != psi) return kNoElem;
        return Elem(it - triples.begin());
    };
    const std::size_t nm = cl.hom.source()->order();
    if (index_of(identity_perm(nm)) == kNoElem) {
        sub.pass = false;
        sub.witness = "identity missing";
    }
    for (const auto& t : triples) {
        const auto [theta, eta] = restrict_and_descend(t.psi, cl);
        if (theta != t.theta || eta != t.eta) {
            into.pass = false;
            into.witness = "descended pair differs from the parametrization";
        }
        const Elem k = c.find(theta, eta);
        if (k == kNoElem) {
            into.pass = false;
            into.witness = "rho(psi) outside C";
        }
        out.image.push_back(k);
        if (sub.pass && index_of(invert_perm(t.psi)) == kNoElem) {
            sub.pass = false;
            sub.witness = "not closed under inverses";
        }
    }
    for (std::size_t i = 0; i < triples.size(); ++i) {
        for (std::size_t j = 0; j < triples.size(); ++j) {
            const Elem k = index_of(compose_perm(triples[i].psi, triples[j].psi));
            if (k == kNoElem) {
                if (sub.pass) {
                    sub.pass = false;
                    sub.witness = "not closed under composition";
                }
                continue;
            }
            if (hom.pass && (triples[k].theta != compose_perm(triples[i].theta, triples[j].theta) ||
                             triples[k].eta != compose_perm(triples[i].eta, triples[j].eta))) {
                hom.pass = false;
                hom.witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    }
    out.verdicts = {sub, into, hom};
    return out;
}

} // namespace schreier
