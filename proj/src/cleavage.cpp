#include "schreier/cleavage.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace schreier {

namespace {

std::vector<Elem> compute_xi(const MonoidHom& sigma, const MaterializedSubmonoid& ker,
                             const std::vector<Elem>& kappa) {
    const auto& m = *sigma.source();
    std::vector<Elem> xi(m.order(), kNoElem);
    for (Elem n = 0; n < kappa.size(); ++n) {
        for (Elem y = 0; y < ker.to_parent.size(); ++y) {
            const Elem z = m.mul(kappa[n], ker.to_parent[y]);
            if (xi[z] != kNoElem) {
                throw Error(ErrorKind::InvalidCleavage,
                            "kappa(" + sigma.target()->name(n) + ") does not cancel on the kernel");
            }
            xi[z] = y;
        }
    }
    for (Elem x = 0; x < xi.size(); ++x) {
        if (xi[x] == kNoElem) {
            throw Error(ErrorKind::InvalidCleavage, "element " + m.name(x) + " is not reached by its cleavage point");
        }
    }
    return xi;
}

} // namespace

Cleavage make_cleavage(const CartesianReport& r, std::vector<Elem> kappa) {
    if (!r.is_prefibration) throw Error(ErrorKind::NotPrefibration, "homomorphism is not a prefibration");
    const auto& m = *r.hom.source();
    const auto& n = *r.hom.target();
    if (kappa.size() != n.order()) throw Error(ErrorKind::InvalidCleavage, "kappa must have one entry per base element");
    if (kappa[n.identity()] != m.identity()) throw Error(ErrorKind::InvalidCleavage, "kappa(1) != 1");
    for (Elem b = 0; b < kappa.size(); ++b) {
        if (kappa[b] >= m.order() || r.hom(kappa[b]) != b) {
            throw Error(ErrorKind::InvalidCleavage, "kappa(" + n.name(b) + ") does not lie over it");
        }
        if (!r.in_pcar(kappa[b])) {
            throw Error(ErrorKind::InvalidCleavage, "kappa(" + n.name(b) + ") is not precartesian");
        }
    }
    auto ker = materialize(Submonoid{r.hom.source(), r.kernel});
    auto xi = compute_xi(r.hom, ker, kappa);
    return Cleavage{r.hom, std::move(ker), std::move(kappa), std::move(xi)};
}

Cleavage make_cleavage(const MonoidHom& sigma, std::vector<Elem> kappa) {
    return make_cleavage(analyze(sigma), std::move(kappa));
}

Cleavage canonical_cleavage(const CartesianReport& r) {
    if (!r.is_prefibration) throw Error(ErrorKind::NotPrefibration, "homomorphism is not a prefibration");
    const auto& n = *r.hom.target();
    std::vector<Elem> kappa(n.order(), kNoElem);
    for (Elem x : r.pcar) {
        if (kappa[r.hom(x)] == kNoElem) kappa[r.hom(x)] = x;
    }
    kappa[n.identity()] = r.hom.source()->identity();
    return make_cleavage(r, std::move(kappa));
}

Cleavage canonical_cleavage(const MonoidHom& sigma) { return canonical_cleavage(analyze(sigma)); }

Cleavage twist(const Cleavage& cl, const std::vector<Elem>& eta) {
    const auto& a = *cl.carrier();
    const auto& m = *cl.hom.source();
    const auto& n = *cl.hom.target();
    if (eta.size() != n.order() || eta[n.identity()] != a.identity()) {
        throw Error(ErrorKind::InvalidCleavage, "eta must be a pointed map on the base");
    }
    Cleavage out = cl;
    for (Elem b = 0; b < n.order(); ++b) {
        if (eta[b] >= a.order() || !a.is_unit(eta[b])) {
            throw Error(ErrorKind::InvalidCleavage, "eta(" + n.name(b) + ") is not invertible");
        }
        out.kappa[b] = m.mul(cl.kappa[b], cl.iota(eta[b]));
    }
    // x = kappa(n) xi(x) = kappa(n) eta(n) eta(n)^-1 xi(x)
    for (Elem x = 0; x < m.order(); ++x) out.xi[x] = a.mul(a.inverse(eta[cl.hom(x)]), cl.xi[x]);
    return out;
}

std::size_t cleavage_count(const Cleavage& cl) {
    const std::size_t u = cl.carrier()->unit_elements().size();
    const std::size_t n = cl.hom.target()->order();
    std::size_t count = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (count > std::numeric_limits<std::size_t>::max() / u) return std::numeric_limits<std::size_t>::max();
        count *= u;
    }
    return count;
}

std::vector<Cleavage> enumerate_cleavages(const MonoidHom& sigma, std::size_t limit) {
    const auto base = canonical_cleavage(sigma);
    const auto& a = *base.carrier();
    std::vector<Cleavage> out;
    for_each_pointed_map(sigma.target()->order(), sigma.target()->identity(), a.unit_elements(),
                         a.identity(), [&](const std::vector<Elem>& eta) {
                             if (out.size() >= limit) return false;
                             out.push_back(twist(base, eta));
                             return true;
                         });
    return out;
}

std::vector<Elem> relating_eta(const Cleavage& from, const Cleavage& to) {
    if (!(from.hom == to.hom)) throw Error(ErrorKind::InvalidCleavage, "cleavages of different homomorphisms");
    std::vector<Elem> eta(from.kappa.size());
    for (Elem n = 0; n < eta.size(); ++n) eta[n] = from.xi[to.kappa[n]];
    return eta;
}

LaxActionPtr extract_action(const Cleavage& cl) {
    const auto& m = *cl.hom.source();
    const std::size_t nn = cl.hom.target()->order();
    const std::size_t na = cl.carrier()->order();
    std::vector<Elem> phi(na * nn), gamma(nn * nn);
    for (Elem a = 0; a < na; ++a) {
        for (Elem n = 0; n < nn; ++n) phi[a * nn + n] = cl.xi[m.mul(cl.iota(a), cl.kappa[n])];
    }
    for (Elem p = 0; p < nn; ++p) {
        for (Elem q = 0; q < nn; ++q) gamma[p * nn + q] = cl.xi[m.mul(cl.kappa[p], cl.kappa[q])];
    }
    return std::make_shared<const LaxAction>(cl.hom.target(), cl.carrier(), std::move(phi), std::move(gamma));
}

Reconstruction reconstruct(const Cleavage& cl) {
    auto g = groth(extract_action(cl));
    const auto& m = *cl.hom.source();
    std::vector<Elem> map(g.underlying->order());
    for (Elem x = 0; x < map.size(); ++x) {
        auto [n, a] = g.decode(x);
        map[x] = m.mul(cl.kappa[n], cl.iota(a));
    }
    MonoidHom iso(g.underlying, cl.hom.source(), std::move(map));
    Reconstruction out{std::move(g), std::move(iso)};
    out.bijective = out.iso.is_bijective();
    out.over_base = true;
    for (Elem x = 0; x < out.iso.map().size(); ++x) {
        if (cl.hom(out.iso(x)) != out.groth.projection(x)) out.over_base = false;
    }
    out.cartesian = out.over_base && is_cartesian_morphism(out.iso, out.groth.projection, cl.hom);
    return out;
}

LaxHom extract_lax_hom(const MonoidHom& abar, const Cleavage& cl, const Cleavage& cl_prime) {
    if (!same_monoid(abar.source(), cl.hom.source()) || !same_monoid(abar.target(), cl_prime.hom.source()) ||
        !same_monoid(cl.hom.target(), cl_prime.hom.target())) {
        throw Error(ErrorKind::Triangle, "map does not run between the cleaved monoids over one base");
    }
    for (Elem x = 0; x < abar.map().size(); ++x) {
        if (cl_prime.hom(abar(x)) != cl.hom(x)) {
            throw Error(ErrorKind::Triangle, "triangle does not commute at " + abar.source()->name(x));
        }
    }
    std::vector<Elem> alpha(cl.carrier()->order());
    for (Elem a = 0; a < alpha.size(); ++a) alpha[a] = cl_prime.kernel.from_parent[abar(cl.iota(a))];
    std::vector<Elem> tau(cl.kappa.size());
    for (Elem n = 0; n < tau.size(); ++n) tau[n] = cl_prime.xi[abar(cl.kappa[n])];
    return LaxHom(extract_action(cl), extract_action(cl_prime),
                  MonoidHom(cl.carrier(), cl_prime.carrier(), std::move(alpha)), std::move(tau));
}

Transport transport(const Cleavage& from, const Cleavage& to) {
    Transport out{extract_action(from), extract_action(to), relating_eta(from, to), {}};
    const auto& a = *from.carrier();
    const auto& n = *from.hom.target();
    const auto& eta = out.eta;
    Verdict phi{"transport_phi", true, {}};
    Verdict gamma{"transport_gamma", true, {}};
    for (Elem b = 0; b < n.order(); ++b) {
        const Elem inv = a.inverse(eta[b]);
        for (Elem x = 0; x < a.order(); ++x) {
            const Elem expect = a.mul(a.mul(inv, out.before->phi(b, x)), eta[b]);
            if (phi.pass && out.after->phi(b, x) != expect) {
                phi.pass = false;
                phi.witness = "(" + a.name(x) + "," + n.name(b) + ")";
            }
        }
    }
    for (Elem p = 0; p < n.order(); ++p) {
        for (Elem q = 0; q < n.order(); ++q) {
            const Elem lhs = a.mul(a.inverse(eta[n.mul(p, q)]), out.before->gamma(p, q));
            const Elem expect = a.mul(a.mul(lhs, out.before->phi(q, eta[p])), eta[q]);
            if (gamma.pass && out.after->gamma(p, q) != expect) {
                gamma.pass = false;
                gamma.witness = "(" + n.name(p) + "," + n.name(q) + ")";
            }
        }
    }
    out.verdicts = {phi, gamma};
    return out;
}

Verdict transport_tau(const MonoidHom& abar, const Cleavage& cl, const Cleavage& cl_t,
                      const Cleavage& cl_prime, const Cleavage& cl_prime_t) {
    const auto f = extract_lax_hom(abar, cl, cl_prime);
    const auto ft = extract_lax_hom(abar, cl_t, cl_prime_t);
    const auto eta = relating_eta(cl, cl_t);
    const auto eta_p = relating_eta(cl_prime, cl_prime_t);
    const auto& a2 = *cl_prime.carrier();
    Verdict v{"transport_tau", true, {}};
    for (Elem n = 0; n < eta.size(); ++n) {
        const Elem expect = a2.mul(a2.mul(a2.inverse(eta_p[n]), f.tau(n)), f.alpha()(eta[n]));
        if (ft.tau(n) != expect) {
            v.pass = false;
            v.witness = "n=" + cl.hom.target()->name(n);
            break;
        }
    }
    return v;
}

std::optional<std::vector<Elem>> relate_actions(const LaxAction& original, const LaxAction& other) {
    if (!same_monoid(original.acting(), other.acting()) || !same_monoid(original.carrier(), other.carrier())) {
        throw Error(ErrorKind::Shape, "actions must share acting monoid and carrier table");
    }
    const auto& a = *original.carrier();
    const auto& n = *original.acting();
    const std::size_t nn = n.order();
    std::vector<std::vector<Elem>> domain(nn);
    for (Elem b = 0; b < nn; ++b) {
        if (b == n.identity()) {
            domain[b] = {a.identity()};
            continue;
        }
        for (Elem u : a.unit_elements()) {
            bool ok = true;
            for (Elem x = 0; x < a.order() && ok; ++x) {
                ok = other.phi(b, x) == a.mul(a.mul(a.inverse(u), original.phi(b, x)), u);
            }
            if (ok) domain[b].push_back(u);
        }
        if (domain[b].empty()) return std::nullopt;
    }
    auto gamma_ok = [&](const std::vector<Elem>& eta, Elem p, Elem q) {
        const Elem lhs = a.mul(a.inverse(eta[n.mul(p, q)]), original.gamma(p, q));
        return other.gamma(p, q) == a.mul(a.mul(lhs, original.phi(q, eta[p])), eta[q]);
    };
    // checks[i]: pairs whose three base points all have index <= i, with max i
    std::vector<std::vector<std::pair<Elem, Elem>>> checks(nn);
    for (Elem p = 0; p < nn; ++p) {
        for (Elem q = 0; q < nn; ++q) checks[std::max({p, q, n.mul(p, q)})].emplace_back(p, q);
    }
    std::vector<Elem> eta(nn, a.identity());
    std::function<bool(Elem)> search = [&](Elem i) -> bool {
        if (i == nn) return true;
        for (Elem u : domain[i]) {
            eta[i] = u;
            const bool ok = std::all_of(checks[i].begin(), checks[i].end(),
                                        [&](const auto& pq) { return gamma_ok(eta, pq.first, pq.second); });
            if (ok && search(i + 1)) return true;
        }
        return false;
    };
    if (search(0)) return eta;
    return std::nullopt;
}

} // namespace schreier
