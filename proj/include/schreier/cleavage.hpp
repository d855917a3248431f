#pragma once

#include <optional>
#include <vector>

#include "schreier/fibration.hpp"
#include "schreier/grothendieck.hpp"
#include "schreier/lax_action.hpp"

namespace schreier {

/// kappa: N -> M picks a precartesian element above each n with kappa(1) = 1.
/// xi: M -> A is the induced cocleavage, x = kappa(sigma x) xi(x), stored as
/// indices into the materialized kernel.
struct Cleavage {
    MonoidHom hom;
    MaterializedSubmonoid kernel;
    std::vector<Elem> kappa;
    std::vector<Elem> xi;

    const MonoidPtr& carrier() const noexcept { return kernel.monoid; }
    /// Kernel element a (local index) as an element of M.
    Elem iota(Elem a) const noexcept { return kernel.to_parent[a]; }
};

/// Throws Error{NotPrefibration} or Error{InvalidCleavage}.
Cleavage make_cleavage(const MonoidHom& sigma, std::vector<Elem> kappa);
Cleavage make_cleavage(const CartesianReport& report, std::vector<Elem> kappa);

/// Least-index precartesian element in each fiber; kappa(1) = identity.
Cleavage canonical_cleavage(const MonoidHom& sigma);
Cleavage canonical_cleavage(const CartesianReport& report);

/// kappa * eta, eta: N -> A^x pointed. Throws Error{InvalidCleavage}.
Cleavage twist(const Cleavage& cl, const std::vector<Elem>& eta);

/// Number of cleavages |A^x|^(|N|-1), saturating at SIZE_MAX.
std::size_t cleavage_count(const Cleavage& cl);

/// canonical * eta for eta in odometer order (first n varies slowest), at most limit.
std::vector<Cleavage> enumerate_cleavages(const MonoidHom& sigma, std::size_t limit);

/// The unique eta with to.kappa = from.kappa * eta.
std::vector<Elem> relating_eta(const Cleavage& from, const Cleavage& to);

/// phi_n(a) = xi(a kappa(n)), gamma_{m,n} = xi(kappa(m) kappa(n)).
LaxActionPtr extract_action(const Cleavage& cl);

struct Reconstruction {
    GrothMonoid groth;
    MonoidHom iso; // (m,a) -> kappa(m) a
    bool bijective = false;
    bool over_base = false;
    bool cartesian = false;

    bool ok() const { return bijective && over_base && cartesian; }
};

Reconstruction reconstruct(const Cleavage& cl);

/// alpha = restriction to kernels, tau_n = xi'(abar(kappa(n))).
/// Throws Error{Triangle} unless sigma' abar = sigma.
LaxHom extract_lax_hom(const MonoidHom& abar, const Cleavage& cl, const Cleavage& cl_prime);

struct Transport {
    LaxActionPtr before;
    LaxActionPtr after;
    std::vector<Elem> eta;
    std::vector<Verdict> verdicts;
};

/// Extracts the actions of from and to independently and checks the
/// change-of-cleavage formulas for phi and gamma cell by cell.
Transport transport(const Cleavage& from, const Cleavage& to);

/// Checks tau~(n) = eta'(n)^-1 tau(n) alpha(eta(n)).
Verdict transport_tau(const MonoidHom& abar, const Cleavage& cl, const Cleavage& cl_t,
                      const Cleavage& cl_prime, const Cleavage& cl_prime_t);

/// Searches pointed eta: N -> A^x carrying `original` to `other` by the
/// change-of-cleavage formulas. Carriers must have identical tables.
std::optional<std::vector<Elem>> relate_actions(const LaxAction& original, const LaxAction& other);

/// Iterates pointed maps N -> U (values drawn from `values`, position of the
/// identity fixed to `one`) in odometer order. f returns false to stop.
template <class F>
void for_each_pointed_map(std::size_t n, Elem identity, const std::vector<Elem>& values, Elem one, F&& f) {
    std::vector<std::size_t> digit(n, 0);
    std::vector<Elem> map(n, values.empty() ? one : values[0]);
    map[identity] = one;
    if (values.empty()) {
        if (n == 1) f(map);
        return;
    }
    for (;;) {
        if (!f(static_cast<const std::vector<Elem>&>(map))) return;
        std::size_t i = n;
        while (i-- > 0) {
            if (i == identity) continue;
            if (++digit[i] < values.size()) {
                map[i] = values[digit[i]];
                break;
            }
            digit[i] = 0;
            map[i] = values[0];
        }
        if (i == std::size_t(-1)) return;
    }
}

} // namespace schreier
