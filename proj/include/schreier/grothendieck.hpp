#pragma once

#include <utility>
#include <vector>

#include "schreier/fibration.hpp"
#include "schreier/lax_action.hpp"

namespace schreier {

/// Groth(A, phi, gamma) on pairs (n, a), encoded as n*|A| + a.
struct GrothMonoid {
    MonoidPtr underlying;
    MonoidHom projection; // (n,a) -> n
    MonoidHom inclusion;  // a -> (1,a)
    LaxActionPtr source_action;

    std::size_t carrier_order() const noexcept { return source_action->carrier()->order(); }
    Elem encode(Elem n, Elem a) const noexcept { return Elem(n * carrier_order() + a); }
    std::pair<Elem, Elem> decode(Elem x) const noexcept {
        return {Elem(x / carrier_order()), Elem(x % carrier_order())};
    }
};

/// Product (m,a)(n,b) = (mn, gamma_{m,n} phi_n(a) b). The result is re-audited
/// for associativity. Throws Error{InvalidAction} naming the failing axiom,
/// or SizeLimitError.
GrothMonoid groth(const LaxActionPtr& action);

struct GrothReport {
    CartesianReport report;
    std::vector<Verdict> verdicts;
};

/// analyze(projection) plus the structural facts every Grothendieck
/// projection satisfies.
GrothReport groth_projection_report(const GrothMonoid& g);

/// (m,a) -> (m, tau_m alpha(a)). Throws Error{InvalidLaxHom} if the groth
/// monoids do not belong to f's actions or the map is not multiplicative.
MonoidHom groth_on_hom(const LaxHom& f, const GrothMonoid& source, const GrothMonoid& target);

/// The element (1,c) of the target, certified against both induced homs.
/// Throws Error{InvalidCell} with a witness.
Elem groth_on_cell(const TwoCell& cell, const GrothMonoid& source, const GrothMonoid& target);

} // namespace schreier
