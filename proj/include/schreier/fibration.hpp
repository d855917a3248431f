#pragma once

#include <vector>

#include "schreier/monoid.hpp"
#include "schreier/verdict.hpp"

namespace schreier {

/// Precartesian and cartesian elements of a homomorphism sigma: M -> N.
///
/// Every predicate here is a direct scan of the defining condition; other
/// modules are verified against these reports.
struct CartesianReport {
    MonoidHom hom;
    std::vector<Elem> kernel;  // sorted
    std::vector<Elem> pcar;    // sorted
    std::vector<Elem> car;     // sorted
    bool is_prefibration = false;
    bool is_fibration = false;
    std::vector<std::vector<Elem>> fiber_index; // target element -> sorted preimage

    bool in_pcar(Elem x) const;
    bool in_car(Elem x) const;
    bool in_kernel(Elem x) const;
};

/// Every z in the fiber of x is x*y for exactly one kernel element y.
bool is_precartesian(const MonoidHom& sigma, Elem x);
/// Both conditions of cartesianness: factorisation through any v with
/// sigma(z) = sigma(x)v, and uniqueness given sigma(y).
bool is_cartesian(const MonoidHom& sigma, Elem x);

CartesianReport analyze(const MonoidHom& sigma);
/// Analysis of sigma regarded as a map of opposite monoids (left variants).
CartesianReport analyze_opposite(const MonoidHom& sigma);

/// Closure and kernel properties of the cartesian calculus, checked on sigma.
std::vector<Verdict> check_closure_lemmas(const CartesianReport& report);
std::vector<Verdict> check_closure_lemmas(const MonoidHom& sigma);

struct CompositeCheck {
    CartesianReport composite;
    std::vector<Verdict> verdicts;
};

/// Analyzes sigma after rho and checks that (pre)fibrations compose.
/// Throws Error{Composability}.
CompositeCheck compose_check(const MonoidHom& rho, const MonoidHom& sigma);

/// Checks that a product of (pre)fibrations is a (pre)fibration.
std::vector<Verdict> product_check(const MonoidHom& sigma1, const MonoidHom& sigma2);

/// Pulls the fibration candidate sigma1: K -> L back along tau1: N -> L and
/// checks that the pulled-back projection to N is a fibration when sigma1 is.
std::vector<Verdict> pullback_check(const MonoidHom& sigma1, const MonoidHom& tau1);

/// alpha: M -> M' over N maps Pcar(sigma) into Pcar(sigma').
/// Throws Error{Triangle} unless sigma' after alpha equals sigma.
bool is_cartesian_morphism(const MonoidHom& alpha, const MonoidHom& sigma,
                           const MonoidHom& sigma_prime);

} // namespace schreier
