#pragma once

#include <utility>
#include <vector>

#include "schreier/cleavage.hpp"

namespace schreier {

using Perm = std::vector<Elem>;

/// psi in Aut_A(M) in coordinates of a fixed cleavage:
/// psi(kappa(n) a) = kappa(eta(n)) xi(n) theta(a).
struct AutTriple {
    Perm theta;            // automorphism of A (kernel-local indices)
    Perm eta;              // automorphism of N
    std::vector<Elem> xi;  // N -> A^x, xi(1) = 1
    Perm psi;              // the materialized automorphism of M
    bool audited = false;  // psi is a bijective homomorphism with psi(A) = A, cartesian
};

/// All of Aut_A(M), sorted by psi. Throws Error{NotPrefibration}.
std::vector<AutTriple> aut_A(const Cleavage& cl);

/// Kernel-preserving cartesian automorphisms by scanning all |M|! bijections.
/// Throws SizeLimitError above order 8.
std::vector<Perm> aut_A_bruteforce(const MonoidHom& sigma);

/// (theta, eta) of psi: theta = psi on the kernel (local indices),
/// eta(sigma x) = sigma(psi x). Throws Error{NotPrefibration, NotHomomorphism,
/// NotKernelPreserving, NotCartesian, NotWellDefined}.
std::pair<Perm, Perm> restrict_and_descend(const Perm& psi, const Cleavage& cl);

struct CGroup {
    std::vector<std::pair<Perm, Perm>> pairs;     // sorted
    std::vector<std::vector<Elem>> witness;       // lex-least alpha: N -> A^x per pair
    Verdict subgroup{"c_is_subgroup", true, {}};

    /// Index of (theta, eta), or kNoElem.
    Elem find(const Perm& theta, const Perm& eta) const;
};

CGroup compute_C(const Cleavage& cl);

struct RhoReport {
    std::vector<Elem> image;       // triple index -> index into C.pairs
    std::vector<Verdict> verdicts; // aut_subgroup, rho_into_c, rho_homomorphism
};

/// rho(psi) = (theta_psi, eta_psi) on the output of aut_A.
RhoReport rho(const Cleavage& cl, const std::vector<AutTriple>& triples, const CGroup& c);

Perm compose_perm(const Perm& g, const Perm& f); // g after f
Perm invert_perm(const Perm& p);

} // namespace schreier
