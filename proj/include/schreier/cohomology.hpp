#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schreier/automorphism.hpp"
#include "schreier/cleavage.hpp"
#include "schreier/grothendieck.hpp"

namespace schreier {

/// A commutative monoid A with a genuine right action of N by endomorphisms.
class NModule {
public:
    /// Throws Error{NotCommutative} or Error{NotAnAction}.
    NModule(MonoidPtr acting, MonoidPtr carrier, std::vector<Elem> phi);

    const MonoidPtr& acting() const noexcept { return action_->acting(); }
    const MonoidPtr& carrier() const noexcept { return action_->carrier(); }
    Elem phi(Elem n, Elem a) const noexcept { return action_->phi(n, a); }
    const std::vector<Elem>& phi_table() const noexcept { return action_->phi_table(); }
    /// The strict action with gamma = 1.
    const LaxActionPtr& strict() const noexcept { return action_; }

    /// Lax action (A, phi, gamma) for a gamma table of this module.
    LaxActionPtr with_gamma(std::vector<Elem> gamma) const;

    friend bool operator==(const NModule& a, const NModule& b) { return *a.action_ == *b.action_; }

private:
    LaxActionPtr action_;
};

using Table = std::vector<Elem>; // |N| x |N| gamma table, row m

/// Normalized and satisfying gamma_{mn,k} phi_k(gamma_{m,n}) = gamma_{m,nk} gamma_{n,k}.
bool is_cocycle(const NModule& mod, const Table& gamma);
bool is_regular(const NModule& mod, const Table& gamma);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// All normalized 2-cocycles, sorted. Throws SizeLimitError when the search
/// visits more than `budget` nodes.
std::vector<Table> enumerate_cocycles(const NModule& mod, bool regular_only,
                                      std::uint64_t budget = kDefaultSearchBudget);

/// Least pointed tau: N -> A^x with gamma_{m,n} tau(mn) = gamma'_{m,n} tau(n) phi_n(tau(m)).
std::optional<std::vector<Elem>> cohomologous(const NModule& mod, const Table& gamma, const Table& gamma_prime);

/// gamma' = gamma * tau(mn) * (tau(n) phi_n(tau(m)))^-1, which is cohomologous to gamma via tau.
Table apply_coboundary(const NModule& mod, const Table& gamma, const std::vector<Elem>& tau);

/// Least table in the coboundary orbit of gamma.
Table class_representative(const NModule& mod, const Table& gamma);

struct CocycleClass {
    Table representative;
    std::size_t size = 0;
};

/// Partition of the cocycles into coboundary orbits, sorted by representative.
std::vector<CocycleClass> h2(const NModule& mod, bool regular, std::uint64_t budget = kDefaultSearchBudget);

struct ExtensionRecord {
    NModule module;
    MonoidPtr total;
    MonoidHom iota;  // A -> M
    MonoidHom sigma; // M -> N
    bool regular = false;
};

/// (phi, gamma) as a lax action, its Grothendieck monoid, inclusion and projection.
ExtensionRecord extension_from_cocycle(const NModule& mod, const Table& gamma);

/// Wraps a prefibration with commutative kernel, using the action extracted
/// from the canonical cleavage. Throws Error{NotPrefibration, NotCommutative, NotAnAction}.
ExtensionRecord extension_from_hom(const MonoidHom& sigma);

/// The four defining conditions of a Schreier extension.
std::vector<Verdict> schreier_conditions(const ExtensionRecord& e);

/// beta: M -> M' with beta iota = iota', sigma' beta = sigma, cartesian;
/// searched over beta(kappa(n) a) = kappa'(n) t(n) a.
std::optional<MonoidHom> congruent(const ExtensionRecord& e, const ExtensionRecord& e_prime);

struct H2Bijection {
    std::size_t cocycles = 0;
    std::size_t classes = 0;
    std::size_t congruence_classes = 0;
    std::vector<Verdict> verdicts;

    bool ok() const { return all_pass(verdicts); }
};

H2Bijection verify_h2_bijection(const NModule& mod, bool regular, std::uint64_t budget = kDefaultSearchBudget);

/// Regular Schreier extension check: fibration with commutative kernel whose
/// extracted action is a genuine action. Throws Error{NotRegularSchreier}.
void require_regular_schreier(const Cleavage& cl);

struct AutSubgroups {
    std::vector<AutTriple> triples;     // Aut_A(M)
    std::vector<std::size_t> aut_AN;    // indices into triples
    std::vector<std::size_t> aut_A_fix; // theta = id
    std::vector<std::size_t> aut_N_fix; // eta = id
    std::vector<Perm> c1;               // sorted
    std::vector<Perm> c2;               // sorted
    std::vector<Verdict> verdicts;      // c1/c2 agree with C, rho1/rho2 homomorphisms
};

AutSubgroups aut_subgroups(const Cleavage& cl);

/// Pointed xi: N -> A^x with xi(mn) = phi_n(xi(m)) xi(n).
std::vector<std::vector<Elem>> z1(const NModule& mod);

struct Z1Iso {
    std::vector<std::vector<Elem>> cocycles;
    std::vector<Perm> automorphisms; // psi_xi, same order as cocycles
    std::size_t aut_AN_size = 0;
    std::vector<Verdict> verdicts;

    bool ok() const { return all_pass(verdicts); }
};

/// psi_xi(x) = x iota(xi(sigma x)) for xi in Z^1, checked against Aut^{A,N}.
Z1Iso z1_iso(const Cleavage& cl);

/// Class of (m,n) -> gamma_{m,n} (theta gamma_{m,n})^-1. Throws Error{NotRegular}.
Table lambda1(const Perm& theta, const Cleavage& cl);
/// Class of (m,n) -> gamma_{eta m, eta n} gamma_{m,n}^-1. Throws Error{NotRegular}.
Table lambda2(const Perm& eta, const Cleavage& cl);

struct ExactnessReport {
    std::size_t cleavages_checked = 0;
    bool sampled = false;
    std::vector<Verdict> first;  // Aut^{A,N} -> Aut^N_A -> C1 -> H^2
    std::vector<Verdict> second; // Aut^{A,N} -> Aut^A -> C2 -> H^2

    bool ok() const { return all_pass(first) && all_pass(second); }
};

/// Elementwise exactness of both sequences and cleavage independence of
/// lambda1, lambda2 (full sweep up to 256 cleavages, else 32 sampled with seed).
ExactnessReport verify_exact_sequences(const Cleavage& cl, std::uint64_t seed = 0);

} // namespace schreier
