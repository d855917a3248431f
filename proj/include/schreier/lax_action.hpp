#pragma once

#include <memory>
#include <vector>

#include "schreier/monoid.hpp"
#include "schreier/verdict.hpp"

namespace schreier {

/// A lax right action of N on A: phi_n(a) and the comparison elements
/// gamma_{m,n}, both stored as lookup tables.
///
/// Construction only checks table shapes; validate_lax() audits the axioms.
class LaxAction {
public:
    /// phi is |A| x |N| (row a, column n holds phi_n(a)); gamma is |N| x |N|.
    LaxAction(MonoidPtr acting, MonoidPtr carrier, std::vector<Elem> phi, std::vector<Elem> gamma);

    const MonoidPtr& acting() const noexcept { return acting_; }
    const MonoidPtr& carrier() const noexcept { return carrier_; }

    Elem phi(Elem n, Elem a) const noexcept { return phi_[std::size_t(a) * acting_->order() + n]; }
    Elem gamma(Elem m, Elem n) const noexcept { return gamma_[std::size_t(m) * acting_->order() + n]; }

    const std::vector<Elem>& phi_table() const noexcept { return phi_; }
    const std::vector<Elem>& gamma_table() const noexcept { return gamma_; }

    /// Every gamma value is invertible in A.
    bool gamma_invertible() const;

    friend bool operator==(const LaxAction& a, const LaxAction& b) {
        return same_monoid(a.acting_, b.acting_) && same_monoid(a.carrier_, b.carrier_) &&
               a.phi_ == b.phi_ && a.gamma_ == b.gamma_;
    }

private:
    MonoidPtr acting_;
    MonoidPtr carrier_;
    std::vector<Elem> phi_;
    std::vector<Elem> gamma_;
};

using LaxActionPtr = std::shared_ptr<const LaxAction>;

struct LaxVerdict {
    std::vector<Verdict> axioms; // one entry per axiom, in order i..v
    bool is_pseudo = false;

    bool ok() const { return all_pass(axioms); }
};

/// Checks all five axioms and reports every failing one with its first witness.
LaxVerdict validate_lax(const LaxAction& action);

/// Genuine right action by endomorphisms with gamma = 1.
/// Throws Error{NotAnAction} with a witness.
LaxAction strictify(const MonoidPtr& acting, const MonoidPtr& carrier, std::vector<Elem> action);

/// A lax homomorphism (alpha, tau) between lax actions of the same monoid.
class LaxHom {
public:
    /// Throws Error{InvalidLaxHom} if tau_1 != 1 or a defining identity fails.
    LaxHom(LaxActionPtr source, LaxActionPtr target, MonoidHom alpha, std::vector<Elem> tau);

    const LaxActionPtr& source() const noexcept { return source_; }
    const LaxActionPtr& target() const noexcept { return target_; }
    const MonoidHom& alpha() const noexcept { return alpha_; }
    const std::vector<Elem>& tau() const noexcept { return tau_; }
    Elem tau(Elem m) const noexcept { return tau_[m]; }

    bool is_pseudo() const;

    friend bool operator==(const LaxHom& a, const LaxHom& b) {
        return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.alpha_ == b.alpha_ &&
               a.tau_ == b.tau_;
    }

private:
    LaxActionPtr source_;
    LaxActionPtr target_;
    MonoidHom alpha_;
    std::vector<Elem> tau_;
};

/// Non-throwing audit of the lax homomorphism identities.
std::vector<Verdict> audit_lax_hom(const LaxAction& source, const LaxAction& target,
                                   const MonoidHom& alpha, const std::vector<Elem>& tau);

LaxHom identity_lax_hom(const LaxActionPtr& action);

/// (alpha', tau') after (alpha, tau) = (alpha' alpha, m -> tau'_m alpha'(tau_m)).
/// Throws Error{Composability}.
LaxHom compose_lax_homs(const LaxHom& g, const LaxHom& f);

/// An element c of the target carrier witnessing from => to.
struct TwoCell {
    LaxHom from;
    LaxHom to;
    Elem c;
};

struct CellVerdict {
    bool valid = false;
    bool is_pseudo_cell = false;
    std::vector<Verdict> checks;
};

CellVerdict validate_two_cell(const TwoCell& cell);

/// Vertical composite of c: f => g and d: g => h, carried by the product d*c.
TwoCell compose_cells(const TwoCell& d, const TwoCell& c);

} // namespace schreier
