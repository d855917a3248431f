#include "schreier/lax_action.hpp"

#include <algorithm>
#include <sstream>

namespace schreier {

namespace {

void fail(Verdict& v, const std::string& witness) {
    if (v.pass) {
        v.pass = false;
        v.witness = witness;
    }
}

std::string tuple_str(std::initializer_list<std::string> parts) {
    std::string s = "(";
    bool first = true;
    for (const auto& p : parts) {
        if (!first) s += ",";
        s += p;
        first = false;
    }
    return s + ")";
}

} // namespace

LaxAction::LaxAction(MonoidPtr acting, MonoidPtr carrier, std::vector<Elem> phi, std::vector<Elem> gamma)
    : acting_(std::move(acting)), carrier_(std::move(carrier)), phi_(std::move(phi)),
      gamma_(std::move(gamma)) {
    if (!acting_ || !carrier_) throw Error(ErrorKind::Shape, "lax action needs both monoids");
    const std::size_t n = acting_->order();
    const std::size_t a = carrier_->order();
    if (phi_.size() != a * n) throw Error(ErrorKind::Shape, "phi table must be |A| x |N|");
    if (gamma_.size() != n * n) throw Error(ErrorKind::Shape, "gamma table must be |N| x |N|");
    auto in_range = [&](Elem v) { return v < a; };
    if (!std::all_of(phi_.begin(), phi_.end(), in_range) ||
        !std::all_of(gamma_.begin(), gamma_.end(), in_range)) {
        throw Error(ErrorKind::Shape, "action table entry out of range");
    }
}

bool LaxAction::gamma_invertible() const {
    return std::all_of(gamma_.begin(), gamma_.end(), [&](Elem g) { return carrier_->is_unit(g); });
}

LaxVerdict validate_lax(const LaxAction& act) {
    const auto& nm = *act.acting();
    const auto& am = *act.carrier();
    const Elem one_n = nm.identity();
    const Elem one_a = am.identity();
    Verdict unit{"phi_unit_is_identity", true, {}};
    Verdict twist{"gamma_intertwines_phi", true, {}};
    Verdict cocycle{"gamma_cocycle", true, {}};
    Verdict normal{"gamma_normalized", true, {}};
    Verdict endo{"phi_endomorphism", true, {}};

    for (Elem a = 0; a < am.order(); ++a) {
        if (act.phi(one_n, a) != a) fail(unit, "a=" + am.name(a));
    }
    for (Elem m = 0; m < nm.order(); ++m) {
        for (Elem n = 0; n < nm.order(); ++n) {
            const Elem g = act.gamma(m, n);
            for (Elem a = 0; a < am.order(); ++a) {
                const Elem lhs = am.mul(g, act.phi(n, act.phi(m, a)));
                const Elem rhs = am.mul(act.phi(nm.mul(m, n), a), g);
                if (lhs != rhs) fail(twist, tuple_str({am.name(a), nm.name(m), nm.name(n)}));
            }
            for (Elem k = 0; k < nm.order(); ++k) {
                const Elem lhs = am.mul(act.gamma(nm.mul(m, n), k), act.phi(k, g));
                const Elem rhs = am.mul(act.gamma(m, nm.mul(n, k)), act.gamma(n, k));
                if (lhs != rhs) fail(cocycle, tuple_str({nm.name(m), nm.name(n), nm.name(k)}));
            }
        }
    }
    for (Elem m = 0; m < nm.order(); ++m) {
        if (act.gamma(one_n, m) != one_a || act.gamma(m, one_n) != one_a) {
            fail(normal, "m=" + nm.name(m));
        }
    }
    for (Elem n = 0; n < nm.order(); ++n) {
        if (act.phi(n, one_a) != one_a) fail(endo, "phi_" + nm.name(n) + "(1) != 1");
        for (Elem a = 0; a < am.order(); ++a) {
            for (Elem b = 0; b < am.order(); ++b) {
                if (act.phi(n, am.mul(a, b)) != am.mul(act.phi(n, a), act.phi(n, b))) {
                    fail(endo, tuple_str({nm.name(n), am.name(a), am.name(b)}));
                }
            }
        }
    }
    return LaxVerdict{{unit, twist, cocycle, normal, endo}, act.gamma_invertible()};
}

LaxAction strictify(const MonoidPtr& acting, const MonoidPtr& carrier, std::vector<Elem> action) {
    std::vector<Elem> gamma(acting->order() * acting->order(), carrier->identity());
    LaxAction out(acting, carrier, std::move(action), std::move(gamma));
    const auto& nm = *acting;
    const auto& am = *carrier;
    for (Elem a = 0; a < am.order(); ++a) {
        if (out.phi(nm.identity(), a) != a) {
            throw Error(ErrorKind::NotAnAction, "identity of N moves a=" + am.name(a));
        }
        for (Elem m = 0; m < nm.order(); ++m) {
            for (Elem n = 0; n < nm.order(); ++n) {
                if (out.phi(nm.mul(m, n), a) != out.phi(n, out.phi(m, a))) {
                    throw Error(ErrorKind::NotAnAction,
                                "phi_mn != phi_n phi_m at " + tuple_str({am.name(a), nm.name(m), nm.name(n)}));
                }
            }
        }
    }
    for (Elem n = 0; n < nm.order(); ++n) {
        if (out.phi(n, am.identity()) != am.identity()) {
            throw Error(ErrorKind::NotAnAction, "phi_" + nm.name(n) + " does not fix 1");
        }
        for (Elem a = 0; a < am.order(); ++a) {
            for (Elem b = 0; b < am.order(); ++b) {
                if (out.phi(n, am.mul(a, b)) != am.mul(out.phi(n, a), out.phi(n, b))) {
                    throw Error(ErrorKind::NotAnAction, "phi_" + nm.name(n) + " not multiplicative at " +
                                                            tuple_str({am.name(a), am.name(b)}));
                }
            }
        }
    }
    return out;
}

std::vector<Verdict> audit_lax_hom(const LaxAction& src, const LaxAction& tgt, const MonoidHom& alpha,
                                   const std::vector<Elem>& tau) {
    Verdict shape{"lax_hom_shape", true, {}};
    Verdict phi_law{"lax_hom_phi", true, {}};
    Verdict gamma_law{"lax_hom_gamma", true, {}};
    const auto& nm = *src.acting();
    const auto& a2 = *tgt.carrier();
    if (!same_monoid(src.acting(), tgt.acting())) fail(shape, "actions of different monoids");
    if (!same_monoid(alpha.source(), src.carrier()) || !same_monoid(alpha.target(), tgt.carrier())) {
        fail(shape, "alpha does not map between the carriers");
    }
    if (tau.size() != nm.order() ||
        std::any_of(tau.begin(), tau.end(), [&](Elem t) { return t >= a2.order(); })) {
        fail(shape, "tau has wrong length or range");
    }
    if (!shape.pass) return {shape, phi_law, gamma_law};
    if (tau[nm.identity()] != a2.identity()) fail(shape, "tau_1 != 1");

    const auto& a1 = *src.carrier();
    for (Elem m = 0; m < nm.order(); ++m) {
        for (Elem a = 0; a < a1.order(); ++a) {
            const Elem lhs = a2.mul(tgt.phi(m, alpha(a)), tau[m]);
            const Elem rhs = a2.mul(tau[m], alpha(src.phi(m, a)));
            if (lhs != rhs) fail(phi_law, tuple_str({a1.name(a), nm.name(m)}));
        }
        for (Elem n = 0; n < nm.order(); ++n) {
            const Elem lhs = a2.mul(a2.mul(tgt.gamma(m, n), tgt.phi(n, tau[m])), tau[n]);
            const Elem rhs = a2.mul(tau[nm.mul(m, n)], alpha(src.gamma(m, n)));
            if (lhs != rhs) fail(gamma_law, tuple_str({nm.name(m), nm.name(n)}));
        }
    }
    return {shape, phi_law, gamma_law};
}

LaxHom::LaxHom(LaxActionPtr source, LaxActionPtr target, MonoidHom alpha, std::vector<Elem> tau)
    : source_(std::move(source)), target_(std::move(target)), alpha_(std::move(alpha)),
      tau_(std::move(tau)) {
    for (const auto& v : audit_lax_hom(*source_, *target_, alpha_, tau_)) {
        if (!v.pass) throw Error(ErrorKind::InvalidLaxHom, v.anchor + " fails at " + v.witness);
    }
}

bool LaxHom::is_pseudo() const {
    const auto& a2 = *target_->carrier();
    return std::all_of(tau_.begin(), tau_.end(), [&](Elem t) { return a2.is_unit(t); });
}

LaxHom identity_lax_hom(const LaxActionPtr& action) {
    return LaxHom(action, action, identity_hom(action->carrier()),
                  std::vector<Elem>(action->acting()->order(), action->carrier()->identity()));
}

LaxHom compose_lax_homs(const LaxHom& g, const LaxHom& f) {
    if (!(*g.source() == *f.target())) {
        throw Error(ErrorKind::Composability, "source of the outer lax homomorphism is not the target of the inner one");
    }
    const auto& a3 = *g.target()->carrier();
    std::vector<Elem> tau(f.tau().size());
    for (Elem m = 0; m < tau.size(); ++m) tau[m] = a3.mul(g.tau(m), g.alpha()(f.tau(m)));
    return LaxHom(f.source(), g.target(), compose(g.alpha(), f.alpha()), std::move(tau));
}

CellVerdict validate_two_cell(const TwoCell& cell) {
    CellVerdict out;
    Verdict parallel{"cell_parallel", true, {}};
    Verdict conj{"cell_intertwines_alpha", true, {}};
    Verdict twist{"cell_intertwines_tau", true, {}};
    const auto& f = cell.from;
    const auto& g = cell.to;
    if (!(*f.source() == *g.source()) || !(*f.target() == *g.target())) {
        fail(parallel, "lax homomorphisms are not parallel");
    }
    const auto& a2 = *f.target()->carrier();
    if (cell.c >= a2.order()) fail(parallel, "cell element out of range");
    if (!parallel.pass) {
        out.checks = {parallel, conj, twist};
        return out;
    }
    const auto& a1 = *f.source()->carrier();
    const auto& nm = *f.source()->acting();
    const Elem c = cell.c;
    for (Elem a = 0; a < a1.order(); ++a) {
        if (a2.mul(c, f.alpha()(a)) != a2.mul(g.alpha()(a), c)) fail(conj, "a=" + a1.name(a));
    }
    for (Elem m = 0; m < nm.order(); ++m) {
        if (a2.mul(f.target()->phi(m, c), f.tau(m)) != a2.mul(g.tau(m), c)) {
            fail(twist, "m=" + nm.name(m));
        }
    }
    out.checks = {parallel, conj, twist};
    out.valid = all_pass(out.checks);
    out.is_pseudo_cell = out.valid && a2.is_unit(c);
    return out;
}

TwoCell compose_cells(const TwoCell& d, const TwoCell& c) {
    if (!(c.to == d.from)) {
        throw Error(ErrorKind::Composability, "cells are not vertically composable");
    }
    const auto& a2 = *c.from.target()->carrier();
    return TwoCell{c.from, d.to, a2.mul(d.c, c.c)};
}

} // namespace schreier
