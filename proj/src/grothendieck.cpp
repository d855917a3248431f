#include "schreier/grothendieck.hpp"

#include <algorithm>

namespace schreier {

GrothMonoid groth(const LaxActionPtr& action) {
    const auto verdict = validate_lax(*action);
    for (const auto& v : verdict.axioms) {
        if (!v.pass) throw Error(ErrorKind::InvalidAction, v.anchor + " fails at " + v.witness);
    }
    const auto& nm = *action->acting();
    const auto& am = *action->carrier();
    const std::size_t na = am.order();
    const std::size_t order = nm.order() * na;
    check_size(order, "Grothendieck construction");

    std::vector<Elem> table(order * order);
    for (Elem m = 0; m < nm.order(); ++m) {
        for (Elem a = 0; a < na; ++a) {
            const std::size_t row = (m * na + a) * order;
            for (Elem n = 0; n < nm.order(); ++n) {
                const Elem head = am.mul(action->gamma(m, n), action->phi(n, a));
                const Elem mn = nm.mul(m, n);
                for (Elem b = 0; b < na; ++b) table[row + n * na + b] = Elem(mn * na + am.mul(head, b));
            }
        }
    }
    std::vector<std::string> names;
    names.reserve(order);
    for (Elem m = 0; m < nm.order(); ++m) {
        for (Elem a = 0; a < na; ++a) names.push_back("(" + nm.name(m) + "," + am.name(a) + ")");
    }
    auto monoid = make_monoid_flat(order, std::move(table),
                                   Elem(nm.identity() * na + am.identity()), std::move(names));

    std::vector<Elem> proj(order), incl(na);
    for (Elem x = 0; x < order; ++x) proj[x] = Elem(x / na);
    for (Elem a = 0; a < na; ++a) incl[a] = Elem(nm.identity() * na + a);
    return GrothMonoid{monoid, MonoidHom(monoid, action->acting(), std::move(proj)),
                       MonoidHom(action->carrier(), monoid, std::move(incl)), action};
}

GrothReport groth_projection_report(const GrothMonoid& g) {
    GrothReport out{analyze(g.projection), {}};
    const auto& r = out.report;
    const auto& am = *g.source_action->carrier();

    Verdict pre{"groth_prefibration", r.is_prefibration, {}};
    if (!pre.pass) pre.witness = "projection has a fiber without precartesian element";

    Verdict fib{"groth_pseudo_gives_fibration", true, {}};
    if (g.source_action->gamma_invertible() && !r.is_fibration) {
        fib.pass = false;
        fib.witness = "pseudo action but projection is not a fibration";
    }

    Verdict pcar{"groth_pcar_unit_component", true, {}};
    for (Elem x = 0; x < g.underlying->order(); ++x) {
        const bool expected = am.is_unit(g.decode(x).second);
        if (expected != r.in_pcar(x)) {
            pcar.pass = false;
            pcar.witness = g.underlying->name(x);
            break;
        }
    }

    Verdict exact{"groth_kernel_is_inclusion_image", true, {}};
    if (!g.inclusion.is_injective()) {
        exact.pass = false;
        exact.witness = "inclusion not injective";
    } else if (image(g.inclusion).elements != r.kernel) {
        exact.pass = false;
        exact.witness = "kernel differs from the image of the inclusion";
    }
    out.verdicts = {pre, fib, pcar, exact};
    return out;
}

MonoidHom groth_on_hom(const LaxHom& f, const GrothMonoid& source, const GrothMonoid& target) {
    if (!(*f.source() == *source.source_action) || !(*f.target() == *target.source_action)) {
        throw Error(ErrorKind::InvalidLaxHom, "Grothendieck monoids do not match the lax homomorphism");
    }
    std::vector<Elem> map(source.underlying->order());
    const auto& a2 = *target.source_action->carrier();
    for (Elem x = 0; x < map.size(); ++x) {
        auto [m, a] = source.decode(x);
        map[x] = target.encode(m, a2.mul(f.tau(m), f.alpha()(a)));
    }
    try {
        return MonoidHom(source.underlying, target.underlying, std::move(map));
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidLaxHom, e.what());
    }
}

Elem groth_on_cell(const TwoCell& cell, const GrothMonoid& source, const GrothMonoid& target) {
    const auto v = validate_two_cell(cell);
    for (const auto& c : v.checks) {
        if (!c.pass) throw Error(ErrorKind::InvalidCell, c.anchor + " fails at " + c.witness);
    }
    const auto fbar = groth_on_hom(cell.from, source, target);
    const auto gbar = groth_on_hom(cell.to, source, target);
    const auto& mt = *target.underlying;
    const Elem one_c = target.encode(target.source_action->acting()->identity(), cell.c);
    for (Elem x = 0; x < source.underlying->order(); ++x) {
        if (mt.mul(one_c, fbar(x)) != mt.mul(gbar(x), one_c)) {
            throw Error(ErrorKind::InvalidCell, "cell does not intertwine at " + source.underlying->name(x));
        }
    }
    return one_c;
}

} // namespace schreier
