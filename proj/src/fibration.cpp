#include "schreier/fibration.hpp"

#include <algorithm>
#include <sstream>

namespace schreier {

namespace {

std::vector<Elem> fiber_of(const MonoidHom& sigma, Elem n) {
    std::vector<Elem> out;
    for (Elem x = 0; x < sigma.source()->order(); ++x) {
        if (sigma(x) == n) out.push_back(x);
    }
    return out;
}

bool precartesian_with(const MonoidHom& sigma, const std::vector<Elem>& ker, Elem x) {
    const auto& m = *sigma.source();
    const auto fiber = fiber_of(sigma, sigma(x));
    std::vector<unsigned> hits(m.order(), 0);
    for (Elem y : ker) ++hits[m.mul(x, y)];
    return std::all_of(fiber.begin(), fiber.end(), [&](Elem z) { return hits[z] == 1; });
}

bool sorted_contains(const std::vector<Elem>& v, Elem x) {
    return std::binary_search(v.begin(), v.end(), x);
}

std::string pair_witness(const FiniteMonoid& m, Elem x, Elem y) {
    return "(" + m.name(x) + ", " + m.name(y) + ")";
}

Verdict make_verdict(std::string anchor) { return Verdict{std::move(anchor), true, {}}; }

void fail(Verdict& v, std::string witness) {
    if (v.pass) {
        v.pass = false;
        v.witness = std::move(witness);
    }
}

} // namespace

bool CartesianReport::in_pcar(Elem x) const { return sorted_contains(pcar, x); }
bool CartesianReport::in_car(Elem x) const { return sorted_contains(car, x); }
bool CartesianReport::in_kernel(Elem x) const { return sorted_contains(kernel, x); }

bool is_precartesian(const MonoidHom& sigma, Elem x) {
    return precartesian_with(sigma, kernel(sigma).elements, x);
}

bool is_cartesian(const MonoidHom& sigma, Elem x) {
    const auto& m = *sigma.source();
    const auto& n = *sigma.target();
    const std::size_t nn = n.order();
    // reach[z*|N|+v]: some y has x*y = z and sigma(y) = v.
    std::vector<char> reach(m.order() * nn, 0);
    for (Elem y = 0; y < m.order(); ++y) {
        char& slot = reach[std::size_t(m.mul(x, y)) * nn + sigma(y)];
        if (slot) return false; // two y with equal (x*y, sigma(y))
        slot = 1;
    }
    for (Elem z = 0; z < m.order(); ++z) {
        for (Elem v = 0; v < nn; ++v) {
            if (n.mul(sigma(x), v) == sigma(z) && !reach[std::size_t(z) * nn + v]) return false;
        }
    }
    return true;
}

CartesianReport analyze(const MonoidHom& sigma) {
    CartesianReport r{sigma, kernel(sigma).elements, {}, {}, false, false, {}};
    const auto& m = *sigma.source();
    const auto& n = *sigma.target();
    r.fiber_index.resize(n.order());
    for (Elem x = 0; x < m.order(); ++x) r.fiber_index[sigma(x)].push_back(x);
    for (Elem x = 0; x < m.order(); ++x) {
        if (precartesian_with(sigma, r.kernel, x)) r.pcar.push_back(x);
        if (is_cartesian(sigma, x)) r.car.push_back(x);
    }
    std::vector<char> pre_hit(n.order(), 0), car_hit(n.order(), 0);
    for (Elem x : r.pcar) pre_hit[sigma(x)] = 1;
    for (Elem x : r.car) car_hit[sigma(x)] = 1;
    r.is_prefibration = std::all_of(pre_hit.begin(), pre_hit.end(), [](char c) { return c != 0; });
    r.is_fibration = std::all_of(car_hit.begin(), car_hit.end(), [](char c) { return c != 0; });
    return r;
}

CartesianReport analyze_opposite(const MonoidHom& sigma) { return analyze(opposite_hom(sigma)); }

std::vector<Verdict> check_closure_lemmas(const MonoidHom& sigma) {
    return check_closure_lemmas(analyze(sigma));
}

std::vector<Verdict> check_closure_lemmas(const CartesianReport& r) {
    const auto& sigma = r.hom;
    const auto& m = *sigma.source();
    const auto& n = *sigma.target();
    std::vector<Verdict> out;

    auto car_sub = make_verdict("car_subset_pcar");
    for (Elem x : r.car) {
        if (!r.in_pcar(x)) fail(car_sub, "cartesian but not precartesian: " + m.name(x));
    }
    out.push_back(car_sub);

    auto units_sub = make_verdict("units_subset_car");
    for (Elem x : m.unit_elements()) {
        if (!r.in_car(x)) fail(units_sub, "invertible but not cartesian: " + m.name(x));
    }
    out.push_back(units_sub);

    auto car_closed = make_verdict("car_product_closed");
    auto car_pcar = make_verdict("car_times_pcar_in_pcar");
    for (Elem x : r.car) {
        for (Elem y : r.car) {
            if (!r.in_car(m.mul(x, y))) fail(car_closed, pair_witness(m, x, y));
        }
        for (Elem y : r.pcar) {
            if (!r.in_pcar(m.mul(x, y))) fail(car_pcar, pair_witness(m, x, y));
        }
    }
    out.push_back(car_closed);
    out.push_back(car_pcar);

    auto fib_eq = make_verdict("fibration_car_equals_pcar");
    if (r.is_fibration && r.car != r.pcar) fail(fib_eq, "fibration with Car != Pcar");
    out.push_back(fib_eq);

    auto fib_pre = make_verdict("fibration_is_prefibration");
    if (r.is_fibration && !r.is_prefibration) fail(fib_pre, "fibration without precartesian lift");
    out.push_back(fib_pre);

    auto closed_iff = make_verdict("prefibration_pcar_closed_iff_fibration");
    if (r.is_prefibration) {
        std::string first_gap;
        for (Elem x : r.pcar) {
            for (Elem y : r.pcar) {
                if (first_gap.empty() && !r.in_pcar(m.mul(x, y))) first_gap = pair_witness(m, x, y);
            }
        }
        const bool closed = first_gap.empty();
        if (closed != r.is_fibration) {
            fail(closed_iff, closed ? "Pcar closed but not a fibration"
                                    : "fibration but Pcar product " + first_gap + " leaves Pcar");
        }
    }
    out.push_back(closed_iff);

    auto connecting = make_verdict("precartesian_connecting_unit");
    auto cancel = make_verdict("weak_cancellation");
    for (Elem x : r.pcar) {
        for (Elem y : r.fiber_index[sigma(x)]) {
            if (!r.in_pcar(y)) continue;
            std::size_t count = 0;
            Elem h_found = kNoElem;
            for (Elem h : r.kernel) {
                if (m.mul(x, h) == y) {
                    ++count;
                    h_found = h;
                }
            }
            if (count != 1) {
                fail(connecting, pair_witness(m, x, y) + " has " + std::to_string(count) + " connectors");
            } else if (!m.is_unit(h_found)) {
                fail(connecting, pair_witness(m, x, y) + " connector " + m.name(h_found) + " not invertible");
            }
        }
        for (Elem u : r.kernel) {
            for (Elem v : r.kernel) {
                if (u != v && m.mul(x, u) == m.mul(x, v)) {
                    fail(cancel, m.name(x) + " cancels " + pair_witness(m, u, v));
                }
            }
        }
    }
    out.push_back(connecting);
    out.push_back(cancel);

    auto inv_base = make_verdict("invertible_base_cartesian_iff_unit");
    for (Elem x = 0; x < m.order(); ++x) {
        if (n.is_unit(sigma(x)) && r.in_car(x) != m.is_unit(x)) {
            fail(inv_base, m.name(x));
        }
    }
    out.push_back(inv_base);

    const bool surjective = sigma.is_surjective();
    const bool kernel_group =
        std::all_of(r.kernel.begin(), r.kernel.end(), [&](Elem a) { return m.is_unit(a); });
    const bool all_pcar = r.pcar.size() == m.order();

    auto group_kernel = make_verdict("group_kernel_gives_fibration");
    if (surjective && r.is_prefibration && kernel_group && !(all_pcar && r.car.size() == m.order() && r.is_fibration)) {
        fail(group_kernel, "surjective prefibration with group kernel but some element not cartesian");
    }
    out.push_back(group_kernel);

    auto all_pre = make_verdict("all_precartesian_gives_group_kernel");
    if (surjective && all_pcar && !(kernel_group && r.is_fibration)) {
        fail(all_pre, "every element precartesian but kernel not a group or not a fibration");
    }
    out.push_back(all_pre);
    return out;
}

CompositeCheck compose_check(const MonoidHom& rho, const MonoidHom& sigma) {
    auto composite = compose(sigma, rho);
    const auto rr = analyze(rho);
    const auto rs = analyze(sigma);
    CompositeCheck out{analyze(composite), {}};

    auto pre = make_verdict("composite_prefibration");
    if (rr.is_fibration && rs.is_prefibration && !out.composite.is_prefibration) {
        fail(pre, "fibration followed by prefibration is not a prefibration");
    }
    auto fib = make_verdict("composite_fibration");
    if (rr.is_fibration && rs.is_fibration && !out.composite.is_fibration) {
        fail(fib, "composite of fibrations is not a fibration");
    }
    out.verdicts = {pre, fib};
    return out;
}

std::vector<Verdict> product_check(const MonoidHom& sigma1, const MonoidHom& sigma2) {
    const auto r1 = analyze(sigma1);
    const auto r2 = analyze(sigma2);
    const auto ph = product_hom(sigma1, sigma2);
    const auto r = analyze(ph.hom);
    auto pre = make_verdict("product_prefibration");
    if (r1.is_prefibration && r2.is_prefibration && !r.is_prefibration) {
        fail(pre, "product of prefibrations is not a prefibration");
    }
    auto fib = make_verdict("product_fibration");
    if (r1.is_fibration && r2.is_fibration && !r.is_fibration) {
        fail(fib, "product of fibrations is not a fibration");
    }
    return {pre, fib};
}

std::vector<Verdict> pullback_check(const MonoidHom& sigma1, const MonoidHom& tau1) {
    const auto r1 = analyze(sigma1);
    const auto pb = pullback(sigma1, tau1);
    const auto r2 = analyze(pb.to_second);
    auto fib = make_verdict("pullback_fibration");
    if (r1.is_fibration) {
        if (!r2.is_fibration) fail(fib, "pullback of a fibration is not a fibration");
        // (k, n) with k cartesian above tau1(n) is cartesian above n.
        for (Elem p = 0; p < pb.pairs.size(); ++p) {
            auto [k, nn] = pb.pairs[p];
            if (r1.in_car(k) && !r2.in_car(p)) {
                fail(fib, "lift " + pb.monoid->name(p) + " of a cartesian element is not cartesian");
            }
        }
    }
    return {fib};
}

bool is_cartesian_morphism(const MonoidHom& alpha, const MonoidHom& sigma,
                           const MonoidHom& sigma_prime) {
    if (!same_monoid(alpha.source(), sigma.source()) ||
        !same_monoid(alpha.target(), sigma_prime.source()) ||
        !same_monoid(sigma.target(), sigma_prime.target())) {
        throw Error(ErrorKind::Triangle, "maps do not form a triangle over a common base");
    }
    for (Elem x = 0; x < alpha.source()->order(); ++x) {
        if (sigma_prime(alpha(x)) != sigma(x)) {
            throw Error(ErrorKind::Triangle,
                        "triangle does not commute at " + alpha.source()->name(x));
        }
    }
    const auto r = analyze(sigma);
    const auto rp = analyze(sigma_prime);
    return std::all_of(r.pcar.begin(), r.pcar.end(), [&](Elem x) { return rp.in_pcar(alpha(x)); });
}

} // namespace schreier
