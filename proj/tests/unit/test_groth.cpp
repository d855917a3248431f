#include <catch2/catch_amalgamated.hpp>

#include "../oracles/oracles.hpp"
#include "schreier/catalog.hpp"
#include "schreier/generators.hpp"
#include "schreier/grothendieck.hpp"

using namespace schreier;

namespace {

oracle::Module module_of(const LaxAction& a) {
    return {oracle::raw(*a.acting()), oracle::raw(*a.carrier()), {a.phi_table().begin(), a.phi_table().end()}};
}

oracle::Gamma gamma_of(const LaxAction& a) { return {a.gamma_table().begin(), a.gamma_table().end()}; }

} // namespace

TEST_CASE("trivial strict action gives the direct product") {
    std::vector<Elem> phi(12);
    for (Elem a = 0; a < 3; ++a)
        for (Elem n = 0; n < 4; ++n) phi[a * 4 + n] = a;
    auto act = std::make_shared<const LaxAction>(strictify(klein4(), cyclic_group(3), phi));
    auto g = groth(act);
    CHECK(find_isomorphism(g.underlying, product_monoid(klein4(), cyclic_group(3)).monoid));
    auto r = groth_projection_report(g);
    CHECK(r.report.is_fibration);
    CHECK(all_pass(r.verdicts));
}

TEST_CASE("quaternion construction") {
    auto q = quaternion_action();
    auto g = groth(q);
    REQUIRE(g.underlying->order() == 8);
    CHECK(g.underlying->is_group());
    CHECK(find_isomorphism(g.underlying, q8()));
    CHECK(oracle::isomorphic(oracle::raw(*g.underlying), oracle::raw(*q8())));
    CHECK(oracle::raw(*g.underlying).t == oracle::extension(module_of(*q), gamma_of(*q)).t);

    auto rep = groth_projection_report(g);
    CHECK(rep.report.is_fibration);
    CHECK(all_pass(rep.verdicts));
}

TEST_CASE("C2 by C2 with gamma_tt = t is C4") {
    auto c2 = cyclic_group(2);
    auto act = std::make_shared<const LaxAction>(c2, c2, std::vector<Elem>{0, 0, 1, 1}, std::vector<Elem>{0, 0, 0, 1});
    auto g = groth(act);
    auto r = oracle::raw(*g.underlying);
    int order4 = 0;
    for (int x = 0; x < r.n; ++x) order4 += oracle::element_order(r, x) == 4;
    CHECK(order4 == 2);
    CHECK(find_isomorphism(g.underlying, cyclic_group(4)));
}

TEST_CASE("lax-not-pseudo projection") {
    auto act = lax_idempotent_action();
    auto g = groth(act);
    auto rep = groth_projection_report(g);
    CHECK(rep.report.is_prefibration);
    for (Elem m = 0; m < 2; ++m) CHECK(is_precartesian(g.projection, g.encode(m, 0)));
    const auto m = oracle::raw(*g.underlying);
    const auto n = oracle::raw(*g.projection.target());
    const auto s = oracle::raw_map(g.projection);
    CHECK(rep.report.is_fibration == oracle::covers_base(n, s, oracle::car_set(m, n, s)));
    CHECK_FALSE(rep.report.is_fibration);
    CHECK(all_pass(rep.verdicts));
    CHECK(oracle::raw(*g.underlying).t == oracle::extension(module_of(*act), gamma_of(*act)).t);
}

TEST_CASE("invalid data is rejected naming the axiom") {
    auto q = quaternion_action();
    auto gm = q->gamma_table();
    gm[1 * 4 + 2] = 1;
    auto bad = std::make_shared<const LaxAction>(q->acting(), q->carrier(), q->phi_table(), gm);
    try {
        groth(bad);
        FAIL("expected InvalidAction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidAction);
        CHECK(std::string(e.what()).find("gamma_cocycle") != std::string::npos);
    }
}

TEST_CASE("functor on homomorphisms and cells") {
    auto q = quaternion_action();
    auto gq = groth(q);
    auto idq = identity_lax_hom(q);
    CHECK(groth_on_hom(idq, gq, gq).map() == identity_hom(gq.underlying).map());

    auto c2 = cyclic_group(2);
    auto c4 = cyclic_group(4);
    std::vector<Elem> phi4{0, 0, 1, 1, 2, 2, 3, 3};
    auto a4 = std::make_shared<const LaxAction>(strictify(c2, c4, phi4));
    auto a2 = std::make_shared<const LaxAction>(strictify(c2, c2, {0, 0, 1, 1}));
    LaxHom f(a4, a2, MonoidHom(c4, c2, {0, 1, 0, 1}), {0, 1});
    LaxHom g(a2, a2, identity_hom(c2), {0, 1});
    auto g4 = groth(a4);
    auto g2 = groth(a2);
    auto lhs = groth_on_hom(compose_lax_homs(g, f), g4, g2);
    auto rhs = compose(groth_on_hom(g, g2, g2), groth_on_hom(f, g4, g2));
    CHECK(lhs.map() == rhs.map());

    CHECK(groth_on_cell({idq, idq, 0}, gq, gq) == gq.encode(0, 0));
    CHECK(groth_on_cell({idq, idq, 1}, gq, gq) == gq.encode(0, 1));

    auto inv = inversion_action();
    auto gi = groth(inv);
    auto idi = identity_lax_hom(inv);
    CHECK_THROWS_AS(groth_on_cell({idi, idi, 1}, gi, gi), Error);
}
