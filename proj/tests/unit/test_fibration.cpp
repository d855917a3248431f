#include <catch2/catch_amalgamated.hpp>

#include "../oracles/oracles.hpp"
#include "schreier/catalog.hpp"
#include "schreier/fibration.hpp"
#include "schreier/generators.hpp"

using namespace schreier;

namespace {

std::vector<int> as_int(const std::vector<Elem>& v) { return {v.begin(), v.end()}; }

const Catalog& catalog() {
    static const Catalog c = load_catalog(SCHREIER_TEST_CATALOG);
    return c;
}

// t^i -> t^(4i) on C(3,3); lies over C3 but moves t onto the non-precartesian t^4.
MonoidHom kernel_twist() {
    auto c33 = cyclic_monoid(3, 3);
    std::vector<Elem> map(6);
    for (Elem i = 0; i < 6; ++i) {
        std::size_t k = 4 * i;
        map[i] = Elem(k < 3 ? k : 3 + (k - 3) % 3);
    }
    return MonoidHom(c33, c33, map);
}

} // namespace

TEST_CASE("identity homomorphism") {
    auto m = full_transformation(2);
    auto id = identity_hom(m);
    for (Elem x = 0; x < m->order(); ++x) {
        CHECK(is_precartesian(id, x));
    }
    auto r = analyze(id);
    CHECK(r.is_fibration);
    CHECK(r.pcar.size() == m->order());
    CHECK(r.car.size() == m->order());
}

TEST_CASE("C(3,3) over C3") {
    auto s = cyclic_reduction(3, 3);
    CHECK(is_precartesian(s, 1));
    CHECK_FALSE(is_precartesian(s, 4));
    CHECK_FALSE(is_cartesian(s, 1));
    auto r = analyze(s);
    CHECK(r.is_prefibration);
    CHECK_FALSE(r.is_fibration);
    CHECK(r.pcar == std::vector<Elem>{0, 1, 2});
    CHECK(r.car == std::vector<Elem>{0});
    CHECK_FALSE(r.in_pcar(s.source()->mul(1, 2)));

    const auto lemmas = check_closure_lemmas(r);
    CHECK(all_pass(lemmas));
}

TEST_CASE("invertible elements and product projections are cartesian") {
    auto s = cyclic_reduction(3, 3);
    auto q = catalog().hom("q8_over_klein4");
    for (Elem x : q.source()->unit_elements()) CHECK(is_cartesian(q, x));

    auto p = product_monoid(cyclic_monoid(3, 3), cyclic_group(3));
    for (Elem n = 0; n < 3; ++n) CHECK(is_cartesian(p.second, p.encode(0, n)));
    (void)s;
}

TEST_CASE("group epimorphism is a fibration") {
    auto r = analyze(catalog().hom("c4_to_c2"));
    CHECK(r.is_fibration);
    CHECK(r.pcar.size() == 4);
}

TEST_CASE("reports agree with the literal definitions on every catalog homomorphism") {
    REQUIRE(catalog().homs.size() >= 20);
    for (const auto& [id, h] : catalog().homs) {
        INFO(id);
        const auto m = oracle::raw(*h.source());
        const auto n = oracle::raw(*h.target());
        const auto s = oracle::raw_map(h);
        const auto r = analyze(h);
        const auto pc = oracle::pcar_set(m, n, s);
        const auto ca = oracle::car_set(m, n, s);
        CHECK(as_int(r.pcar) == pc);
        CHECK(as_int(r.car) == ca);
        CHECK(r.is_prefibration == oracle::covers_base(n, s, pc));
        CHECK(r.is_fibration == oracle::covers_base(n, s, ca));

        const auto mo = oracle::raw(*opposite(h.source()));
        const auto no = oracle::raw(*opposite(h.target()));
        const auto ro = analyze_opposite(h);
        CHECK(as_int(ro.pcar) == oracle::pcar_set(mo, no, s));
        CHECK(as_int(ro.car) == oracle::car_set(mo, no, s));

        CHECK(all_pass(check_closure_lemmas(r)));
    }
}

TEST_CASE("non-prefibrations") {
    CHECK_FALSE(analyze(catalog().hom("trunc3_to_b2")).is_prefibration);
    CHECK_FALSE(analyze(catalog().hom("c2_into_c4")).is_prefibration);
}

TEST_CASE("composition, products and pullbacks") {
    auto s = cyclic_reduction(3, 3);
    auto same = compose_check(s, identity_hom(s.target()));
    CHECK(same.composite.pcar == analyze(s).pcar);
    CHECK(all_pass(same.verdicts));

    auto chain = compose_check(catalog().hom("c2xc4_to_c4"), catalog().hom("c4_to_c2"));
    CHECK(chain.composite.is_fibration);
    CHECK(all_pass(chain.verdicts));
    CHECK_THROWS_AS(compose_check(catalog().hom("c4_to_c2"), catalog().hom("c4_to_c2")), Error);

    auto a = product_monoid(cyclic_group(2), cyclic_group(3));
    auto b = product_monoid(a.monoid, cyclic_group(2));
    auto pp = compose_check(b.first, a.second);
    CHECK(pp.composite.is_fibration);

    CHECK(all_pass(product_check(s, catalog().hom("c4_to_c2"))));
    CHECK(all_pass(pullback_check(catalog().hom("c4_to_c2"), identity_hom(cyclic_group(2)))));
    CHECK(all_pass(pullback_check(s, identity_hom(s.target()))));
}

TEST_CASE("cartesian morphisms") {
    auto s = cyclic_reduction(3, 3);
    CHECK(is_cartesian_morphism(identity_hom(s.source()), s, s));
    auto twist = kernel_twist();
    CHECK(twist(1) == 4);
    CHECK_FALSE(is_cartesian_morphism(twist, s, s));
    CHECK_THROWS_AS(is_cartesian_morphism(identity_hom(s.source()), s, trivial_hom(s.source(), s.target())), Error);
}
