#include <catch2/catch_amalgamated.hpp>

#include "../oracles/oracles.hpp"
#include "schreier/generators.hpp"

using namespace schreier;

TEST_CASE("make_monoid accepts the small examples") {
    auto t = make_monoid({{0}}, 0);
    CHECK(t->order() == 1);
    auto c2 = make_monoid({{0, 1}, {1, 0}}, 0);
    CHECK(c2->is_group());
    auto v = klein4();
    CHECK(v->order() == 4);
    for (Elem x = 0; x < 4; ++x) CHECK(v->mul(x, x) == 0);
    CHECK(v->mul(1, 2) == v->mul(2, 1));
}

TEST_CASE("make_monoid rejects bad tables") {
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind([] { make_monoid({{0, 1}, {1}}, 0); }) == ErrorKind::Shape);
    CHECK(kind([] { make_monoid({{0, 1}, {1, 2}}, 0); }) == ErrorKind::Shape);
    CHECK(kind([] { make_monoid({{1, 0}, {0, 1}}, 0); }) == ErrorKind::BadIdentity);
    // identity ok, but (1*1)*2 != 1*(1*2)
    CHECK(kind([] { make_monoid({{0, 1, 2}, {1, 2, 0}, {2, 2, 2}}, 0); }) == ErrorKind::NotAssociative);
}

TEST_CASE("size limit is enforced") {
    ScopedSizeLimit lim(5);
    CHECK_NOTHROW(cyclic_group(5));
    CHECK_THROWS_AS(cyclic_group(6), SizeLimitError);
    CHECK_THROWS_AS(product_monoid(cyclic_group(3), cyclic_group(2)), SizeLimitError);
}

TEST_CASE("generators") {
    CHECK(cyclic_group(1)->order() == 1);

    auto c33 = cyclic_monoid(3, 3);
    REQUIRE(c33->order() == 6);
    const Elem t = 1;
    Elem p = c33->identity();
    std::vector<Elem> pw;
    for (int i = 0; i <= 6; ++i) {
        pw.push_back(p);
        p = c33->mul(p, t);
    }
    CHECK(pw[6] == pw[3]);
    CHECK(oracle::associative(oracle::raw(*c33)));

    auto q = oracle::raw(*q8());
    int order2 = 0, order4 = 0;
    for (int x = 0; x < q.n; ++x) {
        const int o = oracle::element_order(q, x);
        order2 += o == 2;
        order4 += o == 4;
    }
    CHECK(order2 == 1);
    CHECK(order4 == 6);

    CHECK(full_transformation(2)->order() == 4);
    CHECK(full_transformation(3)->order() == 27);
    CHECK_THROWS_AS(full_transformation(4), Error);
    CHECK(oracle::associative(oracle::raw(*full_transformation(3))));
    CHECK_FALSE(full_transformation(2)->is_commutative());

    auto tr = truncated_add(3);
    CHECK(tr->order() == 4);
    CHECK(tr->mul(2, 3) == 3);
    CHECK(tr->mul(1, 1) == 2);
}

TEST_CASE("units") {
    CHECK(units(cyclic_group(1)).size() == 1);
    CHECK(units(q8()).size() == 8);
    auto u = units(cyclic_monoid(3, 3));
    CHECK(u.elements == std::vector<Elem>{0});
    CHECK(units(full_transformation(3)).size() == 6);
}

TEST_CASE("kernel and image") {
    auto v = klein4();
    auto c2 = cyclic_group(2);
    MonoidHom first(v, c2, {0, 1, 0, 1});
    CHECK(kernel(identity_hom(c2)).elements == std::vector<Elem>{0});
    CHECK(kernel(first).size() == 2);
    CHECK(kernel(cyclic_reduction(3, 3)).elements == std::vector<Elem>{0, 3});
    CHECK(image(first).size() == 2);
    CHECK_THROWS_AS(MonoidHom(c2, cyclic_group(4), {0, 1}), Error);
    CHECK_THROWS_AS(MonoidHom(c2, v, {0}), Error);
    CHECK_THROWS_AS(MonoidHom(cyclic_group(3), c2, {0, 1, 1}), Error);
}

TEST_CASE("products") {
    auto c1 = cyclic_group(1);
    auto c2 = cyclic_group(2);
    auto c3 = cyclic_group(3);
    CHECK(find_isomorphism(product_monoid(c1, c3).monoid, c3));
    CHECK(find_isomorphism(product_monoid(c2, c2).monoid, klein4()));
    auto c6 = product_monoid(c2, c3).monoid;
    CHECK(find_isomorphism(c6, cyclic_group(6)));
    CHECK(oracle::isomorphic(oracle::raw(*c6), oracle::raw(*cyclic_group(6))));
    CHECK_FALSE(find_isomorphism(product_monoid(c2, c2).monoid, cyclic_group(4)));
}

TEST_CASE("pullbacks") {
    auto c4 = cyclic_group(4);
    auto c2 = cyclic_group(2);
    auto diag = pullback(identity_hom(c4), identity_hom(c4));
    CHECK(find_isomorphism(diag.monoid, c4));

    MonoidHom s(c4, c2, {0, 1, 0, 1});
    auto fiber = pullback(s, trivial_hom(cyclic_group(1), c2));
    CHECK(fiber.monoid->order() == kernel(s).size());

    auto pb = pullback(s, identity_hom(c2));
    CHECK(pb.monoid->order() == 4);
}

TEST_CASE("opposite") {
    auto c4 = cyclic_group(4);
    CHECK(*opposite(c4) == *c4);
    auto ft = full_transformation(2);
    CHECK(*opposite(opposite(ft)) == *ft);
    auto s3 = full_transformation(3);
    // symmetric group on 3 letters inside the transformation monoid
    auto sub = materialize(units(s3));
    REQUIRE(sub.monoid->order() == 6);
    CHECK_FALSE(*opposite(sub.monoid) == *sub.monoid);
}

TEST_CASE("isomorphism search agrees with the permutation oracle") {
    std::vector<MonoidPtr> ms{cyclic_group(4), klein4(), cyclic_monoid(2, 2), truncated_add(3), full_transformation(2),
                              q8(), cyclic_monoid(3, 3)};
    for (const auto& a : ms) {
        for (const auto& b : ms) {
            const bool lib = find_isomorphism(a, b).has_value();
            CHECK(lib == oracle::isomorphic(oracle::raw(*a), oracle::raw(*b)));
        }
        CHECK(automorphisms(a).size() == oracle::all_isos(oracle::raw(*a), oracle::raw(*a)).size());
    }
    CHECK(automorphisms(q8()).size() == 24);
    auto self = find_isomorphism(q8(), q8());
    REQUIRE(self);
    CHECK(self->map() == identity_hom(q8()).map());
}

TEST_CASE("index and period") {
    auto c33 = cyclic_monoid(3, 3);
    CHECK(index_and_period(*c33, 1) == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(index_and_period(*cyclic_group(4), 1).second == 4);
}
