#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "../oracles/oracles.hpp"
#include "schreier/automorphism.hpp"
#include "schreier/catalog.hpp"
#include "schreier/generators.hpp"

using namespace schreier;

namespace {

const Catalog& catalog() {
    static const Catalog c = load_catalog(SCHREIER_TEST_CATALOG);
    return c;
}

std::set<std::vector<int>> psi_set(const std::vector<AutTriple>& ts) {
    std::set<std::vector<int>> out;
    for (const auto& t : ts) out.insert({t.psi.begin(), t.psi.end()});
    return out;
}

std::set<std::vector<int>> oracle_set(const MonoidHom& h) {
    auto v = oracle::aut_A(oracle::raw(*h.source()), oracle::raw(*h.target()), oracle::raw_map(h));
    return {v.begin(), v.end()};
}

Perm identity_perm(std::size_t n) {
    Perm p(n);
    for (Elem i = 0; i < n; ++i) p[i] = i;
    return p;
}

} // namespace

TEST_CASE("trivial kernel gives Aut(N)") {
    auto h = catalog().hom("id_q8");
    auto ts = aut_A(canonical_cleavage(h));
    CHECK(ts.size() == automorphisms(h.target()).size());
    CHECK(ts.size() == 24);
}

TEST_CASE("parametrization matches the brute-force oracle") {
    for (const auto& [id, h] : catalog().homs) {
        if (h.source()->order() > 8 || !analyze(h).is_prefibration) continue;
        INFO(id);
        auto ts = aut_A(canonical_cleavage(h));
        for (const auto& t : ts) CHECK(t.audited);
        const auto lib = psi_set(ts);
        CHECK(lib == oracle_set(h));
        std::set<std::vector<int>> brute;
        for (const auto& p : aut_A_bruteforce(h)) brute.insert({p.begin(), p.end()});
        CHECK(lib == brute);
    }
}

TEST_CASE("restriction and descent") {
    auto q = catalog().hom("q8_over_klein4");
    auto cl = canonical_cleavage(q);
    auto [theta, eta] = restrict_and_descend(identity_perm(8), cl);
    CHECK(theta == identity_perm(2));
    CHECK(eta == identity_perm(4));

    auto m = q.source();
    Perm conj(8);
    for (Elem x = 0; x < 8; ++x) conj[x] = m->mul(m->mul(2, x), m->inverse(2));
    auto [th2, et2] = restrict_and_descend(conj, cl);
    CHECK(th2 == identity_perm(2));
    CHECK(et2 == identity_perm(4));

    // swap i and j, k -> -k: moves the fibers of x and y
    auto [th3, et3] = restrict_and_descend({0, 1, 4, 5, 2, 3, 7, 6}, cl);
    CHECK(et3 == Perm{0, 2, 1, 3});
    (void)th3;

    auto kind = [&](const Perm& p, const Cleavage& c) {
        try {
            restrict_and_descend(p, c);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind({0, 1, 4, 5, 2, 3, 6, 7}, cl) == ErrorKind::NotHomomorphism);
    CHECK(kind({0, 0, 2, 3, 4, 5, 6, 7}, cl) == ErrorKind::NotHomomorphism);
    auto v = canonical_cleavage(catalog().hom("klein4_to_c2"));
    CHECK(kind({0, 2, 1, 3}, v) == ErrorKind::NotKernelPreserving);
}

TEST_CASE("the group C") {
    for (const char* id : {"klein4_to_c2", "c2xc3_to_c3", "c2xc4_to_c4"}) {
        INFO(id);
        auto h = catalog().hom(id);
        auto cl = canonical_cleavage(h);
        auto c = compute_C(cl);
        CHECK(c.subgroup.pass);
        CHECK(c.pairs.size() == automorphisms(cl.carrier()).size() * automorphisms(h.target()).size());
    }

    auto q = catalog().hom("q8_over_klein4");
    auto cl = canonical_cleavage(q);
    auto c = compute_C(cl);
    CHECK(c.subgroup.pass);
    auto ts = aut_A(cl);
    for (const auto& t : ts) CHECK(c.find(t.theta, t.eta) != kNoElem);
    for (const auto& [a1, b1] : c.pairs)
        for (const auto& [a2, b2] : c.pairs) CHECK(c.find(compose_perm(a1, a2), compose_perm(b1, b2)) != kNoElem);

    auto r = rho(cl, ts, c);
    CHECK(all_pass(r.verdicts));
    CHECK(c.pairs[r.image[0]] == std::pair<Perm, Perm>{identity_perm(2), identity_perm(4)});
}

TEST_CASE("permutation helpers") {
    Perm p{1, 2, 0};
    CHECK(compose_perm(p, invert_perm(p)) == identity_perm(3));
    CHECK(compose_perm(p, p) == Perm{2, 0, 1});
}

TEST_CASE("brute force is bounded") {
    auto p = product_monoid(cyclic_group(3), cyclic_group(3));
    CHECK_THROWS_AS(aut_A_bruteforce(p.second), SizeLimitError);
}
