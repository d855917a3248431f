#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "schreier/catalog.hpp"
#include "schreier/generators.hpp"
#include "schreier/suite.hpp"

using namespace schreier;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    auto p = fs::temp_directory_path() / ("schreier_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("json round trips") {
    Resolver r{fs::path(SCHREIER_TEST_CATALOG)};
    auto q = q8();
    auto back = monoid_from_json(monoid_to_json(*q), r);
    CHECK(*back == *q);
    CHECK(back->names() == q->names());

    auto act = quaternion_action();
    CHECK(*action_from_json(action_to_json(*act), r) == *act);

    auto h = cyclic_reduction(3, 3);
    CHECK(hom_from_json(hom_to_json(h), r) == h);

    json ref;
    ref["source"] = "c33";
    ref["target"] = "c3";
    ref["map"] = {0, 1, 2, 0, 1, 2};
    CHECK(hom_from_json(ref, r).map() == h.map());

    json bad = monoid_to_json(*q);
    bad["table"][1][1] = 7;
    CHECK_THROWS_AS(monoid_from_json(bad, r), Error);
    CHECK_THROWS_AS(monoid_from_json(json::parse("{\"order\": 2}"), r), Error);
}

TEST_CASE("digests are stable") {
    auto j = monoid_to_json(*klein4());
    CHECK(digest(j) == digest(monoid_to_json(*klein4())));
    CHECK(digest(j) != digest(monoid_to_json(*cyclic_group(4))));
    CHECK(digest(j).size() == 16);
}

TEST_CASE("catalog on disk matches the builtin entries") {
    auto c = load_catalog(SCHREIER_TEST_CATALOG);
    CHECK(c.homs.size() >= 20);
    for (const auto& [id, h] : c.homs) {
        CHECK(h.source()->order() <= 12);
    }
    const auto builtin = builtin_catalog();
    std::size_t files = 0;
    for (const auto& f : fs::directory_iterator(SCHREIER_TEST_CATALOG)) files += f.path().extension() == ".json";
    CHECK(files == builtin.size());
    for (const auto& e : builtin) {
        INFO(e.id);
        auto disk = load_json(fs::path(SCHREIER_TEST_CATALOG) / (e.id + ".json"));
        CHECK(disk["kind"] == e.kind);
        for (const auto& [k, v] : e.payload.items()) CHECK(disk[k] == v);
    }
    CHECK_THROWS_AS(c.hom("missing"), Error);
}

TEST_CASE("suite scopes and determinism") {
    auto c = load_catalog(SCHREIER_TEST_CATALOG);
    auto g = run_suite(c, "grothendieck");
    CHECK(g.ok());
    for (const auto& e : g.entries) CHECK(e.scope == "grothendieck");
    CHECK(run_suite(c, "grothendieck").to_json().dump() == g.to_json().dump());
    CHECK_THROWS_AS(run_suite(c, "nope"), Error);
}

TEST_CASE("mutated catalog fails the associated lemma") {
    auto dir = scratch_dir("mutated");
    write_catalog(dir);
    auto path = dir / "quaternion_action.json";
    auto j = load_json(path);
    auto& gamma = j["gamma"];
    REQUIRE(gamma.is_array());
    gamma[1][2] = gamma[1][2].get<int>() == 0 ? 1 : 0;
    save_json(path, j);

    auto c = load_catalog(dir);
    auto rep = run_suite(c, "lax-action");
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& e : rep.entries) {
        if (!e.verdict.pass && e.verdict.anchor == "gamma_cocycle" && e.subject == "quaternion_action") {
            found = true;
            CHECK_FALSE(e.verdict.witness.empty());
        }
    }
    CHECK(found);
    fs::remove_all(dir);
}
