#include "schreier/catalog.hpp"

#include <algorithm>
#include <cstdlib>

#include "schreier/generators.hpp"

namespace schreier {

namespace fs = std::filesystem;

LaxActionPtr quaternion_action() {
    auto n = klein4();
    auto a = cyclic_group(2);
    std::vector<Elem> phi{0, 0, 0, 0, 1, 1, 1, 1};
    // -1 at (x,x) (x,xy) (y,x) (y,y) (xy,y) (xy,xy)
    std::vector<Elem> gamma{0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1};
    return std::make_shared<const LaxAction>(n, a, std::move(phi), std::move(gamma));
}

LaxActionPtr lax_idempotent_action() {
    return std::make_shared<const LaxAction>(cyclic_group(2), semilattice2(), std::vector<Elem>{0, 0, 1, 1},
                                             std::vector<Elem>{0, 0, 0, 1});
}

LaxActionPtr inversion_action() {
    return std::make_shared<const LaxAction>(strictify(cyclic_group(2), cyclic_group(3), {0, 0, 1, 2, 2, 1}));
}

namespace {

std::vector<Elem> mod_map(std::size_t order, std::size_t n) {
    std::vector<Elem> m(order);
    for (std::size_t i = 0; i < order; ++i) m[i] = Elem(i % n);
    return m;
}

json hom_payload(const std::string& src, const std::string& tgt, std::vector<Elem> map) {
    json j;
    j["source"] = src;
    j["target"] = tgt;
    j["map"] = std::move(map);
    return j;
}

json module_payload(const LaxAction& a) {
    json j = action_to_json(a);
    j.erase("gamma");
    return j;
}

std::vector<Elem> identity_map(std::size_t n) {
    std::vector<Elem> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = Elem(i);
    return m;
}

} // namespace

std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> out;
    auto monoid = [&](std::string id, const MonoidPtr& m, std::string note) {
        out.push_back({std::move(id), "monoid", std::move(note), monoid_to_json(*m)});
    };
    auto hom = [&](std::string id, std::string src, std::string tgt, std::vector<Elem> map, std::string note) {
        out.push_back({std::move(id), "hom", std::move(note), hom_payload(src, tgt, std::move(map))});
    };

    const auto s3 = groth(inversion_action());
    const auto lax_e = groth(lax_idempotent_action());
    const auto c2xc4 = product_monoid(cyclic_group(2), cyclic_group(4));
    const auto c2xc3 = product_monoid(cyclic_group(2), cyclic_group(3));
    const auto pb = pullback(MonoidHom(cyclic_group(4), cyclic_group(2), mod_map(4, 2)), identity_hom(cyclic_group(2)));

    monoid("c1", cyclic_group(1), "trivial monoid");
    monoid("c2", cyclic_group(2), "cyclic group of order 2");
    monoid("c3", cyclic_group(3), "cyclic group of order 3");
    monoid("c4", cyclic_group(4), "cyclic group of order 4");
    monoid("c6", cyclic_group(6), "cyclic group of order 6");
    monoid("c12", cyclic_group(12), "cyclic group of order 12");
    monoid("klein4", klein4(), "Klein four group");
    monoid("q8", q8(), "quaternion group");
    monoid("c33", cyclic_monoid(3, 3), "<t | t^6 = t^3>");
    monoid("c22", cyclic_monoid(2, 2), "<t | t^4 = t^2>");
    monoid("c24", cyclic_monoid(2, 4), "<t | t^6 = t^2>");
    monoid("c13", cyclic_monoid(1, 3), "<t | t^4 = t>");
    monoid("b2", semilattice2(), "two-element semilattice {1, e}");
    monoid("ft2", full_transformation(2), "self-maps of a two-element set");
    monoid("ft2op", opposite(full_transformation(2)), "opposite of ft2");
    monoid("trunc3", truncated_add(3), "{0..3} under capped addition");
    monoid("s3", s3.underlying, "C2 acting on C3 by inversion, semidirect product");
    monoid("lax_e", lax_e.underlying, "Grothendieck monoid of the idempotent lax action");
    monoid("c2xc4", c2xc4.monoid, "C2 x C4");
    monoid("c2xc3", c2xc3.monoid, "C2 x C3");
    monoid("pb_c4_c2", pb.monoid, "pullback of C4 -> C2 along the identity of C2");

    hom("c33_to_c3", "c33", "c3", mod_map(6, 3), "prefibration that is not a fibration");
    hom("c4_to_c2", "c4", "c2", mod_map(4, 2), "C4 as an extension of C2 by C2");
    hom("q8_over_klein4", "q8", "klein4", {0, 0, 1, 1, 2, 2, 3, 3}, "quaternion extension of the Klein group");
    hom("id_c2", "c2", "c2", identity_map(2), "identity");
    hom("id_klein4", "klein4", "klein4", identity_map(4), "identity");
    hom("id_c33", "c33", "c33", identity_map(6), "identity of a non-group");
    hom("id_q8", "q8", "q8", identity_map(8), "identity");
    hom("c6_to_c3", "c6", "c3", mod_map(6, 3), "group epimorphism");
    hom("c6_to_c2", "c6", "c2", mod_map(6, 2), "group epimorphism");
    hom("c12_to_c4", "c12", "c4", mod_map(12, 4), "group epimorphism with kernel C3");
    hom("c12_to_c6", "c12", "c6", mod_map(12, 6), "group epimorphism with kernel C2");
    hom("c22_to_c2", "c22", "c2", mod_map(4, 2), "truncation, lax kernel action");
    hom("c24_to_c4", "c24", "c4", mod_map(6, 4), "truncation onto C4");
    hom("c13_to_c3", "c13", "c3", mod_map(4, 3), "truncation onto C3");
    hom("klein4_to_c2", "klein4", "c2", {0, 1, 0, 1}, "product projection");
    hom("c2xc4_to_c4", "c2xc4", "c4", c2xc4.second.map(), "product projection");
    hom("c2xc3_to_c3", "c2xc3", "c3", c2xc3.second.map(), "product projection");
    hom("s3_to_c2", "s3", "c2", s3.projection.map(), "semidirect product projection");
    hom("c3_to_c1", "c3", "c1", std::vector<Elem>(3, 0), "map to the trivial monoid");
    hom("q8_to_c1", "q8", "c1", std::vector<Elem>(8, 0), "map to the trivial monoid, non-commutative kernel");
    hom("b2_to_c1", "b2", "c1", {0, 0}, "map to the trivial monoid, non-group kernel");
    hom("ft2_to_b2", "ft2", "b2", {1, 0, 0, 1}, "units to 1, constants to e");
    hom("ft2op_to_b2", "ft2op", "b2", {1, 0, 0, 1}, "opposite of ft2_to_b2");
    hom("trunc3_to_b2", "trunc3", "b2", {0, 1, 1, 1}, "not a prefibration");
    hom("c2_into_c4", "c2", "c4", {0, 2}, "not surjective");
    hom("lax_e_to_c2", "lax_e", "c2", lax_e.projection.map(), "projection of a lax, non-pseudo action");
    hom("pb_c4_c2_to_c2", "pb_c4_c2", "c2", pb.to_second.map(), "pulled-back fibration");

    auto action = [&](std::string id, const LaxActionPtr& a, std::string note) {
        out.push_back({std::move(id), "action", std::move(note), action_to_json(*a)});
    };
    auto strict = [&](const MonoidPtr& n, const MonoidPtr& a, std::vector<Elem> phi) {
        return std::make_shared<const LaxAction>(strictify(n, a, std::move(phi)));
    };
    auto c2 = cyclic_group(2);
    std::vector<Elem> triv_c2_c2{0, 0, 1, 1};
    action("quaternion_action", quaternion_action(), "Klein group on {1,-1}, quaternion sign cocycle");
    action("trivial_c2_on_c2", strict(c2, c2, triv_c2_c2), "trivial strict action");
    action("c4_cocycle_action", std::make_shared<const LaxAction>(c2, c2, triv_c2_c2, std::vector<Elem>{0, 0, 0, 1}),
           "trivial action with gamma_{t,t} = t");
    action("inversion_action", inversion_action(), "C2 acting on C3 by inversion");
    action("lax_e_action", lax_idempotent_action(), "lax action with non-invertible gamma");
    action("b2_action_on_c2", strict(semilattice2(), c2, {0, 0, 1, 0}), "e acts as the constant map to 1");
    action("klein4_trivial_on_c2", strict(klein4(), c2, {0, 0, 0, 0, 1, 1, 1, 1}), "trivial strict action");

    auto module = [&](std::string id, const LaxActionPtr& a, std::string note) {
        out.push_back({std::move(id), "module", std::move(note), module_payload(*a)});
    };
    module("c2_on_c2_trivial", strict(c2, c2, triv_c2_c2), "trivial module, N = A = C2");
    module("klein4_on_c2_trivial", strict(klein4(), c2, {0, 0, 0, 0, 1, 1, 1, 1}), "trivial module over the Klein group");
    module("c2_on_c3_inversion", inversion_action(), "C3 with C2 acting by inversion");
    module("c1_on_c2", strict(cyclic_group(1), c2, {0, 1}), "trivial base");
    module("b2_on_c2", strict(semilattice2(), c2, {0, 0, 1, 0}), "non-group base");
    return out;
}

void write_catalog(const fs::path& dir) {
    fs::create_directories(dir);
    for (const auto& e : builtin_catalog()) {
        json j;
        j["kind"] = e.kind;
        j["note"] = e.note;
        for (const auto& [k, v] : e.payload.items()) j[k] = v;
        save_json(dir / (e.id + ".json"), j);
    }
}

fs::path default_catalog_dir() {
    if (const char* env = std::getenv("SCHREIER_CATALOG"); env && *env) return env;
    return "catalog";
}

Catalog load_catalog(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw Error(ErrorKind::Parse, "catalog directory " + dir.string() + " not found");
    std::vector<fs::path> files;
    for (const auto& f : fs::directory_iterator(dir)) {
        if (f.path().extension() == ".json") files.push_back(f.path());
    }
    std::sort(files.begin(), files.end());
    Catalog c;
    c.dir = dir;
    const Resolver r(dir);
    for (const auto& f : files) {
        const auto j = load_json(f);
        const auto id = f.stem().string();
        const auto kind = j.value("kind", std::string{});
        try {
            if (kind == "monoid") {
                c.monoids.push_back({id, monoid_from_json(j, r)});
            } else if (kind == "hom") {
                c.homs.push_back({id, hom_from_json(j, r)});
            } else if (kind == "action") {
                c.actions.push_back({id, action_from_json(j, r)});
            } else if (kind == "module") {
                c.modules.push_back({id, module_from_json(j, r)});
            } else {
                throw Error(ErrorKind::Parse, "unknown kind '" + kind + "'");
            }
        } catch (const Error& e) {
            throw Error(e.kind(), f.string() + ": " + e.what());
        }
    }
    return c;
}

namespace {
template <class T>
const T& lookup(const std::vector<Named<T>>& v, const std::string& id) {
    for (const auto& e : v) {
        if (e.id == id) return e.value;
    }
    throw Error(ErrorKind::Parse, "catalog has no entry '" + id + "'");
}
} // namespace

const MonoidHom& Catalog::hom(const std::string& id) const { return lookup(homs, id); }
const LaxActionPtr& Catalog::action(const std::string& id) const { return lookup(actions, id); }
const NModule& Catalog::module(const std::string& id) const { return lookup(modules, id); }

} // namespace schreier
