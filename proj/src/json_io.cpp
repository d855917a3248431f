#include "schreier/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace schreier {

namespace fs = std::filesystem;

namespace {

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("field '") + key + "': " + e.what());
    }
}

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& rows, std::size_t cols, const char* what) {
    std::vector<Elem> out;
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error(ErrorKind::Shape, std::string(what) + " has a row of wrong length");
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

json rows(const std::vector<Elem>& flat, std::size_t cols) {
    json out = json::array();
    for (std::size_t i = 0; i < flat.size(); i += cols) {
        out.push_back(std::vector<Elem>(flat.begin() + long(i), flat.begin() + long(i + cols)));
    }
    return out;
}

} // namespace

fs::path Resolver::locate(const std::string& id) const {
    std::vector<fs::path> dirs;
    if (const char* env = std::getenv("SCHREIER_CATALOG"); env && *env) dirs.emplace_back(env);
    if (!base_.empty()) dirs.push_back(base_);
    dirs.emplace_back("catalog");
    for (const auto& d : dirs) {
        const auto p = d / (id + ".json");
        if (fs::exists(p)) return p;
    }
    throw Error(ErrorKind::Parse, "catalog id '" + id + "' not found");
}

MonoidPtr Resolver::monoid(const std::string& id) const {
    const auto path = locate(id);
    return monoid_from_json(load_json(path), Resolver(path.parent_path()));
}

json load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
}

void save_json(const fs::path& path, const json& value) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
    out << value.dump(2) << "\n";
}

json monoid_to_json(const FiniteMonoid& m) {
    json j;
    j["order"] = m.order();
    j["identity"] = m.identity();
    j["table"] = rows(m.flat_table(), m.order());
    if (m.has_names()) j["names"] = m.names();
    return j;
}

json hom_to_json(const MonoidHom& h) {
    json j;
    j["source"] = monoid_to_json(*h.source());
    j["target"] = monoid_to_json(*h.target());
    j["map"] = h.map();
    return j;
}

json action_to_json(const LaxAction& a) {
    json j;
    j["acting"] = monoid_to_json(*a.acting());
    j["carrier"] = monoid_to_json(*a.carrier());
    j["phi"] = rows(a.phi_table(), a.acting()->order());
    j["gamma"] = rows(a.gamma_table(), a.acting()->order());
    return j;
}

json module_to_json(const NModule& m) {
    json j;
    j["acting"] = monoid_to_json(*m.acting());
    j["carrier"] = monoid_to_json(*m.carrier());
    j["phi"] = rows(m.phi_table(), m.acting()->order());
    return j;
}

MonoidPtr monoid_from_json(const json& j, const Resolver& r) {
    if (j.is_string()) return r.monoid(j.get<std::string>());
    const auto order = get<std::size_t>(j, "order");
    const auto table = get<std::vector<std::vector<Elem>>>(j, "table");
    if (table.size() != order) throw Error(ErrorKind::Shape, "table must have 'order' rows");
    std::vector<std::string> names;
    if (j.contains("names")) names = get<std::vector<std::string>>(j, "names");
    return make_monoid_flat(order, flatten(table, order, "table"), get<Elem>(j, "identity"), std::move(names));
}

MonoidHom hom_from_json(const json& j, const Resolver& r) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target")) {
        throw Error(ErrorKind::Parse, "hom needs 'source' and 'target'");
    }
    return MonoidHom(monoid_from_json(j["source"], r), monoid_from_json(j["target"], r),
                     get<std::vector<Elem>>(j, "map"));
}

LaxActionPtr action_from_json(const json& j, const Resolver& r) {
    if (!j.is_object() || !j.contains("acting") || !j.contains("carrier")) {
        throw Error(ErrorKind::Parse, "action needs 'acting' and 'carrier'");
    }
    auto n = monoid_from_json(j["acting"], r);
    auto a = monoid_from_json(j["carrier"], r);
    auto phi = flatten(get<std::vector<std::vector<Elem>>>(j, "phi"), n->order(), "phi");
    std::vector<Elem> gamma;
    if (j.contains("gamma")) {
        gamma = flatten(get<std::vector<std::vector<Elem>>>(j, "gamma"), n->order(), "gamma");
    } else {
        gamma.assign(n->order() * n->order(), a->identity());
    }
    return std::make_shared<const LaxAction>(n, a, std::move(phi), std::move(gamma));
}

NModule module_from_json(const json& j, const Resolver& r) {
    if (!j.is_object() || !j.contains("acting") || !j.contains("carrier")) {
        throw Error(ErrorKind::Parse, "module needs 'acting' and 'carrier'");
    }
    auto n = monoid_from_json(j["acting"], r);
    auto a = monoid_from_json(j["carrier"], r);
    return NModule(n, a, flatten(get<std::vector<std::vector<Elem>>>(j, "phi"), n->order(), "phi"));
}

MonoidPtr load_monoid(const fs::path& path) { return monoid_from_json(load_json(path), Resolver(path.parent_path())); }
MonoidHom load_hom(const fs::path& path) { return hom_from_json(load_json(path), Resolver(path.parent_path())); }
LaxActionPtr load_action(const fs::path& path) {
    return action_from_json(load_json(path), Resolver(path.parent_path()));
}
NModule load_module(const fs::path& path) { return module_from_json(load_json(path), Resolver(path.parent_path())); }

std::string digest(const json& j) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace schreier
