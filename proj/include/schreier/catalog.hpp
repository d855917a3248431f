#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "schreier/json_io.hpp"

namespace schreier {

/// One catalog file: kind is "monoid", "hom", "action" or "module".
struct CatalogEntry {
    std::string id;
    std::string kind;
    std::string note;
    json payload;
};

std::vector<CatalogEntry> builtin_catalog();
/// Writes one <id>.json per builtin entry.
void write_catalog(const std::filesystem::path& dir);

template <class T>
struct Named {
    std::string id;
    T value;
};

struct Catalog {
    std::filesystem::path dir;
    std::vector<Named<MonoidPtr>> monoids;
    std::vector<Named<MonoidHom>> homs;
    std::vector<Named<LaxActionPtr>> actions;
    std::vector<Named<NModule>> modules;

    const MonoidHom& hom(const std::string& id) const;
    const LaxActionPtr& action(const std::string& id) const;
    const NModule& module(const std::string& id) const;
};

/// $SCHREIER_CATALOG if set, else ./catalog.
std::filesystem::path default_catalog_dir();
/// Loads every *.json in dir, sorted by id. Throws Error{Parse}.
Catalog load_catalog(const std::filesystem::path& dir);

/// Klein four acting trivially on {1,-1} with the quaternion sign cocycle.
LaxActionPtr quaternion_action();
/// {1,e} with trivial C2 action and gamma_{t,t} = e.
LaxActionPtr lax_idempotent_action();
/// C2 acting on C3 by inversion.
LaxActionPtr inversion_action();

} // namespace schreier
