#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "schreier/cohomology.hpp"
#include "schreier/lax_action.hpp"

namespace schreier {

using json = nlohmann::ordered_json;

/// Resolves catalog ids (file stems) for monoid references. Search order:
/// $SCHREIER_CATALOG, the directory of the referencing file, ./catalog.
class Resolver {
public:
    explicit Resolver(std::filesystem::path base_dir = {}) : base_(std::move(base_dir)) {}

    std::filesystem::path locate(const std::string& id) const;
    MonoidPtr monoid(const std::string& id) const;

private:
    std::filesystem::path base_;
};

/// Throws Error{Parse}.
json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& value);

json monoid_to_json(const FiniteMonoid& m);
json hom_to_json(const MonoidHom& h);
json action_to_json(const LaxAction& a);
json module_to_json(const NModule& m);

/// Monoid references may be inline objects or catalog id strings.
/// All throw Error{Parse} on malformed input and the constructors' errors otherwise.
MonoidPtr monoid_from_json(const json& j, const Resolver& r);
MonoidHom hom_from_json(const json& j, const Resolver& r);
LaxActionPtr action_from_json(const json& j, const Resolver& r);
NModule module_from_json(const json& j, const Resolver& r);

/// Loads a payload file, resolving references relative to it.
MonoidPtr load_monoid(const std::filesystem::path& path);
MonoidHom load_hom(const std::filesystem::path& path);
LaxActionPtr load_action(const std::filesystem::path& path);
NModule load_module(const std::filesystem::path& path);

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string digest(const json& j);

} // namespace schreier
