#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schreier/catalog.hpp"

namespace schreier {

struct LedgerEntry {
    std::string scope;
    std::string subject; // catalog id(s) the verdict was computed on
    Verdict verdict;
};

struct SuiteReport {
    std::vector<LedgerEntry> entries;

    bool ok() const;
    std::size_t failures() const;
    /// Entries plus a per-anchor summary.
    json to_json() const;
};

/// Module scopes accepted by run_suite besides "all".
const std::vector<std::string>& suite_scopes();

/// Runs every invariant of the requested scope over the catalog.
/// Throws Error{Parse} for an unknown scope.
SuiteReport run_suite(const Catalog& catalog, const std::string& scope, std::uint64_t seed = 0);

} // namespace schreier
