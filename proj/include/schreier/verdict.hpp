#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace schreier {

// One checked property: a stable anchor key, the outcome, and a witness
// describing the first counterexample when it fails.
struct Verdict {
    std::string anchor;
    bool pass = true;
    std::string witness;
};

inline bool all_pass(const std::vector<Verdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

inline void append(std::vector<Verdict>& into, const std::vector<Verdict>& more) {
    into.insert(into.end(), more.begin(), more.end());
}

} // namespace schreier
