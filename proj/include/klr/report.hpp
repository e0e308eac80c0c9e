#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace klr {

struct CheckResult {
    std::string suite;
    std::string check;
    std::string alpha;
    std::string pi;                // empty when not cell-specific
    std::optional<long> degree;
    bool ok = true;
    std::string witness;           // failure detail or recorded observation
};

void sort_results(std::vector<CheckResult>& rs);
bool all_ok(const std::vector<CheckResult>& rs);
std::string render_text(const std::vector<CheckResult>& rs);
std::string render_json(const std::vector<CheckResult>& rs);

/// Runs fn(k) for k in [0, n) on up to `threads` workers; order of side
/// effects is up to the caller to make deterministic.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace klr
