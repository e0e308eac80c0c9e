#include "klr/report.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace klr {

void sort_results(std::vector<CheckResult>& rs) {
    std::stable_sort(rs.begin(), rs.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.pi != b.pi) return a.pi < b.pi;
        if (a.check != b.check) return a.check < b.check;
        long da = a.degree.value_or(LONG_MIN), db = b.degree.value_or(LONG_MIN);
        return da < db;
    });
}

bool all_ok(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.ok) return false;
    return true;
}

std::string render_text(const std::vector<CheckResult>& rs) {
    std::ostringstream os;
    for (const auto& r : rs) {
        os << (r.ok ? "[ok]   " : "[FAIL] ") << r.suite << ": " << r.check;
        if (!r.pi.empty()) os << " pi=" << r.pi;
        if (r.degree) os << " n=" << *r.degree;
        if (!r.witness.empty()) os << " -- " << r.witness;
        os << "\n";
    }
    return os.str();
}

std::string render_json(const std::vector<CheckResult>& rs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rs) {
        nlohmann::json j;
        j["suite"] = r.suite;
        j["check"] = r.check;
        j["alpha"] = r.alpha;
        if (!r.pi.empty()) j["pi"] = r.pi;
        if (r.degree) j["degree"] = *r.degree;
        j["status"] = r.ok ? "pass" : "fail";
        if (!r.witness.empty()) j["witness"] = r.witness;
        out.push_back(std::move(j));
    }
    return out.dump(2);
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (int k = 0; k < n; ++k) fn(k);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    int nw = std::min(threads, n);
    std::vector<std::thread> workers;
    workers.reserve(nw);
    for (int t = 0; t < nw; ++t)
        workers.emplace_back([&] {
            try {
                for (int k = next.fetch_add(1); k < n; k = next.fetch_add(1)) fn(k);
            } catch (...) {
                std::lock_guard lk(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace klr
