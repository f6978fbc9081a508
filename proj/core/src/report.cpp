#include "elring/report.hpp"

#include <algorithm>

#include "elring/rng.hpp"

namespace elring {

const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

void VerificationReport::pass(std::string name, std::optional<std::string> payload) {
    checks.push_back({std::move(name), CheckStatus::pass, std::move(payload)});
}

void VerificationReport::fail(std::string name, std::string counterexample) {
    checks.push_back({std::move(name), CheckStatus::fail, std::move(counterexample)});
}

void VerificationReport::skip(std::string name, std::string reason) {
    checks.push_back({std::move(name), CheckStatus::skipped, std::move(reason)});
}

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::fail;
    });
}

void VerificationReport::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["ring"] = ring;
    j["mode"] = mode;
    if (seed)
        j["seed"] = *seed;
    j["elapsed_ms"] = elapsed_ms;
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        if (c.counterexample)
            jc["counterexample"] = *c.counterexample;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string VerificationReport::text() const {
    std::string out = "suite=" + suite + " ring=" + ring + " mode=" + mode;
    if (seed)
        out += " seed=" + std::to_string(*seed) + " rng=" + Rng::name();
    out += " elapsed_ms=" + std::to_string(elapsed_ms) + "\n";
    for (const auto& c : checks) {
        out += "  [";
        out += to_string(c.status);
        out += "] ";
        out += c.name;
        if (c.counterexample)
            out += "  :: " + *c.counterexample;
        out += "\n";
    }
    return out;
}

nlohmann::json reports_json(const std::vector<VerificationReport>& reports) {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports)
        arr.push_back(r.to_json());
    return arr;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.passed(); });
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         return std::tie(a.suite, a.ring) < std::tie(b.suite, b.ring);
                     });
}

}  // namespace elring
