#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace elring {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    // Serialized inputs and both sides on failure; informational payload
    // (witness, order, discrepancy evidence) on pass.
    std::optional<std::string> counterexample;
};

/// Structured pass/fail result of one verification suite over one ring.
/// Failing entries always carry a counterexample; random-mode reports always
/// carry the seed. Checks are kept sorted by name so identical inputs yield
/// byte-identical serializations regardless of evaluation order.
struct VerificationReport {
    std::string suite;
    std::string ring = "-";
    std::string mode = "exhaustive";
    std::optional<std::uint64_t> seed;
    std::vector<CheckResult> checks;
    std::int64_t elapsed_ms = 0;

    void pass(std::string name, std::optional<std::string> payload = std::nullopt);
    void fail(std::string name, std::string counterexample);
    void skip(std::string name, std::string reason);

    bool passed() const;  // true when no check failed
    void sort_checks();

    nlohmann::json to_json() const;
    std::string text() const;
};

/// Runs `fill(report)` with timing, sorts the checks, stamps elapsed_ms.
template <typename Fn>
VerificationReport timed_report(VerificationReport report, Fn&& fill) {
    auto t0 = std::chrono::steady_clock::now();
    fill(report);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    report.sort_checks();
    return report;
}

nlohmann::json reports_json(const std::vector<VerificationReport>& reports);
bool all_passed(const std::vector<VerificationReport>& reports);
void sort_reports(std::vector<VerificationReport>& reports);

}  // namespace elring
