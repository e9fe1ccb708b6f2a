#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srolle {

enum class CheckStatus { pass, fail, skipped };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "fail";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Outcome of a certificate verifier: one entry per named check. A report is
/// valid when nothing failed; skipped checks do not count against it.
struct VerificationReport {
    std::vector<CheckResult> checks;

    bool valid() const {
        return !checks.empty() && std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
            return c.status == CheckStatus::fail;
        });
    }

    const CheckResult* find(std::string_view name) const {
        auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const CheckResult& c) { return c.name == name; });
        return it == checks.end() ? nullptr : &*it;
    }

    bool passed(std::string_view name) const {
        const auto* c = find(name);
        return c != nullptr && c->status == CheckStatus::pass;
    }

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
    }

    void skip(std::string name, std::string detail = {}) {
        checks.push_back({std::move(name), CheckStatus::skipped, std::move(detail)});
    }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

} // namespace srolle
