#pragma once

#include <string>
#include <vector>

namespace corings {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    /// Human-readable witness of the first violation (empty on pass).
    std::string witness;
};

/// Per-axiom outcome of a validator. `skipped` checks could not be evaluated
/// because a check they depend on failed; they count as failures.
class ValidationReport {
public:
    void pass(std::string name) { checks_.push_back({std::move(name), CheckStatus::pass, {}}); }
    void fail(std::string name, std::string witness) {
        checks_.push_back({std::move(name), CheckStatus::fail, std::move(witness)});
    }
    void skip(std::string name, std::string reason) {
        checks_.push_back({std::move(name), CheckStatus::skipped, std::move(reason)});
    }
    void record(std::string name, bool ok, std::string witness) {
        if (ok) pass(std::move(name));
        else fail(std::move(name), std::move(witness));
    }
    void merge(const ValidationReport& other, const std::string& prefix = {});

    bool ok() const noexcept;
    bool passed(const std::string& name) const;
    const CheckResult* find(const std::string& name) const;
    std::vector<std::string> failures() const;
    const std::vector<CheckResult>& checks() const noexcept { return checks_; }
    std::string summary() const;

private:
    std::vector<CheckResult> checks_;
};

}  // namespace corings
