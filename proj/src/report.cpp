#include "corings/report.hpp"

namespace corings {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.status, c.witness});
}

bool ValidationReport::ok() const noexcept {
    for (const auto& c : checks_)
        if (c.status != CheckStatus::pass) return false;
    return true;
}

bool ValidationReport::passed(const std::string& name) const {
    const CheckResult* c = find(name);
    return c && c->status == CheckStatus::pass;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
        if (c.status != CheckStatus::pass) out.push_back(c.name);
    return out;
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& c : checks_) {
        out += c.status == CheckStatus::pass ? "  pass  " : c.status == CheckStatus::fail ? "  FAIL  " : "  skip  ";
        out += c.name;
        if (!c.witness.empty()) out += ": " + c.witness;
        out += '\n';
    }
    return out;
}

}  // namespace corings
