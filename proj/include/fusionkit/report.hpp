#pragma once

#include <string>
#include <vector>
#include <cstddef>

#include <json.hpp>

namespace fusionkit {

/// One named check: pass flag, human-readable detail, and either a numeric
/// residual or a counterexample (indices into whatever the check ranges over).
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double residual = 0.0;
    std::vector<std::size_t> witness;
};

/// Machine-readable pass/fail record of a group of named checks.
class Report {
public:
    explicit Report(std::string name) : name_(std::move(name)) {}

    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void add(const std::string& name, bool pass, const std::string& detail,
             double residual = 0.0, std::vector<std::size_t> witness = {});

    bool pass() const;
    const std::string& name() const { return name_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    const CheckResult* find(const std::string& check_name) const;

    nlohmann::json to_json() const;

private:
    std::string name_;
    std::vector<CheckResult> checks_;
};

} // namespace fusionkit
