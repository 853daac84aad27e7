#include "fusionkit/report.hpp"

namespace fusionkit {

void Report::add(const std::string& name, bool pass, const std::string& detail,
                 double residual, std::vector<std::size_t> witness) {
    checks_.push_back(CheckResult{name, pass, detail, residual, std::move(witness)});
}

bool Report::pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

const CheckResult* Report::find(const std::string& check_name) const {
    for (const auto& c : checks_)
        if (c.name == check_name) return &c;
    return nullptr;
}

nlohmann::json Report::to_json() const {
    nlohmann::json out;
    out["name"] = name_;
    out["pass"] = pass();
    out["checks"] = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        jc["residual"] = c.residual;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        out["checks"].push_back(jc);
    }
    return out;
}

} // namespace fusionkit
