#include "fusionkit/multi_interval.hpp"

#include <cmath>

namespace fusionkit {

double mu_n(double mu2, int n) {
    if (mu2 < 1.0) throw input_error("mu_2 must be >= 1");
    if (n < 1) throw input_error("interval count must be >= 1");
    double out = 1.0;
    for (int t = 1; t < n; ++t) out *= mu2;
    return out;
}

double mu_n_rho(double mu2, double d_rho, int n) {
    if (d_rho < 1.0) throw input_error("d(rho) must be >= 1");
    return d_rho * d_rho * mu_n(mu2, n);
}

long long canonical_multiplicity(const FusionRing& ring, const std::vector<std::size_t>& word,
                                 bool alternating) {
    if (word.empty()) return 1; // empty product is the identity
    auto pick = [&](std::size_t pos) {
        std::size_t label = word[pos];
        if (label >= ring.rank()) throw input_error("label index out of range");
        // positions are 1-based in the alternating convention
        return (alternating && pos % 2 == 1) ? ring.dual(label) : label;
    };
    FormalSum acc{{pick(0), 1}};
    for (std::size_t pos = 1; pos < word.size(); ++pos)
        acc = ring.fuse(acc, FormalSum{{pick(pos), 1}});
    auto it = acc.find(0);
    return it == acc.end() ? 0 : it->second;
}

IdentityCheck dimension_identity_check(const FusionRing& ring, int n) {
    if (n < 1) throw input_error("interval count must be >= 1");
    double words = std::pow(static_cast<double>(ring.rank()), n);
    if (words > 1e7)
        throw input_error("identity check refused: rank^n = " + std::to_string(words) +
                          " exceeds the 1e7 word bound");

    DimensionVector dv = ring.dims();
    // Left fold of T = sum_i d_i rho_i with itself; the coefficient of the
    // identity in T^n is exactly sum_words N^0 * prod d.
    WeightedSum acc;
    for (std::size_t i = 0; i < ring.rank(); ++i) acc[i] = dv.d[i];
    WeightedSum base = acc;
    for (int t = 1; t < n; ++t) acc = ring.fuse(acc, base);

    IdentityCheck check;
    check.n = n;
    check.lhs = acc.count(0) ? acc.at(0) : 0.0;
    double I = 0.0;
    for (double d : dv.d) I += d * d;
    check.rhs = mu_n(std::max(I, 1.0), n);
    check.residual = std::abs(check.lhs - check.rhs);
    check.pass = check.residual < 1e-6 * check.rhs;
    return check;
}

double extension_index(double subnet_index, double mu_B) {
    if (subnet_index < 1.0) throw input_error("subnet index must be >= 1");
    if (mu_B < 1.0) throw input_error("mu_B must be >= 1");
    return subnet_index * subnet_index * mu_B;
}

double lr_net_mu(const FusionRing& ring, double mu_A) {
    if (mu_A < 1.0) throw input_error("mu_A must be >= 1");
    double I = ring.global_index();
    double ratio = mu_A / I;
    return ratio * ratio;
}

double even_part_ratio(const FusionRing& ring) {
    Grading g = ring.grading();
    DimensionVector dv = ring.dims();
    double even = 0.0;
    for (std::size_t i : g.components[0]) even += dv.d[i] * dv.d[i];
    double I = 0.0;
    for (double d : dv.d) I += d * d;
    return I / even;
}

bool IndexLedger::pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

nlohmann::json IndexLedger::to_json() const {
    nlohmann::json j;
    j["mu2"] = mu2;
    j["n"] = n;
    j["mu_n"] = mu_n_value;
    j["global_index"] = global_index;
    j["even_part_ratio"] = even_part;
    j["pass"] = pass();
    j["identities"] = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json je;
        je["name"] = e.name;
        je["lhs"] = e.lhs;
        je["rhs"] = e.rhs;
        je["residual"] = e.residual;
        je["pass"] = e.pass;
        j["identities"].push_back(je);
    }
    return j;
}

IndexLedger evaluate_ledger(const FusionRing& ring, int n) {
    if (n < 1) throw input_error("interval count must be >= 1");
    IndexLedger ledger;
    ledger.n = n;
    ledger.global_index = ring.global_index();
    ledger.mu2 = ledger.global_index;
    ledger.mu_n_value = mu_n(ledger.mu2, n);

    {
        LedgerEntry e;
        e.name = "mu_n = mu_2^(n-1)";
        e.lhs = ledger.mu_n_value;
        e.rhs = std::pow(ledger.mu2, n - 1);
        e.residual = std::abs(e.lhs - e.rhs);
        e.pass = e.residual <= 1e-9 * std::max(1.0, e.rhs);
        ledger.entries.push_back(e);
    }
    for (int t = 2; t <= n; ++t) {
        IdentityCheck c = dimension_identity_check(ring, t);
        LedgerEntry e;
        e.name = "sum N^0 prod d = I^" + std::to_string(t - 1);
        e.lhs = c.lhs;
        e.rhs = c.rhs;
        e.residual = c.residual;
        e.pass = c.pass;
        ledger.entries.push_back(e);
    }
    {
        LedgerEntry e;
        e.name = "mu_B = mu_A^2 / I^2 = 1";
        e.lhs = lr_net_mu(ring, ledger.mu2);
        e.rhs = 1.0;
        e.residual = std::abs(e.lhs - 1.0);
        e.pass = e.residual <= 1e-9;
        ledger.entries.push_back(e);
    }
    ledger.even_part = even_part_ratio(ring);
    return ledger;
}

} // namespace fusionkit
