#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/fusion_ring.hpp"

namespace fusionkit {

/// mu_n = mu_2^(n-1) (index of the n-interval inclusion from the 2-interval one).
double mu_n(double mu2, int n);

/// mu_n in the representation rho: d_rho^2 * mu_2^(n-1).
double mu_n_rho(double mu2, double d_rho, int n);

/// Multiplicity of the identity in rho_{i1} ... rho_{in}; with `alternating`
/// the labels at even positions are conjugated first (iterated-inclusion
/// convention). Evaluated by a left fold of formal fusions.
long long canonical_multiplicity(const FusionRing& ring, const std::vector<std::size_t>& word,
                                 bool alternating);

struct IdentityCheck {
    int n = 2;
    double lhs = 0.0;     // sum over words of N^0 * product of dims
    double rhs = 0.0;     // I_global^(n-1)
    double residual = 0.0;
    bool pass = false;
};

/// Checks sum_words N^0_{i1..in} d_{i1}...d_{in} = I_global^(n-1). Refuses
/// when rank^n exceeds 1e7 words. Pass bound: residual < 1e-6 * I^(n-1).
IdentityCheck dimension_identity_check(const FusionRing& ring, int n);

/// mu_A = I^2 * mu_B for a finite-index subnet of index I.
double extension_index(double subnet_index, double mu_B);

/// mu_B = mu_A^2 / I_global^2 for the net built on the ring; equals 1 when
/// mu_A is the ring's global index.
double lr_net_mu(const FusionRing& ring, double mu_A);

/// global_index / (sum of d^2 over the identity grading component).
/// A trivially graded ring gives ratio 1.
double even_part_ratio(const FusionRing& ring);

/// One evaluated identity for the ledger.
struct LedgerEntry {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool pass = false;
};

/// Every numeric identity for a ring at interval count n, as a ledger.
struct IndexLedger {
    double mu2 = 1.0;
    int n = 1;
    double mu_n_value = 1.0;
    double global_index = 1.0;
    double even_part = 1.0; // even-part index ratio, informational
    std::vector<LedgerEntry> entries;

    bool pass() const;
    nlohmann::json to_json() const;
};

IndexLedger evaluate_ledger(const FusionRing& ring, int n);

} // namespace fusionkit
