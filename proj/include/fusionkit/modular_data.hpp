#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/report.hpp"

namespace fusionkit {

/// Verlinde matrices over a ring's labels: S square, T diagonal (stored as the
/// diagonal vector). The label order is the ring's.
struct ModularData {
    Eigen::MatrixXcd S;
    Eigen::VectorXcd T;

    std::size_t rank() const { return static_cast<std::size_t>(S.rows()); }

    /// Opposite-chirality data: entrywise complex conjugate of S and T.
    ModularData conjugated() const { return ModularData{S.conjugate(), T.conjugate()}; }
};

struct ModularityReport {
    double shape_residual = 0.0;              // max of ||S - S^T||, first-row defect, ||T|-1|
    double unitarity_residual = 0.0;
    double verlinde_residual = 0.0;          // worst distance to an integer
    long long verlinde_mismatches = 0;       // rounded entries differing from the ring tensor
    double charge_conjugation_residual = 0.0; // ||S^2 - P_dual||
    double st_cubed_residual = 0.0;           // ||(ST)^3 - lambda S^2||
    std::complex<double> lambda{1.0, 0.0};
    double tolerance = 1e-9;
    bool pass = false;

    Report to_report() const;
};

/// Recovers the fusion tensor from S via N_{ij}^k = sum_m S_im S_jm conj(S_km) / S_0m.
/// Requires S unitary within tolerance and S_{0m} != 0; each entry must land
/// within `integrality_tol` of a nonnegative integer, else numeric_error
/// carrying the worst (i,j,k).
FusionRing::Tensor verlinde(const ModularData& md, double integrality_tol = 1e-6,
                            double unitarity_tol = 1e-9);

/// Runs the modularity suite against a ring: unitarity of S, Verlinde
/// integrality and agreement with the ring tensor, S^2 = charge conjugation
/// matching the ring's dual involution, and (ST)^3 = lambda S^2 projectively
/// (lambda returned).
ModularityReport check_modularity(const FusionRing& ring, const ModularData& md,
                                  double tolerance = 1e-9);

/// d_i = S_{0i}/S_{00}; throws input_error when S_{00} vanishes. When `ring`
/// is given, cross-checks against the Perron-Frobenius dimensions within
/// `consistency_tol` and throws numeric_error naming both values on mismatch.
DimensionVector dims_from_S(const ModularData& md, const FusionRing* ring = nullptr,
                            double consistency_tol = 1e-8);

} // namespace fusionkit
