#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "fusionkit/group_table.hpp"
#include "fusionkit/report.hpp"

namespace fusionkit {

/// Finite-dimensional realization of the crossed-product relations for a
/// pointed system: the base factor is M_m, the action is Ad(u_g) with u
/// faithful modulo scalars, and the working algebra is spanned by x R_g
/// acting on C^m (x) C^m (x) C^|G| via the left-regular picture. All
/// dimensions are 1 and the intertwiner basis is the single unit isometry,
/// so the generator relations collapse to a unitary representation of G
/// twisting the base.
///
/// Factoriality of the big algebra and triviality of the relative commutant
/// are properties of the infinite-dimensional construction and are neither
/// expected nor asserted here.
class CrossedProductAlgebra {
public:
    /// Builds the realization. u_g is the left-regular permutation when
    /// m == |G|, or diag of the first m characters for cyclic G with m >= 2.
    /// Throws input_error when no faithful-mod-scalars family exists for
    /// (G, m).
    static CrossedProductAlgebra build(const GroupTable& G, int m, std::uint64_t seed = 1);

    const GroupTable& group() const { return G_; }
    int base_dim() const { return m_; }
    std::uint64_t seed() const { return seed_; }
    Eigen::Index ambient_dim() const { return static_cast<Eigen::Index>(m_) * m_ *
                                              static_cast<Eigen::Index>(G_.order()); }

    /// pi(x): the base x (an m^2 x m^2 matrix on C^m (x) C^m) embedded
    /// block-diagonally with the g-twist.
    Eigen::MatrixXcd embed(const Eigen::MatrixXcd& x) const;

    /// The realized generator R_g (a block shift; R_e is the identity).
    const Eigen::MatrixXcd& R(std::size_t g) const { return R_.at(g); }

    /// The twisted base action beta_g(x) = (u_g (x) conj(u_g)) x (...)^*.
    Eigen::MatrixXcd twist(std::size_t g, const Eigen::MatrixXcd& x) const;

    /// Operator-norm residuals of the four generator relations, one report
    /// entry per relation, sampled over seeded random base elements.
    Report relation_report(double tolerance = 1e-10) const;
    double worst_relation_residual() const;

    /// Coefficients x_g of X = sum_g pi(x_g) R_g. Throws numeric_error with
    /// the distance when X is not in the algebra (reconstruction residual
    /// above `tolerance`).
    std::map<std::size_t, Eigen::MatrixXcd> expand(const Eigen::MatrixXcd& X,
                                                   double tolerance = 1e-10) const;

    /// Conditional expectation onto the base: the identity coefficient x_e.
    Eigen::MatrixXcd expectation(const Eigen::MatrixXcd& X, double tolerance = 1e-10) const;

    /// Reassembles sum_g pi(x_g) R_g.
    Eigen::MatrixXcd assemble(const std::map<std::size_t, Eigen::MatrixXcd>& coeffs) const;

    /// Random element of the algebra with seeded standard-normal coefficients.
    Eigen::MatrixXcd random_element(std::uint64_t seed) const;

    /// Worst (most negative) minimum eigenvalue of E(x) - lambda x over
    /// `samples` random positive elements x = Y*Y.
    double pimsner_popa_margin(double lambda, int samples, std::uint64_t seed) const;

    /// Margin at the sharp bound lambda = 1/|G|.
    double pimsner_popa_check(int samples, std::uint64_t seed) const;

    nlohmann::json report_json(int samples, std::uint64_t seed) const;

private:
    CrossedProductAlgebra(GroupTable G, int m, std::uint64_t seed);

    GroupTable G_;
    int m_;
    std::uint64_t seed_;
    std::vector<Eigen::MatrixXcd> u_;  // m x m unitaries
    std::vector<Eigen::MatrixXcd> W_;  // u_g (x) conj(u_g)
    std::vector<Eigen::MatrixXcd> R_;  // ambient generators
};

} // namespace fusionkit
