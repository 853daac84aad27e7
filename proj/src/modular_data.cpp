#include "fusionkit/modular_data.hpp"

#include <cmath>
#include <sstream>

namespace fusionkit {

namespace {

double unitarity_residual_of(const Eigen::MatrixXcd& S) {
    const auto n = S.rows();
    Eigen::MatrixXcd gram = S * S.adjoint() - Eigen::MatrixXcd::Identity(n, n);
    return gram.cwiseAbs().maxCoeff();
}

struct VerlindeScan {
    FusionRing::Tensor tensor;
    double worst = 0.0; // distance to the nearest nonnegative integer
    std::size_t wi = 0, wj = 0, wk = 0;
};

VerlindeScan verlinde_scan(const ModularData& md) {
    const std::size_t n = md.rank();
    const auto ni = static_cast<Eigen::Index>(n);
    VerlindeScan scan;
    // N^(i) = S diag(S_im / S_0m) S^*, one matrix product per i
    for (std::size_t i = 0; i < n; ++i) {
        Eigen::VectorXcd ratios(ni);
        for (Eigen::Index m = 0; m < ni; ++m)
            ratios(m) = md.S(static_cast<Eigen::Index>(i), m) / md.S(0, m);
        Eigen::MatrixXcd Ni = md.S * ratios.asDiagonal() * md.S.adjoint();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::complex<double> acc = Ni(static_cast<Eigen::Index>(j),
                                              static_cast<Eigen::Index>(k));
                double rounded = std::max(0.0, std::round(acc.real()));
                double dist = std::hypot(acc.real() - rounded, acc.imag());
                if (dist > scan.worst) { scan.worst = dist; scan.wi = i; scan.wj = j; scan.wk = k; }
                if (rounded >= 0.5) scan.tensor[{i, j, k}] = static_cast<long long>(rounded);
            }
    }
    return scan;
}

} // namespace

FusionRing::Tensor verlinde(const ModularData& md, double integrality_tol,
                            double unitarity_tol) {
    const std::size_t n = md.rank();
    if (md.T.size() != md.S.rows() || md.S.rows() != md.S.cols())
        throw input_error("modular data has mismatched shapes");
    double ur = unitarity_residual_of(md.S);
    if (ur > std::max(unitarity_tol, 1e-6))
        throw numeric_error("S is not unitary (residual " + std::to_string(ur) + ")");
    for (std::size_t m = 0; m < n; ++m)
        if (std::abs(md.S(0, m)) < 1e-12)
            throw numeric_error("S_{0," + std::to_string(m) + "} vanishes; Verlinde formula undefined");

    VerlindeScan scan = verlinde_scan(md);
    if (scan.worst > integrality_tol) {
        std::ostringstream os;
        os << "Verlinde entry at (" << scan.wi << "," << scan.wj << "," << scan.wk
           << ") is off a nonnegative integer by " << scan.worst;
        throw numeric_error(os.str());
    }
    return scan.tensor;
}

ModularityReport check_modularity(const FusionRing& ring, const ModularData& md,
                                  double tolerance) {
    const std::size_t n = ring.rank();
    if (md.rank() != n || md.T.size() != static_cast<Eigen::Index>(n))
        throw input_error("modular data shape does not match the ring");

    ModularityReport rep;
    rep.tolerance = tolerance;

    // type invariants: S symmetric with real positive first row, |T_i| = 1
    rep.shape_residual = (md.S - md.S.transpose()).cwiseAbs().maxCoeff();
    for (std::size_t i = 0; i < n; ++i) {
        const auto s0i = md.S(0, static_cast<Eigen::Index>(i));
        double defect = std::abs(s0i.imag()) + std::max(0.0, -s0i.real());
        if (std::abs(s0i) < 1e-12) defect = std::max(defect, 1.0); // must be strictly positive
        rep.shape_residual = std::max(rep.shape_residual, defect);
        rep.shape_residual = std::max(
            rep.shape_residual, std::abs(std::abs(md.T(static_cast<Eigen::Index>(i))) - 1.0));
    }

    rep.unitarity_residual = unitarity_residual_of(md.S);

    // Verlinde integrality and agreement with the ring tensor. Skip the scan
    // when a first-row entry vanishes (degenerate S); that already fails.
    bool first_row_ok = true;
    for (std::size_t m = 0; m < n; ++m)
        if (std::abs(md.S(0, m)) < 1e-12) first_row_ok = false;
    if (first_row_ok) {
        VerlindeScan scan = verlinde_scan(md);
        rep.verlinde_residual = scan.worst;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    auto it = scan.tensor.find({i, j, k});
                    long long got = it == scan.tensor.end() ? 0 : it->second;
                    if (got != ring.N(i, j, k)) ++rep.verlinde_mismatches;
                }
    } else {
        rep.verlinde_residual = 1.0;
        rep.verlinde_mismatches = -1;
    }

    // S^2 must be the permutation matrix of the dual involution.
    Eigen::MatrixXcd S2 = md.S * md.S;
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) P(i, ring.dual(i)) = 1.0;
    rep.charge_conjugation_residual = (S2 - P).cwiseAbs().maxCoeff();

    // (ST)^3 = lambda S^2, lambda a unit scalar extracted by projection.
    Eigen::MatrixXcd ST = md.S * md.T.asDiagonal();
    Eigen::MatrixXcd ST3 = ST * ST * ST;
    std::complex<double> num = (S2.adjoint() * ST3).trace();
    std::complex<double> den = (S2.adjoint() * S2).trace();
    rep.lambda = num / den;
    rep.st_cubed_residual = (ST3 - rep.lambda * S2).cwiseAbs().maxCoeff();

    rep.pass = rep.shape_residual < std::max(tolerance, 1e-9) &&
               rep.unitarity_residual < std::max(tolerance, 1e-9) &&
               rep.verlinde_residual < 1e-6 && rep.verlinde_mismatches == 0 &&
               rep.charge_conjugation_residual < std::max(tolerance, 1e-8) &&
               rep.st_cubed_residual < std::max(tolerance, 1e-8) &&
               std::abs(std::abs(rep.lambda) - 1.0) < std::max(tolerance, 1e-8);
    return rep;
}

Report ModularityReport::to_report() const {
    Report rep("modular_data.check_modularity");
    rep.add("shape", shape_residual < std::max(tolerance, 1e-9),
            "S symmetric, first row real positive, T unimodular; residual " +
                std::to_string(shape_residual),
            shape_residual);
    rep.add("s_unitary", unitarity_residual < std::max(tolerance, 1e-9),
            "||S S* - 1|| = " + std::to_string(unitarity_residual), unitarity_residual);
    rep.add("verlinde_integrality", verlinde_residual < 1e-6 && verlinde_mismatches >= 0,
            "worst off-integer distance " + std::to_string(verlinde_residual), verlinde_residual);
    rep.add("verlinde_matches_tensor", verlinde_mismatches == 0,
            std::to_string(verlinde_mismatches < 0 ? 0 : verlinde_mismatches) +
                " rounded entries differ from the ring tensor",
            static_cast<double>(verlinde_mismatches < 0 ? 1 : verlinde_mismatches));
    rep.add("s_squared_charge_conjugation", charge_conjugation_residual < std::max(tolerance, 1e-8),
            "||S^2 - C|| = " + std::to_string(charge_conjugation_residual),
            charge_conjugation_residual);
    std::ostringstream os;
    os << "||(ST)^3 - lambda S^2|| = " << st_cubed_residual << " with lambda = ("
       << lambda.real() << ", " << lambda.imag() << ")";
    rep.add("st_cubed_projective", st_cubed_residual < std::max(tolerance, 1e-8) &&
                                       std::abs(std::abs(lambda) - 1.0) < std::max(tolerance, 1e-8),
            os.str(), st_cubed_residual);
    return rep;
}

DimensionVector dims_from_S(const ModularData& md, const FusionRing* ring,
                            double consistency_tol) {
    if (std::abs(md.S(0, 0)) < 1e-12) throw input_error("S_{00} vanishes");
    DimensionVector dv;
    dv.tolerance = consistency_tol;
    const std::size_t n = md.rank();
    dv.d.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        dv.d.push_back((md.S(0, i) / md.S(0, 0)).real());
    if (ring) {
        DimensionVector pf = ring->dims();
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(pf.d[i] - dv.d[i]) > consistency_tol) {
                std::ostringstream os;
                os << "dimension mismatch at label " << i << ": Perron-Frobenius gives "
                   << pf.d[i] << ", S-matrix ratio gives " << dv.d[i];
                throw numeric_error(os.str());
            }
    }
    return dv;
}

} // namespace fusionkit
