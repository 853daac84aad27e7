#include "fusionkit/lr_oracle.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

namespace fusionkit {

namespace {

using cplx = std::complex<double>;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

double op_norm(const Eigen::MatrixXcd& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues()(0);
}

Eigen::MatrixXcd random_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd out(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) out(r, c) = cplx(normal(rng), normal(rng));
    return out;
}

} // namespace

CrossedProductAlgebra::CrossedProductAlgebra(GroupTable G, int m, std::uint64_t seed)
    : G_(std::move(G)), m_(m), seed_(seed) {}

CrossedProductAlgebra CrossedProductAlgebra::build(const GroupTable& G, int m,
                                                   std::uint64_t seed) {
    if (m < 1) throw input_error("base dimension must be positive");
    const std::size_t n = G.order();
    CrossedProductAlgebra A(G, m, seed);
    A.u_.assign(n, Eigen::MatrixXcd::Zero(m, m));

    // diagonal character matrices exist for cyclic G
    bool cyclic = n == 1;
    std::size_t gen = 0;
    for (std::size_t g = 1; g < n && !cyclic; ++g) {
        std::size_t x = g, count = 1;
        while (x != 0) { x = G.mul(x, g); ++count; }
        if (count == n) { cyclic = true; gen = g; }
    }
    if (cyclic && m >= 2) {
        // u_g = diag of the first m characters evaluated at g
        std::vector<std::size_t> log(n, 0);
        std::size_t x = 0;
        for (std::size_t p = 0; p < n; ++p) { log[x] = p; x = G.mul(x, gen); }
        for (std::size_t g = 0; g < n; ++g)
            for (int j = 0; j < m; ++j) {
                double turns = static_cast<double>((log[g] * static_cast<std::size_t>(j)) % n) /
                               static_cast<double>(n);
                A.u_[g](j, j) = cplx(std::cos(2.0 * std::numbers::pi * turns),
                                     std::sin(2.0 * std::numbers::pi * turns));
            }
    } else if (static_cast<std::size_t>(m) == n) {
        // left-regular permutation unitaries
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h)
                A.u_[g](static_cast<Eigen::Index>(G.mul(g, h)), static_cast<Eigen::Index>(h)) = 1.0;
    } else {
        throw input_error("no faithful-mod-scalars unitary family for this (G, m): "
                          "need m = |G| (regular) or a cyclic group with m >= 2");
    }

    // faithful modulo scalars: u_g is scalar only at the identity
    for (std::size_t g = 1; g < n; ++g) {
        cplx mean = A.u_[g].trace() / static_cast<double>(m);
        if ((A.u_[g] - mean * Eigen::MatrixXcd::Identity(m, m)).norm() < 1e-9)
            throw input_error("unitary family is not faithful modulo scalars at element " +
                              G.name(g));
    }

    A.W_.clear();
    for (std::size_t g = 0; g < n; ++g) A.W_.push_back(kron(A.u_[g], A.u_[g].conjugate()));

    const Eigen::Index d = A.ambient_dim();
    const Eigen::Index blk = static_cast<Eigen::Index>(m) * m;
    A.R_.assign(n, Eigen::MatrixXcd::Zero(d, d));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            std::size_t src = G.mul(G.inv(h), g);
            A.R_[h].block(static_cast<Eigen::Index>(g) * blk,
                          static_cast<Eigen::Index>(src) * blk, blk, blk) =
                Eigen::MatrixXcd::Identity(blk, blk);
        }
    return A;
}

Eigen::MatrixXcd CrossedProductAlgebra::twist(std::size_t g, const Eigen::MatrixXcd& x) const {
    return W_.at(g) * x * W_.at(g).adjoint();
}

Eigen::MatrixXcd CrossedProductAlgebra::embed(const Eigen::MatrixXcd& x) const {
    const Eigen::Index blk = static_cast<Eigen::Index>(m_) * m_;
    if (x.rows() != blk || x.cols() != blk)
        throw input_error("base element must be m^2 x m^2");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ambient_dim(), ambient_dim());
    for (std::size_t g = 0; g < G_.order(); ++g)
        out.block(static_cast<Eigen::Index>(g) * blk, static_cast<Eigen::Index>(g) * blk, blk,
                  blk) = twist(G_.inv(g), x);
    return out;
}

Report CrossedProductAlgebra::relation_report(double tolerance) const {
    Report rep("lr_oracle.relations");
    const std::size_t n = G_.order();
    const Eigen::Index blk = static_cast<Eigen::Index>(m_) * m_;
    std::mt19937_64 rng(seed_);

    double covariance = 0.0;
    for (int t = 0; t < 4; ++t) {
        Eigen::MatrixXcd x = random_gaussian(blk, blk, rng);
        for (std::size_t g = 0; g < n; ++g)
            covariance = std::max(covariance,
                                  op_norm(R_[g] * embed(x) - embed(twist(g, x)) * R_[g]) /
                                      std::max(1.0, op_norm(x)));
    }
    rep.add("R_g x = beta_g(x) R_g", covariance <= tolerance,
            "worst relative residual over seeded samples", covariance);

    double isometry = 0.0;
    for (std::size_t g = 0; g < n; ++g)
        isometry = std::max(isometry, op_norm(R_[g].adjoint() * R_[g] -
                                              Eigen::MatrixXcd::Identity(ambient_dim(),
                                                                         ambient_dim())));
    rep.add("R_g* R_g = d", isometry <= tolerance, "d = 1 for a pointed system", isometry);

    double product = 0.0;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            product = std::max(product, op_norm(R_[g] * R_[h] - R_[G_.mul(g, h)]));
    rep.add("R_g R_h = C R_{gh}", product <= tolerance,
            "single unit intertwiner: C^k_{gh} = [k = gh]", product);

    double adjoint_residual = 0.0;
    for (std::size_t g = 0; g < n; ++g)
        adjoint_residual = std::max(adjoint_residual, op_norm(R_[g].adjoint() - R_[G_.inv(g)]));
    rep.add("R_g* = d C0* R_{g^-1}", adjoint_residual <= tolerance,
            "adjoint matches the inverse generator", adjoint_residual);
    return rep;
}

double CrossedProductAlgebra::worst_relation_residual() const {
    double worst = 0.0;
    for (const auto& check : relation_report().checks()) worst = std::max(worst, check.residual);
    return worst;
}

std::map<std::size_t, Eigen::MatrixXcd> CrossedProductAlgebra::expand(
    const Eigen::MatrixXcd& X, double tolerance) const {
    if (X.rows() != ambient_dim() || X.cols() != ambient_dim())
        throw input_error("element has wrong ambient dimension");
    const Eigen::Index blk = static_cast<Eigen::Index>(m_) * m_;
    std::map<std::size_t, Eigen::MatrixXcd> coeffs;
    // row block at the identity of pi(x_h) R_h sits at column block h^{-1}
    for (std::size_t h = 0; h < G_.order(); ++h)
        coeffs[h] = X.block(0, static_cast<Eigen::Index>(G_.inv(h)) * blk, blk, blk);
    double distance = op_norm(X - assemble(coeffs));
    if (distance > tolerance)
        throw numeric_error("element lies outside the crossed-product algebra (distance " +
                            std::to_string(distance) + ")");
    return coeffs;
}

Eigen::MatrixXcd CrossedProductAlgebra::expectation(const Eigen::MatrixXcd& X,
                                                    double tolerance) const {
    return expand(X, tolerance).at(0);
}

Eigen::MatrixXcd CrossedProductAlgebra::assemble(
    const std::map<std::size_t, Eigen::MatrixXcd>& coeffs) const {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ambient_dim(), ambient_dim());
    for (const auto& [g, x] : coeffs) out += embed(x) * R_.at(g);
    return out;
}

Eigen::MatrixXcd CrossedProductAlgebra::random_element(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    const Eigen::Index blk = static_cast<Eigen::Index>(m_) * m_;
    std::map<std::size_t, Eigen::MatrixXcd> coeffs;
    for (std::size_t g = 0; g < G_.order(); ++g) coeffs[g] = random_gaussian(blk, blk, rng);
    return assemble(coeffs);
}

double CrossedProductAlgebra::pimsner_popa_margin(double lambda, int samples,
                                                  std::uint64_t seed) const {
    if (samples < 1) throw input_error("need at least one sample");
    double worst = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        Eigen::MatrixXcd Y = random_element(seed + static_cast<std::uint64_t>(s));
        Eigen::MatrixXcd x = Y.adjoint() * Y;
        Eigen::MatrixXcd gap = embed(expectation(x)) - lambda * x;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig((gap + gap.adjoint()) / 2.0);
        worst = std::min(worst, eig.eigenvalues().minCoeff());
    }
    return worst;
}

double CrossedProductAlgebra::pimsner_popa_check(int samples, std::uint64_t seed) const {
    return pimsner_popa_margin(1.0 / static_cast<double>(G_.order()), samples, seed);
}

nlohmann::json CrossedProductAlgebra::report_json(int samples, std::uint64_t seed) const {
    nlohmann::json j;
    j["group_order"] = G_.order();
    j["base_dim"] = m_;
    j["seed"] = seed;
    j["samples"] = samples;

    Report relations = relation_report();
    j["relations"] = relations.to_json();

    double roundtrip = 0.0;
    for (int s = 0; s < samples; ++s) {
        Eigen::MatrixXcd X = random_element(seed + static_cast<std::uint64_t>(s));
        roundtrip = std::max(roundtrip, op_norm(X - assemble(expand(X, 1e-6))) /
                                            std::max(1.0, op_norm(X)));
    }
    j["expand_roundtrip_residual"] = roundtrip;

    double lambda = 1.0 / static_cast<double>(G_.order());
    j["pimsner_popa"] = {{"lambda", lambda},
                         {"worst_margin", pimsner_popa_margin(lambda, samples, seed)}};
    j["pass"] = relations.pass() && roundtrip < 1e-12 &&
                j["pimsner_popa"]["worst_margin"].get<double>() >= -1e-9;
    return j;
}

} // namespace fusionkit
