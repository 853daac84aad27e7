#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fusionkit/catalog.hpp"
#include "fusionkit/lr_oracle.hpp"
#include "fusionkit/multi_interval.hpp"

using namespace fusionkit;

namespace {

Eigen::MatrixXcd basis_unit(Eigen::Index dim, Eigen::Index r, Eigen::Index c) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m(r, c) = 1.0;
    return m;
}

} // namespace

TEST_CASE("build: diagonal character family for cyclic groups") {
    CrossedProductAlgebra A = CrossedProductAlgebra::build(GroupTable::cyclic(2), 2);
    CHECK(A.ambient_dim() == 8);
    Report rep = A.relation_report(1e-12);
    INFO(rep.to_json().dump(2));
    CHECK(rep.pass());

    CrossedProductAlgebra B = CrossedProductAlgebra::build(GroupTable::cyclic(3), 3);
    CHECK(B.ambient_dim() == 27);
    CHECK(B.relation_report(1e-12).pass());
}

TEST_CASE("build: regular representation for any built-in group") {
    for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3"}) {
        GroupTable G = GroupTable::by_name(name);
        CrossedProductAlgebra A = CrossedProductAlgebra::build(G, static_cast<int>(G.order()));
        INFO(name);
        CHECK(A.relation_report(1e-10).pass());
        CHECK(A.worst_relation_residual() < 1e-10);
    }
}

TEST_CASE("build: trivial group gives the bare base") {
    CrossedProductAlgebra A = CrossedProductAlgebra::build(GroupTable::trivial(), 3);
    CHECK(A.ambient_dim() == 9);
    CHECK((A.R(0) - Eigen::MatrixXcd::Identity(9, 9)).norm() < 1e-15);
}

TEST_CASE("build rejects families that are not faithful modulo scalars") {
    CHECK_THROWS_AS(CrossedProductAlgebra::build(GroupTable::klein_four(), 2), input_error);
    CHECK_THROWS_AS(CrossedProductAlgebra::build(GroupTable::symmetric3(), 3), input_error);
    CHECK_THROWS_AS(CrossedProductAlgebra::build(GroupTable::cyclic(2), 0), input_error);
}

TEST_CASE("generator expansion: X = R_g has coefficients delta_gh") {
    CrossedProductAlgebra A = CrossedProductAlgebra::build(GroupTable::cyclic(3), 3);
    const Eigen::Index blk = 9;
    for (std::size_t g = 0; g < 3; ++g) {
        auto coeffs = A.expand(A.R(g));
        for (std::size_t h = 0; h < 3; ++h) {
            Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(blk, blk);
            if (g == h) want = Eigen::MatrixXcd::Identity(blk, blk);
            CHECK((coeffs.at(h) - want).norm() < 1e-14);
        }
    }
}

TEST_CASE("construct-then-expand roundtrip over 100 seeded samples") {
    for (const char* name : {"Z2", "Z3"}) {
        GroupTable G = GroupTable::by_name(name);
        CrossedProductAlgebra A = CrossedProductAlgebra::build(G, static_cast<int>(G.order()));
        double worst = 0.0;
        for (int s = 0; s < 100; ++s) {
            Eigen::MatrixXcd X = A.random_element(1000 + static_cast<std::uint64_t>(s));
            Eigen::MatrixXcd back = A.assemble(A.expand(X));
            worst = std::max(worst, (X - back).cwiseAbs().maxCoeff());
        }
        INFO(name);
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("elements outside the algebra are rejected with a distance") {
    CrossedProductAlgebra A = CrossedProductAlgebra::build(GroupTable::cyclic(2), 2);
    // rank-one projection onto the first ambient basis vector
    Eigen::MatrixXcd p = basis_unit(A.ambient_dim(), 0, 0);
    CHECK_THROWS_AS(A.expand(p), numeric_error);
    CHECK_THROWS_AS(A.expectation(p), numeric_error);
}

TEST_CASE("conditional expectation properties") {
    CrossedProductAlgebra A = CrossedProductAlgebra::build(GroupTable::cyclic(2), 2);
    const Eigen::Index blk = 4;

    // E(R_g) = 0 for g != e, E(R_e) = 1
    CHECK(A.expectation(A.R(1)).norm() < 1e-14);
    CHECK((A.expectation(A.R(0)) - Eigen::MatrixXcd::Identity(blk, blk)).norm() < 1e-14);

    // E restricted to the base is the identity
    Eigen::MatrixXcd x = basis_unit(blk, 1, 2);
    CHECK((A.expectation(A.embed(x)) - x).norm() < 1e-14);

    // E(R x R*) for x = e11 (x) 1: the twist fixes diagonal base elements
    Eigen::MatrixXcd e11 = Eigen::MatrixXcd::Zero(2, 2);
    e11(0, 0) = 1.0;
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(blk, blk);
    for (Eigen::Index r = 0; r < 2; ++r)
        for (Eigen::Index c = 0; c < 2; ++c)
            for (Eigen::Index t = 0; t < 2; ++t)
                big(r * 2 + t, c * 2 + t) = e11(r, c);
    Eigen::MatrixXcd conj = A.R(1) * A.embed(big) * A.R(1).adjoint();
    CHECK((A.expectation(conj) - big).norm() < 1e-12);

    // bimodule property over seeded random triples
    for (int s = 0; s < 10; ++s) {
        Eigen::MatrixXcd X = A.random_element(55 + static_cast<std::uint64_t>(s));
        auto coeffs = A.expand(X);
        Eigen::MatrixXcd a = coeffs.at(0);
        Eigen::MatrixXcd b = coeffs.at(1);
        Eigen::MatrixXcd lhs = A.expectation(A.embed(a) * X * A.embed(b));
        Eigen::MatrixXcd rhs = a * A.expectation(X) * b;
        CHECK((lhs - rhs).norm() < 1e-10);
    }

    // E(X*X) stays positive semidefinite
    for (int s = 0; s < 10; ++s) {
        Eigen::MatrixXcd X = A.random_element(99 + static_cast<std::uint64_t>(s));
        Eigen::MatrixXcd e = A.expectation(X.adjoint() * X);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig((e + e.adjoint()) / 2.0);
        CHECK(eig.eigenvalues().minCoeff() > -1e-10);
    }

    // E(R_g R_g*) = 1 (pointed case: 1/d with d = 1)
    CHECK((A.expectation(A.R(1) * A.R(1).adjoint()) - Eigen::MatrixXcd::Identity(blk, blk)).norm() <
          1e-14);
}

TEST_CASE("Pimsner-Popa bound holds at 1/|G| and fails at 2/|G|") {
    CrossedProductAlgebra z2 = CrossedProductAlgebra::build(GroupTable::cyclic(2), 2);
    CHECK(z2.pimsner_popa_check(100, 7) >= -1e-9);

    CrossedProductAlgebra z3 = CrossedProductAlgebra::build(GroupTable::cyclic(3), 3);
    CHECK(z3.pimsner_popa_check(100, 7) >= -1e-9);

    // trivial group: E is the identity, margin exactly 0
    CrossedProductAlgebra t = CrossedProductAlgebra::build(GroupTable::trivial(), 2);
    CHECK(t.pimsner_popa_margin(1.0, 10, 3) == doctest::Approx(0.0).epsilon(1e-12));

    // sharpness witness, seed found by search and frozen here
    double violation = z2.pimsner_popa_margin(2.0 / 2.0, 1, 1);
    CHECK(violation < -1e-6);
    double violation3 = z3.pimsner_popa_margin(2.0 / 3.0, 1, 1);
    CHECK(violation3 < -1e-6);
}

TEST_CASE("iterated multiplicity count: |G|^(n-1) words with alternating product e") {
    for (const char* name : {"Z2", "Z3", "Z4", "S3"}) {
        GroupTable G = GroupTable::by_name(name);
        const std::size_t n = G.order();
        // direct count over words of length 3
        long long direct = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (G.mul(G.mul(a, G.inv(b)), c) == 0) ++direct;
        CHECK(direct == static_cast<long long>(n * n));

        // cross-check against the ring-level multiplicities on the group ring
        FusionRing ring = catalog::pointed(G).ring;
        long long via_ring = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    via_ring += canonical_multiplicity(ring, {a, b, c}, true);
        CHECK(via_ring == direct);
    }
}
