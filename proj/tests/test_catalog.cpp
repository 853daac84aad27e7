#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fusionkit/catalog.hpp"
#include "fusionkit/modular_data.hpp"
#include "oracles.hpp"

using namespace fusionkit;

TEST_CASE("every entry passes validation; modular entries pass the suite") {
    for (const auto& entry : catalog::all()) {
        INFO(entry.name);
        CHECK(entry.ring.validate().pass());
        if (entry.modular) {
            CHECK(check_modularity(entry.ring, *entry.modular).pass);
            CHECK(verlinde(*entry.modular) == entry.ring.tensor());
        }
    }
}

TEST_CASE("su2 level k has k+1 self-dual labels") {
    for (int k = 1; k <= 8; ++k) {
        catalog::CatalogEntry e = catalog::su2k(k);
        CHECK(e.ring.rank() == static_cast<std::size_t>(k) + 1);
        for (std::size_t a = 0; a < e.ring.rank(); ++a) CHECK(e.ring.dual(a) == a);
    }
    CHECK_THROWS_AS(catalog::su2k(0), input_error);
    CHECK_THROWS_AS(catalog::su2k(9), input_error);
}

TEST_CASE("su2 level 1 is the two-element pointed ring") {
    catalog::CatalogEntry e = catalog::su2k(1);
    CHECK(e.ring.rank() == 2);
    CHECK(e.ring.N(1, 1, 0) == 1);
    CHECK(e.ring.N(1, 1, 1) == 0);
    for (double d : e.ring.dims().d) CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
    // S reduces to the normalized sign matrix
    CHECK(e.modular->S(0, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(e.modular->S(1, 1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("su2 level 2 matches the three-sector ring under relabeling") {
    FusionRing su22 = catalog::su2k(2).ring;
    FusionRing ising = oracles::handmade_ising();
    // bijection: 0 -> 1, 1 -> sigma, 2 -> eps
    const std::size_t map[3] = {0, 2, 1};
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c)
                CHECK(su22.N(a, b, c) == ising.N(map[a], map[b], map[c]));
}

TEST_CASE("su2 global index matches the closed form") {
    for (int k = 1; k <= 8; ++k) {
        double s = std::sin(std::numbers::pi / (k + 2.0));
        double closed = (k + 2.0) / (2.0 * s * s);
        CHECK(catalog::su2k(k).ring.global_index() == doctest::Approx(closed).epsilon(1e-8));
    }
}

TEST_CASE("ising entry: three sectors, index 4, d_sigma^2 = 2") {
    catalog::CatalogEntry e = catalog::ising();
    CHECK(e.ring.rank() == 3);
    CHECK(e.ring.global_index() == doctest::Approx(4.0).epsilon(1e-9));
    double ds = e.ring.dims().d[2];
    CHECK(ds * ds == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(e.ring.tensor() == oracles::handmade_ising().tensor());
}

TEST_CASE("pointed entries are group rings without modular data") {
    catalog::CatalogEntry z2 = catalog::get("z2");
    CHECK(z2.ring.rank() == 2);
    CHECK(!z2.modular.has_value());
    catalog::CatalogEntry v4 = catalog::get("z2xz2");
    CHECK(v4.ring.rank() == 4);
    for (std::size_t g = 0; g < 4; ++g) CHECK(v4.ring.N(g, g, 0) == 1); // every element is an involution
    catalog::CatalogEntry z3 = catalog::get("z3");
    CHECK(z3.ring.N(1, 1, 2) == 1);
    CHECK(z3.ring.dual(1) == 2);
}

TEST_CASE("dg entries delegate to the double construction") {
    catalog::CatalogEntry dz2 = catalog::get("dz2");
    CHECK(dz2.ring.rank() == 4);
    CHECK(dz2.ring.global_index() == doctest::Approx(4.0).epsilon(1e-9));
    catalog::CatalogEntry ds3 = catalog::get("ds3");
    CHECK(ds3.ring.rank() == 8);
    CHECK(ds3.ring.global_index() == doctest::Approx(36.0).epsilon(1e-8));
    catalog::CatalogEntry dz1 = catalog::dg(GroupTable::trivial());
    CHECK(dz1.ring.rank() == 1);
}

TEST_CASE("names and lookup agree") {
    for (const auto& name : catalog::names()) CHECK(catalog::get(name).name == name);
    CHECK_THROWS_AS(catalog::get("su2_99"), input_error);
    CHECK_THROWS_AS(catalog::get("nonsense"), input_error);
}
