#include "fusionkit/catalog.hpp"

#include <cmath>
#include <numbers>

#include "fusionkit/double_construction.hpp"

namespace fusionkit {
namespace catalog {

namespace {

constexpr double pi = std::numbers::pi;

std::complex<double> phase(double turns) {
    return {std::cos(2.0 * pi * turns), std::sin(2.0 * pi * turns)};
}

} // namespace

CatalogEntry su2k(int k) {
    if (k < 1 || k > 8) throw input_error("su2k supports levels 1..8");
    const std::size_t n = static_cast<std::size_t>(k) + 1;
    std::vector<std::string> labels;
    std::vector<std::size_t> dual;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
        dual.push_back(a); // every label is self-conjugate
    }
    FusionRing::Tensor tensor;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t lo = a > b ? a - b : b - a;
            std::size_t hi = std::min(a + b, 2 * static_cast<std::size_t>(k) - a - b);
            for (std::size_t c = lo; c <= hi && c < n; c += 2) tensor[{a, b, c}] = 1;
        }

    ModularData md;
    md.S.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    md.T.resize(static_cast<Eigen::Index>(n));
    const double kk = static_cast<double>(k);
    const double central_charge = 3.0 * kk / (kk + 2.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            md.S(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                std::sqrt(2.0 / (kk + 2.0)) *
                std::sin((a + 1.0) * (b + 1.0) * pi / (kk + 2.0));
        double h = a * (a + 2.0) / (4.0 * (kk + 2.0));
        md.T(static_cast<Eigen::Index>(a)) = phase(h - central_charge / 24.0);
    }

    return CatalogEntry{
        "su2_" + std::to_string(k),
        FusionRing(std::move(labels), std::move(dual), std::move(tensor)),
        std::move(md),
        "truncated Clebsch-Gordan fusion; S_ab = sqrt(2/(k+2)) sin((a+1)(b+1)pi/(k+2)); "
        "T_a = exp(2 pi i (a(a+2)/(4(k+2)) - c/24)), c = 3k/(k+2)"};
}

CatalogEntry ising() {
    std::vector<std::string> labels{"1", "eps", "sigma"};
    std::vector<std::size_t> dual{0, 1, 2};
    FusionRing::Tensor tensor;
    for (std::size_t a = 0; a < 3; ++a) {
        tensor[{0, a, a}] = 1;
        tensor[{a, 0, a}] = 1;
    }
    tensor[{1, 1, 0}] = 1;
    tensor[{1, 2, 2}] = 1;
    tensor[{2, 1, 2}] = 1;
    tensor[{2, 2, 0}] = 1;
    tensor[{2, 2, 1}] = 1;

    const double s = std::sqrt(2.0) / 2.0;
    ModularData md;
    md.S.resize(3, 3);
    md.S << 0.5, 0.5, s, 0.5, 0.5, -s, s, -s, 0.0;
    md.T.resize(3);
    // h = (0, 1/2, 1/16), c = 1/2
    md.T << phase(-1.0 / 48.0), phase(0.5 - 1.0 / 48.0), phase(1.0 / 16.0 - 1.0 / 48.0);

    return CatalogEntry{"ising", FusionRing(std::move(labels), std::move(dual), std::move(tensor)),
                        std::move(md),
                        "sigma.sigma = 1 + eps; S = [[1,1,sqrt2],[1,1,-sqrt2],[sqrt2,-sqrt2,0]]/2; "
                        "h = (0, 1/2, 1/16), c = 1/2"};
}

CatalogEntry pointed(const GroupTable& G) {
    const std::size_t n = G.order();
    std::vector<std::string> labels;
    std::vector<std::size_t> dual;
    for (std::size_t g = 0; g < n; ++g) {
        labels.push_back(G.name(g));
        dual.push_back(G.inv(g));
    }
    FusionRing::Tensor tensor;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) tensor[{g, h, G.mul(g, h)}] = 1;
    return CatalogEntry{"pointed", FusionRing(std::move(labels), std::move(dual), std::move(tensor)),
                        std::nullopt, "group ring; N_{gh}^k = delta_{k,gh}"};
}

CatalogEntry dg(const GroupTable& G) {
    if (G.order() > 12) throw input_error("dg supports built-in groups of order <= 12");
    DrinfeldData data = drinfeld_double_with_modular(G);
    return CatalogEntry{"dg", std::move(data.doubled.ring), std::move(data.modular),
                        "Drinfeld double: labels (class, centralizer character); "
                        "fusion via Verlinde from the double's S-matrix"};
}

std::vector<std::string> names() {
    std::vector<std::string> out{"ising"};
    for (int k = 1; k <= 8; ++k) out.push_back("su2_" + std::to_string(k));
    out.insert(out.end(), {"z2", "z3", "z4", "z6", "z2xz2", "dz2", "dz3", "dz2xz2", "ds3"});
    return out;
}

CatalogEntry get(const std::string& name) {
    if (name == "ising") return ising();
    if (name.rfind("su2_", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(name.substr(4));
        } catch (const std::exception&) {
            throw input_error("unknown catalog entry '" + name + "'");
        }
        return su2k(k);
    }
    auto named_pointed = [](const std::string& n, const GroupTable& g) {
        CatalogEntry e = pointed(g);
        e.name = n;
        return e;
    };
    if (name == "z2") return named_pointed(name, GroupTable::cyclic(2));
    if (name == "z3") return named_pointed(name, GroupTable::cyclic(3));
    if (name == "z4") return named_pointed(name, GroupTable::cyclic(4));
    if (name == "z6") return named_pointed(name, GroupTable::cyclic(6));
    if (name == "z2xz2") return named_pointed(name, GroupTable::klein_four());
    auto named_dg = [](const std::string& n, const GroupTable& g) {
        CatalogEntry e = dg(g);
        e.name = n;
        return e;
    };
    if (name == "dz2") return named_dg(name, GroupTable::cyclic(2));
    if (name == "dz3") return named_dg(name, GroupTable::cyclic(3));
    if (name == "dz2xz2") return named_dg(name, GroupTable::klein_four());
    if (name == "ds3") return named_dg(name, GroupTable::symmetric3());
    throw input_error("unknown catalog entry '" + name + "'");
}

std::vector<CatalogEntry> all() {
    std::vector<CatalogEntry> out;
    for (const auto& n : names()) out.push_back(get(n));
    return out;
}

} // namespace catalog
} // namespace fusionkit
