// Acceptance suite: one numbered criterion per check, one line of output each.
// Run with no arguments for the full suite, or `--only <id>` for one criterion.
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fusionkit/catalog.hpp"
#include "fusionkit/double_construction.hpp"
#include "fusionkit/lr_graphs.hpp"
#include "fusionkit/lr_oracle.hpp"
#include "fusionkit/modular_data.hpp"
#include "fusionkit/multi_interval.hpp"

using namespace fusionkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
};

Outcome criterion_ising_index() {
    double I = catalog::ising().ring.global_index();
    Outcome o;
    o.pass = std::abs(I - 4.0) <= 1e-9;
    o.detail = "global index " + std::to_string(I);
    return o;
}

Outcome criterion_orbifold_budget() {
    Outcome o;
    for (long long g : {1, 2, 3, 4, 6}) {
        OrbifoldBudget b = orbifold_budget(g);
        if (b.total != g * g || b.dhr_part != g || b.extra_part != g * g - g) {
            o.pass = false;
            o.detail = "budget wrong at |G| = " + std::to_string(g);
            return o;
        }
    }
    o.detail = "(|G|^2, |G|, |G|^2-|G|) exact for |G| in {1,2,3,4,6}";
    return o;
}

Outcome criterion_double_dimension() {
    Outcome o;
    std::ostringstream os;
    for (auto [name, order, simples] : {std::tuple<const char*, double, std::size_t>{"dz2", 2, 4},
                                        {"dz3", 3, 9},
                                        {"dz2xz2", 4, 16},
                                        {"ds3", 6, 8}}) {
        catalog::CatalogEntry e = catalog::get(name);
        double I = e.ring.global_index();
        if (std::abs(I - order * order) > 1e-9 || e.ring.rank() != simples) {
            o.pass = false;
            o.detail = std::string(name) + ": sum d^2 = " + std::to_string(I) + ", " +
                       std::to_string(e.ring.rank()) + " simples";
            return o;
        }
        os << name << "=" << I << " ";
    }
    o.detail = "sum d^2 = |G|^2: " + os.str();
    return o;
}

Outcome criterion_sector_count() {
    Outcome o;
    for (int k = 1; k <= 8; ++k)
        if (catalog::su2k(k).ring.rank() != static_cast<std::size_t>(k) + 1) {
            o.pass = false;
            o.detail = "su2 level " + std::to_string(k) + " sector count wrong";
            return o;
        }
    o.detail = "k+1 sectors for k = 1..8";
    return o;
}

Outcome criterion_even_part_ratio() {
    Outcome o;
    for (int k = 1; k <= 6; ++k) {
        double r = even_part_ratio(catalog::su2k(k).ring);
        if (std::abs(r - 2.0) > 1e-9) {
            o.pass = false;
            o.detail = "su2 level " + std::to_string(k) + " ratio " + std::to_string(r);
            return o;
        }
    }
    double r3 = even_part_ratio(catalog::get("z3").ring);
    if (std::abs(r3 - 3.0) > 1e-9) {
        o.pass = false;
        o.detail = "pointed Z3 ratio " + std::to_string(r3);
        return o;
    }
    o.detail = "ratio 2 for su2 k=1..6 and 3 for pointed Z3";
    return o;
}

Outcome criterion_multi_interval() {
    Outcome o;
    if (mu_n(4.0, 3) != 16.0 || mu_n(2.0, 5) != 16.0 || mu_n(9.0, 1) != 1.0) {
        o.pass = false;
        o.detail = "mu_n power law violated";
        return o;
    }
    double worst_rel = 0.0;
    for (const auto& entry : catalog::all()) {
        double I = entry.ring.global_index();
        for (int n = 2; n <= 4; ++n) {
            IdentityCheck c = dimension_identity_check(entry.ring, n);
            if (mu_n(I, n) != c.rhs || !c.pass) {
                o.pass = false;
                o.detail = entry.name + " fails at n = " + std::to_string(n) + " (residual " +
                           std::to_string(c.residual) + ")";
                return o;
            }
            worst_rel = std::max(worst_rel, c.residual / c.rhs);
        }
    }
    o.detail = "identity holds for n = 2,3,4 on all entries (worst rel residual " +
               std::to_string(worst_rel) + ")";
    return o;
}

Outcome criterion_lr_net_triviality() {
    Outcome o;
    double worst = 0.0;
    for (const auto& entry : catalog::all()) {
        double mu_b = lr_net_mu(entry.ring, entry.ring.global_index());
        worst = std::max(worst, std::abs(mu_b - 1.0));
        if (std::abs(mu_b - 1.0) > 1e-9) {
            o.pass = false;
            o.detail = entry.name + ": mu_B = " + std::to_string(mu_b);
            return o;
        }
    }
    o.detail = "mu_B = 1 on all entries (worst |mu_B - 1| = " + std::to_string(worst) + ")";
    return o;
}

Outcome criterion_modularity() {
    Outcome o;
    std::vector<std::string> names{"ising"};
    for (int k = 1; k <= 6; ++k) names.push_back("su2_" + std::to_string(k));
    for (const auto& name : names) {
        catalog::CatalogEntry e = catalog::get(name);
        if (!e.modular) {
            o.pass = false;
            o.detail = name + " lacks modular data";
            return o;
        }
        if (!check_modularity(e.ring, *e.modular).pass) {
            o.pass = false;
            o.detail = name + " fails the modularity suite";
            return o;
        }
        if (verlinde(*e.modular) != e.ring.tensor()) {
            o.pass = false;
            o.detail = name + " Verlinde roundtrip differs from the tensor";
            return o;
        }
    }
    for (const char* name : {"ising", "su2_3"}) {
        FusionRing ring = catalog::get(name).ring;
        for (std::size_t i = 0; i < ring.rank(); ++i) {
            for (std::size_t j = 0; j < ring.rank(); ++j) {
                long long want = (i == j) ? 1 : 0;
                if (alpha_hom_count(ring, {i, 0}, {j, 0}) != want) {
                    o.pass = false;
                    o.detail = std::string(name) + " alpha irreducibility fails";
                    return o;
                }
            }
            if (alpha_hom_count(ring, {i, 0}, {0, ring.dual(i)}) != 1) {
                o.pass = false;
                o.detail = std::string(name) + " alpha left-right identification fails";
                return o;
            }
        }
    }
    o.detail = "modularity + Verlinde roundtrip (ising, su2 k<=6); hom counts on ising, su2_3";
    return o;
}

Outcome criterion_principal_graph() {
    Outcome o;
    FusionRing ising = catalog::ising().ring;
    BipartiteGraph p = principal_graph(ising);
    BipartiteGraph d = dual_principal_graph(ising, true);
    bool full_component = p.evens.size() == 9 && p.odds.size() == 3;
    bool dual_same = p.same_vertices(d) && p == d;
    std::string dot1 = p.to_dot();
    std::string dot2 = principal_graph(catalog::ising().ring).to_dot();
    bool deterministic = dot1 == dot2 && !dot1.empty();
    o.pass = full_component && dual_same && deterministic;
    std::ostringstream os;
    os << "component of (0,0): " << p.evens.size() << " even / " << p.odds.size()
       << " odd vertices (required: 9 even / 3 odd)"
       << "; principal = dual: " << (dual_same ? "yes" : "no")
       << "; DOT byte-identical: " << (deterministic ? "yes" : "no");
    o.detail = os.str();
    return o;
}

Outcome criterion_crossed_product_oracle() {
    Outcome o;
    for (auto [name, m] : {std::pair<const char*, int>{"Z2", 2}, {"Z3", 3}}) {
        GroupTable G = GroupTable::by_name(name);
        CrossedProductAlgebra A = CrossedProductAlgebra::build(G, m, 1);
        double rel = A.worst_relation_residual();
        if (rel >= 1e-10) {
            o.pass = false;
            o.detail = std::string(name) + " relation residual " + std::to_string(rel);
            return o;
        }
        double roundtrip = 0.0;
        for (int s = 0; s < 100; ++s) {
            Eigen::MatrixXcd X = A.random_element(2024 + static_cast<std::uint64_t>(s));
            roundtrip = std::max(roundtrip, (X - A.assemble(A.expand(X))).cwiseAbs().maxCoeff());
        }
        if (roundtrip >= 1e-12) {
            o.pass = false;
            o.detail = std::string(name) + " roundtrip residual " + std::to_string(roundtrip);
            return o;
        }
        double margin = A.pimsner_popa_check(100, 7);
        if (margin < -1e-9) {
            o.pass = false;
            o.detail = std::string(name) + " Pimsner-Popa margin " + std::to_string(margin);
            return o;
        }
        // sharpness witness: seed 1 violates lambda = 2/|G|
        double witness = A.pimsner_popa_margin(2.0 / static_cast<double>(G.order()), 1, 1);
        if (witness >= -1e-6) {
            o.pass = false;
            o.detail = std::string(name) + " sharpness witness missing (margin " +
                       std::to_string(witness) + ")";
            return o;
        }
    }
    o.detail = "relations < 1e-10, roundtrip < 1e-12, margin >= -1e-9 at 1/|G|, "
               "seed-1 witness violates 2/|G|";
    return o;
}

Outcome criterion_depth_two() {
    Outcome o;
    std::vector<std::string> pointed{"su2_1", "z2", "z3", "z4", "z6", "z2xz2",
                                     "dz2", "dz3", "dz2xz2"};
    std::vector<std::string> not_pointed{"ising", "ds3"};
    for (int k = 2; k <= 8; ++k) not_pointed.push_back("su2_" + std::to_string(k));
    for (const auto& name : pointed)
        if (!is_depth_two(catalog::get(name).ring)) {
            o.pass = false;
            o.detail = name + " should be depth 2";
            return o;
        }
    for (const auto& name : not_pointed)
        if (is_depth_two(catalog::get(name).ring)) {
            o.pass = false;
            o.detail = name + " should not be depth 2";
            return o;
        }
    o.detail = "depth 2 exactly on the pointed entries";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int a = 1; a < argc; ++a) {
        if (std::strcmp(argv[a], "--only") == 0 && a + 1 < argc) only = std::atoi(argv[++a]);
        else if (std::strcmp(argv[a], "--list") == 0) only = -1;
        else {
            std::cerr << "usage: acceptance [--only <id>] [--list]\n";
            return 2;
        }
    }

    std::vector<Criterion> criteria{
        {1, "ising global index 4", criterion_ising_index},
        {2, "orbifold sector budget", criterion_orbifold_budget},
        {3, "quantum double dimension |G|^2", criterion_double_dimension},
        {4, "su2 level k sector count k+1", criterion_sector_count},
        {5, "even-part index ratio", criterion_even_part_ratio},
        {6, "multi-interval index law", criterion_multi_interval},
        {7, "LR net triviality", criterion_lr_net_triviality},
        {8, "modularity suite and hom counts", criterion_modularity},
        {9, "principal graph component and DOT determinism", criterion_principal_graph},
        {10, "crossed-product oracle", criterion_crossed_product_oracle},
        {11, "depth-2 test", criterion_depth_two},
    };

    if (only == -1) {
        for (const auto& c : criteria) std::cout << c.id << ": " << c.title << "\n";
        return 0;
    }

    bool all_pass = true;
    bool ran_any = false;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        ran_any = true;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all_pass = all_pass && o.pass;
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " - "
                  << c.title << " - " << o.detail << "\n";
    }
    if (!ran_any) {
        std::cerr << "no criterion with id " << only << "\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
