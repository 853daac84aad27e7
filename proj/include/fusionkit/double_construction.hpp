#pragma once

#include <cstddef>
#include <string>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/group_table.hpp"
#include "fusionkit/modular_data.hpp"
#include "fusionkit/report.hpp"

namespace fusionkit {

enum class DoubleProvenance { deligne, drinfeld };

/// A fusion ring whose labels are pairs, tagged with how it was built.
struct DoubledRing {
    FusionRing ring;
    DoubleProvenance provenance = DoubleProvenance::deligne;
};

/// Product ring on pairs (i,j): N_{(i,j),(k,l)}^{(m,n)} = N_{ik}^m N_{jl}^n,
/// dual (i',j'). Labels are "(a,b)" over the input labels, row-major.
DoubledRing deligne_double(const FusionRing& ring);

/// Drinfeld double of a finite group (untwisted): labels are pairs of a
/// conjugacy class and an irreducible character of the centralizer of its
/// representative; the fusion tensor comes from the double's S-matrix via the
/// Verlinde formula and is cross-checked (sum of d^2 = |G|^2, associativity)
/// before returning.
DoubledRing drinfeld_double(const GroupTable& G);

/// Same construction, keeping the double's modular matrices.
struct DrinfeldData {
    DoubledRing doubled;
    ModularData modular;
    std::vector<long long> dims; // integer dimensions, label order
};
DrinfeldData drinfeld_double_with_modular(const GroupTable& G);

/// (|G|^2, |G|, |G|^2 - |G|): total sector budget of a G-orbifold, the part
/// coming from the group dual, and the extra twisted part.
struct OrbifoldBudget {
    long long total = 1;
    long long dhr_part = 1;
    long long extra_part = 0;
};
OrbifoldBudget orbifold_budget(long long group_order);

/// How much of the full pair set the principal-graph component of (0,0)
/// reaches, with the grading order reported alongside the deficiency.
struct DoubleComparison {
    std::size_t total_pairs = 1;
    std::size_t component_pairs = 1;
    bool full = true;
    std::size_t grading_order = 1;
    double deficiency = 1.0; // total_pairs / component_pairs

    Report to_report() const;
};
DoubleComparison compare_double(const FusionRing& ring);

} // namespace fusionkit
