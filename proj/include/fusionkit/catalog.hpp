#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/group_table.hpp"
#include "fusionkit/modular_data.hpp"

namespace fusionkit {
namespace catalog {

struct CatalogEntry {
    std::string name;
    FusionRing ring;
    std::optional<ModularData> modular;
    std::string notes; // closed-form source of the data
};

/// SU(2) level k: k+1 labels with the truncated Clebsch-Gordan rules and the
/// sine-formula S and T matrices.
CatalogEntry su2k(int k);

/// The three-sector ring with sigma.sigma = 1 + eps and its modular data.
CatalogEntry ising();

/// Group ring of G: one dimension-1 label per element. No modular data.
CatalogEntry pointed(const GroupTable& G);

/// Drinfeld double of a built-in group, with the double's modular data.
CatalogEntry dg(const GroupTable& G);

/// Built-in entry names, in export order.
std::vector<std::string> names();

/// Lookup by name ("ising", "su2_4", "z3", "z2xz2", "ds3", ...).
CatalogEntry get(const std::string& name);

/// All built-in entries.
std::vector<CatalogEntry> all();

} // namespace catalog
} // namespace fusionkit
