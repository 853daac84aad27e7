#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/group_table.hpp"
#include "fusionkit/modular_data.hpp"

namespace fusionkit {

/// A ring file plus its optional modular block.
struct RingFile {
    FusionRing ring;
    std::optional<ModularData> modular;
};

/// Ring file format:
///   { "labels": ["1","eps","sigma"], "dual": [0,1,2],
///     "tensor": [[i,j,k,mult], ...],
///     "modular": { "S": [[[re,im],...],...], "T": [[re,im],...] } }
/// Unit entries N_{0j}^k, N_{i0}^k may be omitted; the loader inserts them and
/// rejects explicit entries that contradict them.
RingFile ring_from_json(const nlohmann::json& j);
RingFile load_ring(const std::string& path);
nlohmann::json ring_to_json(const FusionRing& ring,
                            const std::optional<ModularData>& modular = std::nullopt);

/// Group file format: { "order": n, "mul": [[...]] } with 0 as identity.
GroupTable group_from_json(const nlohmann::json& j);
GroupTable load_group(const std::string& path);
nlohmann::json group_to_json(const GroupTable& g);

} // namespace fusionkit
