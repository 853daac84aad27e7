#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fusionkit/group_table.hpp"

namespace fusionkit {

/// Irreducible complex character table of a small finite group.
/// Characters are rows of `chi`, one column per conjugacy class; the trivial
/// character sits at row 0 and the remaining rows are ordered by degree, then
/// lexicographically on the (rounded) values, so the table is deterministic.
struct CharacterTable {
    std::vector<std::vector<std::size_t>> classes; // identity class first
    std::vector<std::size_t> class_of;             // element -> class index
    Eigen::MatrixXcd chi;                          // characters x classes
    std::vector<long long> degrees;                // chi(1), positive integers

    std::size_t num_classes() const { return classes.size(); }
    std::size_t num_characters() const { return static_cast<std::size_t>(chi.rows()); }
};

/// Burnside-Dixon: simultaneous diagonalization of the class-sum matrices via
/// seeded random combinations; retries on eigenvalue collisions up to a cap,
/// then throws numeric_error. Row orthogonality is verified before returning.
CharacterTable character_table(const GroupTable& G, std::uint64_t seed = 0x5eedu);

} // namespace fusionkit
