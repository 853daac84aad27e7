#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"

namespace fusionkit {

/// Finite group given by its multiplication table. Element 0 is the identity.
/// Associativity, unit and inverses are checked on construction.
class GroupTable {
public:
    GroupTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mul);

    std::size_t order() const { return names_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_.at(a).at(b); }
    std::size_t inv(std::size_t a) const { return inv_.at(a); }
    const std::string& name(std::size_t a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }

    bool is_abelian() const;

    /// Conjugacy classes, identity class first, then ordered by least member.
    std::vector<std::vector<std::size_t>> conjugacy_classes() const;

    /// Elements commuting with g, in index order (identity first).
    std::vector<std::size_t> centralizer(std::size_t g) const;

    /// Subgroup on the given element set (must be closed and contain 0),
    /// reindexed in the given order.
    GroupTable subgroup(const std::vector<std::size_t>& elements) const;

    static GroupTable trivial();
    static GroupTable cyclic(std::size_t n);
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
    static GroupTable klein_four();
    static GroupTable symmetric3();

    /// Built-in lookup: "Z1".."Z12", "Z2xZ2", "S3" (case-insensitive).
    static GroupTable by_name(const std::string& name);

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> mul_;
    std::vector<std::size_t> inv_;
};

} // namespace fusionkit
