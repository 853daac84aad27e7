#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/report.hpp"

namespace fusionkit {

class GroupTable;

/// Formal nonnegative-integer combination of sector labels, keyed by label index.
using FormalSum = std::map<std::size_t, long long>;

/// Real-weighted combination, used by the multi-interval dimension sums.
using WeightedSum = std::map<std::size_t, double>;

/// Quantum dimensions of a ring, one entry per label, with the tolerance the
/// values were computed/checked under.
struct DimensionVector {
    std::vector<double> d;
    double tolerance = 1e-9;
};

/// Universal grading of a fusion ring: the finest partition of the labels into
/// components closed under fusion adjacency, carrying an induced group law.
struct Grading {
    std::vector<std::vector<std::size_t>> components; // identity component first
    std::vector<std::size_t> component_of;            // label index -> component index
    // Induced group on the components; built lazily by FusionRing::grading().
    std::vector<std::vector<std::size_t>> group_mul;
    bool trivial() const { return components.size() == 1; }
    std::size_t order() const { return components.size(); }
};

/// A rational system of superselection sectors at the Grothendieck-ring level:
/// ordered labels (index 0 is the identity sector), a duality involution and
/// the integer fusion tensor N_{ij}^k stored sparsely (absent key means 0).
///
/// Immutable after construction; all operations are const and safe for
/// concurrent use.
class FusionRing {
public:
    using TensorKey = std::array<std::size_t, 3>;
    using Tensor = std::map<TensorKey, long long>;

    /// Structural validation only (label uniqueness, index ranges, sign of
    /// multiplicities). Throws input_error on malformed data; the ring axioms
    /// are checked by validate().
    FusionRing(std::vector<std::string> labels, std::vector<std::size_t> dual,
               Tensor tensor);

    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t index_of(const std::string& label) const;

    std::size_t dual(std::size_t i) const { return dual_.at(i); }
    const std::vector<std::size_t>& dual_map() const { return dual_; }

    long long N(std::size_t i, std::size_t j, std::size_t k) const;
    const Tensor& tensor() const { return tensor_; }

    /// Fusion matrix of label i, (N_i)_{jk} = N_{ij}^k, as dense rows.
    std::vector<std::vector<long long>> fusion_matrix(std::size_t i) const;

    /// Checks every ring axiom (unit, dual involution, conjugation,
    /// Frobenius reciprocity, associativity); one report entry per axiom.
    Report validate() const;
    bool is_valid() const { return validate().pass(); }

    /// Bilinear extension of the tensor to formal combinations.
    FormalSum fuse(const FormalSum& a, const FormalSum& b) const;
    WeightedSum fuse(const WeightedSum& a, const WeightedSum& b) const;
    FormalSum fuse(std::size_t a, std::size_t b) const;

    /// Quantum dimensions: d_i is the Perron-Frobenius eigenvalue of N_i,
    /// computed by power iteration (1e-12 eigenvalue convergence, at most
    /// 10000 iterations; throws numeric_error with the iteration count on
    /// non-convergence).
    DimensionVector dims(double tolerance = 1e-9) const;

    /// Sum of d_i^2 over all labels.
    double global_index() const;

    /// Universal grading with the induced group on components.
    Grading grading() const;
    GroupTable grading_group() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> dual_;
    Tensor tensor_;
};

/// Parses "a+b+2*c" style formal combinations over the ring's labels.
FormalSum parse_combination(const FusionRing& ring, const std::string& text);

} // namespace fusionkit
