#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

// Malformed input: bad files, unknown labels, out-of-range indices.
// Distinct from axiom/check failures, which are reported, not thrown.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: non-convergence, inconsistent cross-checks.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fusionkit
