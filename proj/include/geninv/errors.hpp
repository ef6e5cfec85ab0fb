#pragma once

#include <stdexcept>
#include <string>

namespace geninv {

/// Operands live in different ring contexts (matrix dimension or ring parameters differ).
struct RingContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix operands have incompatible shapes.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation requires a nonzero matrix (rank factorization of 0 is undefined).
struct ZeroMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Finite-ring order exceeds the configured census bound.
struct CensusBoundExceeded : std::runtime_error {
    CensusBoundExceeded(std::uint64_t order, std::uint64_t bound)
        : std::runtime_error("ring order " + std::to_string(order) +
                             " exceeds census bound " + std::to_string(bound)),
          order(order), bound(bound) {}
    std::uint64_t order;
    std::uint64_t bound;
};

} // namespace geninv
