#pragma once

#include "geninv/gaussian.hpp"
#include "geninv/matrix.hpp"

namespace geninv {

/// The exact complex-rational backend: square Gaussian-rational matrices with
/// conjugate-transpose involution. Every matrix over this field is regular and
/// Moore-Penrose invertible; group/core/dual-core existence is a rank test.
using ExactMatrix = Matrix<GaussianRational>;

} // namespace geninv
