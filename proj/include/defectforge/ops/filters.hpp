#pragma once

#include "defectforge/core/field.hpp"

namespace defectforge {

// Separable Gaussian, kernel truncated at radius ceil(3*sigma), normalized to
// sum 1, reflected borders. Evaluated in difference form (center + weighted
// neighbor differences) so a constant field passes through bit-exactly.
ScalarField gaussian_blur(const ScalarField& field, double sigma);

// 3x3 high-frequency filter: convolution with the 4-neighbor Laplacian
// stencil [[0,1,0],[1,-4,1],[0,1,0]], reflected borders. Field must be at
// least 3x3.
ScalarField laplacian_hf(const ScalarField& field);

} // namespace defectforge
