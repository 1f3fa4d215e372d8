#pragma once

#include "defectforge/core/field.hpp"

namespace defectforge {

// Diffusion inpainting: hole pixels are replaced by the solution of the
// discrete Laplace equation with the surrounding non-hole pixels as Dirichlet
// data (Gauss-Seidel sweeps in row-major order until the largest update drops
// below tol or max_iters is reached). Non-hole pixels pass through untouched.
// Hole pixels are seeded with the mean of the non-hole pixels, so every
// iterate — not just the limit — obeys the discrete maximum principle.
// A hole covering the entire image has no boundary data and is an error.
ScalarField inpaint_diffusion(const ScalarField& image, const BinaryMask& hole,
                              double tol = 1e-4, int max_iters = 2000);
ColorImage inpaint_diffusion(const ColorImage& image, const BinaryMask& hole,
                             double tol = 1e-4, int max_iters = 2000);

} // namespace defectforge
