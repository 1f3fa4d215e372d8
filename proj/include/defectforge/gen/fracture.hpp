#pragma once

#include "defectforge/core/field.hpp"
#include "defectforge/core/rng.hpp"
#include "defectforge/gen/params.hpp"

namespace defectforge {

// Fracture-line skeleton: frontier growth over a FIFO queue. Per start point
// the stream is consumed as (pixel index, angle); per frontier step as
// (stop draw, branch draw[, branch angle]). A frontier that leaves the frame
// or the foreground terminates. Every sampled start point is marked; an
// empty foreground yields an all-zero mask.
BinaryMask generate_skeleton(const BinaryMask& foreground, const FractureParams& params,
                             Rng& rng);

// Thickness-threshold stage before any morphology: with d the distance to the
// skeleton and nu the fractal noise at (y/H, x/W),
//   set(y,x)  <=>  d + nu < w0*exp(-alpha*d) + epsilon.
BinaryMask fracture_threshold_stage(const BinaryMask& skeleton, const FractureParams& params,
                                    std::uint64_t noise_seed);

// Full mask: one noise-seed draw from rng, threshold stage, morphological
// close then open (square kernel morph_kernel_size), Gaussian blur at
// sigma_blur, binarize at blur_threshold.
BinaryMask fracture_mask_from_skeleton(const BinaryMask& skeleton, const FractureParams& params,
                                       Rng& rng);

} // namespace defectforge
