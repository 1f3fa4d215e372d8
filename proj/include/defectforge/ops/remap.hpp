#pragma once

#include "defectforge/core/field.hpp"
#include "defectforge/ops/tps.hpp"

namespace defectforge {

enum class Interp { Bilinear, Nearest };

// Backward remap: out(v,u) = in(map_y(v,u), map_x(v,u)). Sample coordinates
// are clamped to the frame, so out-of-range samples take the nearest border
// value. Field dimensions must equal the input's.
ScalarField remap(const ScalarField& in, const DisplacementField& field, Interp interp);
ColorImage remap(const ColorImage& in, const DisplacementField& field, Interp interp);

/// Masks must use nearest; requesting bilinear is a parameter error.
BinaryMask remap(const BinaryMask& in, const DisplacementField& field, Interp interp);

} // namespace defectforge
