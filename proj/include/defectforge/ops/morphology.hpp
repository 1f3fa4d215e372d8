#pragma once

#include "defectforge/core/field.hpp"

namespace defectforge {

enum class MorphOp { Dilate, Erode, Open, Close };

// Binary morphology with a square structuring element of odd side
// kernel_size; pixels outside the frame count as background (0), so erosion
// never survives at the border and dilation is clipped to the frame.
BinaryMask morph(const BinaryMask& mask, MorphOp op, int kernel_size);

BinaryMask dilate(const BinaryMask& mask, int kernel_size);
BinaryMask erode(const BinaryMask& mask, int kernel_size);

} // namespace defectforge
