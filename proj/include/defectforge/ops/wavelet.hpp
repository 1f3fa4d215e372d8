#pragma once

#include "defectforge/core/field.hpp"

namespace defectforge {

struct HaarSubbands {
    ScalarField ll, lh, hl, hh;
};

// Single-level orthonormal 2D Haar transform. For each 2x2 block
// [a b; c d] (a = (2i,2j), b = (2i,2j+1), c = (2i+1,2j), d = (2i+1,2j+1)):
//   LL = (a+b+c+d)/2   LH = (a-b+c-d)/2   (detail along x)
//   HL = (a+b-c-d)/2   HH = (a-b-c+d)/2   (detail along y / diagonal)
// Energy is preserved: ||f||^2 = sum of subband energies. Dimensions must be
// even; callers pad.
HaarSubbands haar_dwt(const ScalarField& field);

/// Exact inverse of haar_dwt; the four subbands must share dimensions.
ScalarField haar_idwt(const HaarSubbands& s);

} // namespace defectforge
