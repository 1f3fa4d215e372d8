#pragma once

#include "defectforge/core/field.hpp"

namespace defectforge {

// Exact Euclidean distance transform: output(p) is the distance from p to the
// nearest pixel q with mask(q) == 0. If the mask contains no zero pixel, every
// output value is the sentinel height+width (farther than any realizable
// distance). Implemented with the two-pass squared-distance algorithm of
// Felzenszwalb & Huttenlocher (Theory of Computing, 2012); squared distances
// are integers, so results match a brute-force nearest-zero scan bit for bit.
ScalarField distance_transform(const BinaryMask& mask);

} // namespace defectforge
