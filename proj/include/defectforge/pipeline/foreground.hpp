#pragma once

#include "defectforge/core/field.hpp"

#include <string>

namespace defectforge {

// Heuristic fallback when no explicit foreground is supplied: global Otsu
// threshold on luminance (0.299 R + 0.587 G + 0.114 B, 8-bit histogram),
// keep the bright side, then the largest 4-connected component (ties go to
// the first component in row-major scan order).
BinaryMask otsu_foreground(const ColorImage& image);

// Explicit mask file (>=128 -> 1) when mask_path is non-empty, otherwise the
// Otsu fallback on the image. Throws IoError on unreadable files and
// DimensionError when the mask does not match the image.
BinaryMask load_foreground(const std::string& image_path, const std::string& mask_path = {});

} // namespace defectforge
