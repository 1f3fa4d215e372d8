#pragma once

#include "defectforge/core/field.hpp"

#include <string>
#include <vector>

namespace defectforge {

/// Interleaved 8-bit image as stored on disk.
struct ImageU8 {
    int height = 0;
    int width = 0;
    int channels = 0; // 1 or 3
    std::vector<std::uint8_t> data;

    std::uint8_t at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
};

/// Decodes a PNG; gray(+alpha) collapses to 1 channel, RGB(A) to 3, 16-bit is
/// narrowed to 8. Throws IoError on unreadable files.
ImageU8 read_png(const std::string& path);

void write_png(const std::string& path, const ImageU8& img);

/// Quantizes with round-half-up to [0,255] and writes an RGB PNG.
void write_png(const std::string& path, const ColorImage& img);

/// Writes a grayscale PNG holding exactly {0, 255}.
void write_png(const std::string& path, const BinaryMask& mask);

ColorImage to_color(const ImageU8& img);       // values scaled to [0,1]
BinaryMask threshold_mask(const ImageU8& img); // luminance >= 128 -> 1

ColorImage read_color_png(const std::string& path);
BinaryMask read_mask_png(const std::string& path);

} // namespace defectforge
