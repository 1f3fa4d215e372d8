#include "defectforge/io/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

namespace defectforge {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

inline std::uint8_t quantize(double v) {
    const double scaled = std::floor(v * 255.0 + 0.5);
    return static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 255.0));
}

} // namespace

ImageU8 read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open PNG for reading: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("failed to decode PNG: " + path);
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const png_byte color_type = png_get_color_type(png, info);
    const png_byte bit_depth = png_get_bit_depth(png, info);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    ImageU8 img;
    img.height = static_cast<int>(height);
    img.width = static_cast<int>(width);
    img.channels = channels;
    img.data.resize(static_cast<std::size_t>(height) * width * channels);

    std::vector<png_bytep> rows(height);
    for (png_uint_32 y = 0; y < height; ++y)
        rows[y] = img.data.data() + static_cast<std::size_t>(y) * width * channels;
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);

    if (channels != 1 && channels != 3)
        throw IoError("unsupported PNG channel count in " + path);
    return img;
}

void write_png(const std::string& path, const ImageU8& img) {
    if (img.channels != 1 && img.channels != 3)
        throw IoError("write_png supports 1 or 3 channels");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open PNG for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("failed to encode PNG: " + path);
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8,
                 img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_bytep> rows(static_cast<std::size_t>(img.height));
    for (int y = 0; y < img.height; ++y)
        rows[static_cast<std::size_t>(y)] = const_cast<png_bytep>(
            img.data.data() + static_cast<std::size_t>(y) * img.width * img.channels);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void write_png(const std::string& path, const ColorImage& img) {
    ImageU8 u8;
    u8.height = img.height();
    u8.width = img.width();
    u8.channels = 3;
    u8.data.resize(static_cast<std::size_t>(u8.height) * u8.width * 3);
    std::size_t p = 0;
    for (int y = 0; y < u8.height; ++y)
        for (int x = 0; x < u8.width; ++x)
            for (int c = 0; c < 3; ++c) u8.data[p++] = quantize(img.channels[c].at(y, x));
    write_png(path, u8);
}

void write_png(const std::string& path, const BinaryMask& mask) {
    ImageU8 u8;
    u8.height = mask.height;
    u8.width = mask.width;
    u8.channels = 1;
    u8.data.resize(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) u8.data[i] = mask.data[i] ? 255 : 0;
    write_png(path, u8);
}

ColorImage to_color(const ImageU8& img) {
    ColorImage out(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            for (int c = 0; c < 3; ++c) {
                const int src = img.channels == 1 ? 0 : c;
                out.channels[c].at(y, x) = img.at(y, x, src) / 255.0;
            }
    return out;
}

BinaryMask threshold_mask(const ImageU8& img) {
    BinaryMask out(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            double lum;
            if (img.channels == 1) {
                lum = img.at(y, x, 0);
            } else {
                lum = 0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) +
                      0.114 * img.at(y, x, 2);
            }
            out.at(y, x) = lum >= 128.0 ? 1 : 0;
        }
    return out;
}

ColorImage read_color_png(const std::string& path) { return to_color(read_png(path)); }

BinaryMask read_mask_png(const std::string& path) { return threshold_mask(read_png(path)); }

} // namespace defectforge
