#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace defectforge {

// Error taxonomy shared across the library. Callers can catch the base
// std::runtime_error / std::invalid_argument or the specific types.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense H×W field of doubles, row-major.
struct ScalarField {
    int height = 0;
    int width = 0;
    std::vector<double> data;

    ScalarField() = default;
    ScalarField(int h, int w, double fill = 0.0)
        : height(h), width(w), data(static_cast<std::size_t>(check_dims(h, w)) , fill) {}

    double& at(int y, int x) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x]; }

    std::size_t size() const { return data.size(); }
    bool same_dims(const ScalarField& o) const { return height == o.height && width == o.width; }

    static std::size_t check_dims(int h, int w) {
        if (h < 1 || w < 1)
            throw DimensionError("field dimensions must be >= 1, got " + std::to_string(h) + "x" +
                                 std::to_string(w));
        return static_cast<std::size_t>(h) * static_cast<std::size_t>(w);
    }
};

/// Binary H×W mask; values are strictly 0 or 1.
struct BinaryMask {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> data;

    BinaryMask() = default;
    BinaryMask(int h, int w, std::uint8_t fill = 0)
        : height(h), width(w), data(ScalarField::check_dims(h, w), fill) {}

    std::uint8_t& at(int y, int x) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x]; }

    std::size_t size() const { return data.size(); }
    bool same_dims(const BinaryMask& o) const { return height == o.height && width == o.width; }
    bool in_bounds(int y, int x) const { return y >= 0 && y < height && x >= 0 && x < width; }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto v : data) n += v;
        return n;
    }
    bool empty_mask() const { return count() == 0; }

    /// Elementwise complement (1 - m).
    BinaryMask complement() const {
        BinaryMask out(height, width);
        for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] ? 0 : 1;
        return out;
    }

    bool subset_of(const BinaryMask& o) const {
        if (!same_dims(o)) return false;
        for (std::size_t i = 0; i < data.size(); ++i)
            if (data[i] && !o.data[i]) return false;
        return true;
    }
};

/// RGB image, one ScalarField per channel, values nominally in [0,1].
struct ColorImage {
    std::array<ScalarField, 3> channels;

    ColorImage() = default;
    ColorImage(int h, int w, double fill = 0.0)
        : channels{ScalarField(h, w, fill), ScalarField(h, w, fill), ScalarField(h, w, fill)} {}

    int height() const { return channels[0].height; }
    int width() const { return channels[0].width; }
};

/// Phase-space image used by the Allen-Cahn refiner; values nominally in
/// [-1,1] (affine image of [0,1] color), clamped to [-1.5,1.5] in flight.
struct PhaseImage {
    std::array<ScalarField, 3> channels;

    PhaseImage() = default;
    PhaseImage(int h, int w, double fill = 0.0)
        : channels{ScalarField(h, w, fill), ScalarField(h, w, fill), ScalarField(h, w, fill)} {}

    int height() const { return channels[0].height; }
    int width() const { return channels[0].width; }
};

/// [0,1] color -> [-1,1] phase, per channel: p = 2c - 1.
PhaseImage color_to_phase(const ColorImage& img);
/// [-1,1] phase -> [0,1] color, clamped: c = clamp((p + 1)/2, 0, 1).
ColorImage phase_to_color(const PhaseImage& img);

/// Throws NumericError naming `where` if any value is not finite.
void require_finite(const ScalarField& f, const char* where);

} // namespace defectforge
