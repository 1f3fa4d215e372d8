#include "defectforge/ops/remap.hpp"

#include <algorithm>
#include <cmath>

namespace defectforge {

namespace {

void check_field(int h, int w, const DisplacementField& field) {
    if (field.map_x.height != h || field.map_x.width != w || field.map_y.height != h ||
        field.map_y.width != w)
        throw DimensionError("remap: displacement field dimensions must match the image");
}

inline double sample_bilinear(const ScalarField& in, double ry, double rx) {
    ry = std::clamp(ry, 0.0, static_cast<double>(in.height - 1));
    rx = std::clamp(rx, 0.0, static_cast<double>(in.width - 1));
    const int y0 = static_cast<int>(std::floor(ry));
    const int x0 = static_cast<int>(std::floor(rx));
    const int y1 = std::min(y0 + 1, in.height - 1);
    const int x1 = std::min(x0 + 1, in.width - 1);
    const double fy = ry - y0;
    const double fx = rx - x0;
    const double top = in.at(y0, x0) * (1.0 - fx) + in.at(y0, x1) * fx;
    const double bot = in.at(y1, x0) * (1.0 - fx) + in.at(y1, x1) * fx;
    return top * (1.0 - fy) + bot * fy;
}

inline std::pair<int, int> sample_nearest(int h, int w, double ry, double rx) {
    // round half up, then clamp to the frame
    const int y = std::clamp(static_cast<int>(std::floor(ry + 0.5)), 0, h - 1);
    const int x = std::clamp(static_cast<int>(std::floor(rx + 0.5)), 0, w - 1);
    return {y, x};
}

} // namespace

ScalarField remap(const ScalarField& in, const DisplacementField& field, Interp interp) {
    check_field(in.height, in.width, field);
    ScalarField out(in.height, in.width);
    for (int v = 0; v < in.height; ++v) {
        for (int u = 0; u < in.width; ++u) {
            const double ry = field.map_y.at(v, u);
            const double rx = field.map_x.at(v, u);
            if (interp == Interp::Bilinear) {
                out.at(v, u) = sample_bilinear(in, ry, rx);
            } else {
                const auto [y, x] = sample_nearest(in.height, in.width, ry, rx);
                out.at(v, u) = in.at(y, x);
            }
        }
    }
    return out;
}

ColorImage remap(const ColorImage& in, const DisplacementField& field, Interp interp) {
    ColorImage out;
    for (int c = 0; c < 3; ++c) out.channels[c] = remap(in.channels[c], field, interp);
    return out;
}

BinaryMask remap(const BinaryMask& in, const DisplacementField& field, Interp interp) {
    if (interp == Interp::Bilinear)
        throw ParameterError("remap: binary masks must use nearest interpolation");
    check_field(in.height, in.width, field);
    BinaryMask out(in.height, in.width);
    for (int v = 0; v < in.height; ++v) {
        for (int u = 0; u < in.width; ++u) {
            const auto [y, x] =
                sample_nearest(in.height, in.width, field.map_y.at(v, u), field.map_x.at(v, u));
            out.at(v, u) = in.at(y, x);
        }
    }
    return out;
}

} // namespace defectforge
