#include "defectforge/ops/inpaint.hpp"

#include <cmath>
#include <vector>

namespace defectforge {

ScalarField inpaint_diffusion(const ScalarField& image, const BinaryMask& hole, double tol,
                              int max_iters) {
    if (hole.height != image.height || hole.width != image.width)
        throw DimensionError("inpaint_diffusion: hole dimensions must match the image");
    if (tol <= 0.0 || max_iters < 0)
        throw ParameterError("inpaint_diffusion: tol must be > 0 and max_iters >= 0");

    const std::size_t n_hole = hole.count();
    if (n_hole == 0) return image;
    if (n_hole == image.size())
        throw ParameterError("inpaint_diffusion: hole covers the entire image (no boundary)");

    ScalarField out = image;

    // Seed value: mean of the boundary ring (non-hole pixels 4-adjacent to the
    // hole). Every Gauss-Seidel iterate then averages values drawn from the
    // ring's range, which keeps the maximum principle intact at finite
    // iteration counts.
    double ring_sum = 0.0;
    std::size_t ring_cnt = 0;
    std::vector<std::pair<int, int>> holes;
    holes.reserve(n_hole);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            if (hole.at(y, x)) {
                holes.emplace_back(y, x);
                continue;
            }
            const bool ring = (y > 0 && hole.at(y - 1, x)) ||
                              (y + 1 < image.height && hole.at(y + 1, x)) ||
                              (x > 0 && hole.at(y, x - 1)) ||
                              (x + 1 < image.width && hole.at(y, x + 1));
            if (ring) {
                ring_sum += image.at(y, x);
                ++ring_cnt;
            }
        }
    }
    const double seed = ring_cnt ? ring_sum / static_cast<double>(ring_cnt) : 0.0;
    for (const auto& [y, x] : holes) out.at(y, x) = seed;

    for (int iter = 0; iter < max_iters; ++iter) {
        double max_update = 0.0;
        for (const auto& [y, x] : holes) {
            double sum = 0.0;
            int cnt = 0;
            if (y > 0) { sum += out.at(y - 1, x); ++cnt; }
            if (y + 1 < image.height) { sum += out.at(y + 1, x); ++cnt; }
            if (x > 0) { sum += out.at(y, x - 1); ++cnt; }
            if (x + 1 < image.width) { sum += out.at(y, x + 1); ++cnt; }
            const double v = sum / cnt;
            max_update = std::max(max_update, std::abs(v - out.at(y, x)));
            out.at(y, x) = v;
        }
        if (max_update < tol) break;
    }
    return out;
}

ColorImage inpaint_diffusion(const ColorImage& image, const BinaryMask& hole, double tol,
                             int max_iters) {
    ColorImage out;
    for (int c = 0; c < 3; ++c)
        out.channels[c] = inpaint_diffusion(image.channels[c], hole, tol, max_iters);
    return out;
}

} // namespace defectforge
