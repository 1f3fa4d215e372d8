#include "defectforge/gen/fracture.hpp"

#include "defectforge/ops/distance.hpp"
#include "defectforge/ops/filters.hpp"
#include "defectforge/ops/morphology.hpp"
#include "defectforge/ops/perlin.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <vector>

namespace defectforge {

namespace {

struct Frontier {
    double y, x;
    double dy, dx;
    int steps;
};

} // namespace

BinaryMask generate_skeleton(const BinaryMask& foreground, const FractureParams& params,
                             Rng& rng) {
    const int h = foreground.height;
    const int w = foreground.width;
    BinaryMask skeleton(h, w);

    std::vector<std::pair<int, int>> fg_pixels;
    fg_pixels.reserve(foreground.count());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (foreground.at(y, x)) fg_pixels.emplace_back(y, x);
    if (fg_pixels.empty()) return skeleton;

    std::deque<Frontier> frontiers;
    for (int s = 0; s < params.n_starts; ++s) {
        const auto idx = rng.below(fg_pixels.size());
        const auto [y0, x0] = fg_pixels[idx];
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        frontiers.push_back({static_cast<double>(y0), static_cast<double>(x0),
                             std::sin(angle), std::cos(angle), params.max_steps});
        skeleton.at(y0, x0) = 1;
    }

    while (!frontiers.empty()) {
        Frontier f = frontiers.front();
        frontiers.pop_front();
        if (f.steps <= 0) continue;

        const double y_new = f.y + f.dy * params.step_size;
        const double x_new = f.x + f.dx * params.step_size;
        const auto yi = static_cast<long>(std::lround(y_new));
        const auto xi = static_cast<long>(std::lround(x_new));
        if (yi < 0 || yi >= h || xi < 0 || xi >= w ||
            !foreground.at(static_cast<int>(yi), static_cast<int>(xi)))
            continue; // frontier left the object: terminate it

        skeleton.at(static_cast<int>(yi), static_cast<int>(xi)) = 1;
        const int steps = f.steps - 1;

        if (rng.uniform() < params.stop_prob) continue;
        frontiers.push_back({y_new, x_new, f.dy, f.dx, steps});

        if (rng.uniform() < params.branching_prob) {
            const double da = rng.uniform(-std::numbers::pi / 4.0, std::numbers::pi / 4.0);
            // rotate the direction; deliberately no renormalization
            const double ndy = f.dy * std::cos(da) - f.dx * std::sin(da);
            const double ndx = f.dy * std::sin(da) + f.dx * std::cos(da);
            frontiers.push_back({y_new, x_new, ndy, ndx, steps / 2});
        }
    }
    return skeleton;
}

BinaryMask fracture_threshold_stage(const BinaryMask& skeleton, const FractureParams& params,
                                    std::uint64_t noise_seed) {
    const int h = skeleton.height;
    const int w = skeleton.width;
    const ScalarField dist = distance_transform(skeleton.complement());
    const PerlinNoise noise(noise_seed);

    BinaryMask mask(h, w);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double d = dist.at(y, x);
            const double wt = params.w0 * std::exp(-params.alpha * d) + params.epsilon;
            const double nu = noise.fractal(static_cast<double>(y) / h,
                                            static_cast<double>(x) / w,
                                            params.noise_octaves, params.noise_scale);
            if (d + nu < wt) mask.at(y, x) = 1;
        }
    }
    return mask;
}

BinaryMask fracture_mask_from_skeleton(const BinaryMask& skeleton, const FractureParams& params,
                                       Rng& rng) {
    const std::uint64_t noise_seed = rng.next();
    BinaryMask mask = fracture_threshold_stage(skeleton, params, noise_seed);
    mask = morph(mask, MorphOp::Close, params.morph_kernel_size);
    mask = morph(mask, MorphOp::Open, params.morph_kernel_size);

    ScalarField soft(mask.height, mask.width);
    for (std::size_t i = 0; i < mask.size(); ++i) soft.data[i] = mask.data[i];
    soft = gaussian_blur(soft, params.sigma_blur);

    BinaryMask out(mask.height, mask.width);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.data[i] = soft.data[i] > params.blur_threshold ? 1 : 0;
    return out;
}

} // namespace defectforge
