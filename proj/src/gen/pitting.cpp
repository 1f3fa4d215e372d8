#include "defectforge/gen/pitting.hpp"

#include "defectforge/ops/morphology.hpp"
#include "defectforge/ops/perlin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace defectforge {

namespace {

constexpr int kVertices = 12;

bool intersects(const BinaryMask& a, const BinaryMask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.data[i] && b.data[i]) return true;
    return false;
}

} // namespace

Polygon sample_pitting_polygon(int cy, int cx, const PittingParams& params, Rng& rng) {
    Polygon poly;
    poly.pts.reserve(kVertices);
    const double radius = rng.uniform(params.polygon_size_min, params.polygon_size_max);
    for (int v = 0; v < kVertices; ++v) {
        const double base = 2.0 * std::numbers::pi * v / kVertices;
        const double jitter = rng.uniform(-params.deform_factor, params.deform_factor);
        const double angle = base + jitter;
        poly.pts.emplace_back(cy + radius * std::sin(angle), cx + radius * std::cos(angle));
    }
    return poly;
}

void fill_polygon(BinaryMask& mask, const Polygon& poly) {
    if (poly.pts.size() < 3) return;
    double ymin = poly.pts[0].first, ymax = poly.pts[0].first;
    for (const auto& [py, px] : poly.pts) {
        ymin = std::min(ymin, py);
        ymax = std::max(ymax, py);
    }
    const int y0 = std::max(0, static_cast<int>(std::ceil(ymin)));
    const int y1 = std::min(mask.height - 1, static_cast<int>(std::floor(ymax)));

    std::vector<double> crossings;
    for (int y = y0; y <= y1; ++y) {
        crossings.clear();
        const double fy = static_cast<double>(y);
        for (std::size_t i = 0; i < poly.pts.size(); ++i) {
            const auto& [ay, ax] = poly.pts[i];
            const auto& [by, bx] = poly.pts[(i + 1) % poly.pts.size()];
            // half-open rule: edge spans [min, max)
            if ((ay <= fy) == (by <= fy)) continue;
            crossings.push_back(ax + (fy - ay) * (bx - ax) / (by - ay));
        }
        std::sort(crossings.begin(), crossings.end());
        for (std::size_t i = 0; i + 1 < crossings.size(); i += 2) {
            const int x0 = std::max(0, static_cast<int>(std::ceil(crossings[i])));
            const int x1 = std::min(mask.width - 1,
                                    static_cast<int>(std::floor(crossings[i + 1])));
            for (int x = x0; x <= x1; ++x) mask.at(y, x) = 1;
        }
    }
}

BinaryMask generate_pitting_mask(const BinaryMask& foreground, const PittingParams& params,
                                 Rng& rng) {
    const int h = foreground.height;
    const int w = foreground.width;
    BinaryMask mask(h, w);

    std::vector<std::pair<int, int>> fg_pixels;
    fg_pixels.reserve(foreground.count());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (foreground.at(y, x)) fg_pixels.emplace_back(y, x);
    if (fg_pixels.empty()) return mask;

    const std::uint64_t noise_seed = rng.next();

    // (A) seed polygons, clipped to the foreground
    for (int i = 0; i < params.k; ++i) {
        const auto [cy, cx] = fg_pixels[rng.below(fg_pixels.size())];
        const Polygon poly = sample_pitting_polygon(cy, cx, params, rng);
        BinaryMask filled(h, w);
        fill_polygon(filled, poly);
        for (std::size_t p = 0; p < filled.size(); ++p)
            if (!foreground.data[p]) filled.data[p] = 0;
        const bool allow_overlap = rng.uniform() < params.overlap_prob;
        if (!allow_overlap && intersects(filled, mask)) continue;
        for (std::size_t p = 0; p < mask.size(); ++p)
            mask.data[p] = mask.data[p] | filled.data[p];
    }

    // (B) stochastic boundary growth, clipped to the foreground each round
    for (int round = 0; round < params.n_growth; ++round) {
        const BinaryMask grown = dilate(mask, 3);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                if (grown.at(y, x) && !mask.at(y, x)) {
                    if (rng.uniform() < params.grow_prob && foreground.at(y, x))
                        mask.at(y, x) = 1;
                }
            }
        }
    }

    // (C) close for coherence
    mask = morph(mask, MorphOp::Close, 3);

    // (D) Perlin edge breakage on the inner boundary
    if (params.noise_enabled) {
        const PerlinNoise noise(noise_seed);
        const BinaryMask core = erode(mask, 3);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                if (mask.at(y, x) && !core.at(y, x)) {
                    const double nu = noise.fractal(static_cast<double>(y) / h,
                                                    static_cast<double>(x) / w, 2, 1.0);
                    if (nu > params.perlin_threshold) mask.at(y, x) = 0;
                }
            }
        }
    }

    for (std::size_t p = 0; p < mask.size(); ++p)
        if (!foreground.data[p]) mask.data[p] = 0;
    return mask;
}

} // namespace defectforge
