#pragma once

#include "defectforge/core/field.hpp"
#include "defectforge/core/rng.hpp"
#include "defectforge/gen/params.hpp"

#include <vector>

namespace defectforge {

/// Closed polygon, vertices as (y, x).
struct Polygon {
    std::vector<std::pair<double, double>> pts;
};

// One deformed polygon around (cy, cx). Stream consumption: radius uniform
// in [polygon_size_min, polygon_size_max], then one angle jitter uniform in
// [-deform_factor, deform_factor] per vertex (12 vertices, fixed).
Polygon sample_pitting_polygon(int cy, int cx, const PittingParams& params, Rng& rng);

/// Even-odd scanline fill at pixel centers, clipped to the frame.
void fill_polygon(BinaryMask& mask, const Polygon& poly);

// Chunky pitting mask. Stages, with the stream consumed in this order:
//  noise seed draw; per polygon: center index, polygon draws, overlap draw
//  (a polygon whose draw forbids overlap is skipped if it would touch the
//  mask built so far); n_growth rounds of boundary growth (one uniform per
//  boundary pixel, row-major), each round clipped to the foreground;
//  morphological close (kernel 3); optional Perlin edge erosion of inner
//  boundary pixels where fractal noise exceeds perlin_threshold; final
//  intersection with the foreground. Empty foreground short-circuits to an
//  all-zero mask.
BinaryMask generate_pitting_mask(const BinaryMask& foreground, const PittingParams& params,
                                 Rng& rng);

} // namespace defectforge
