#pragma once

#include "defectforge/core/field.hpp"
#include "defectforge/core/rng.hpp"
#include "defectforge/gen/params.hpp"
#include "defectforge/ops/tps.hpp"

namespace defectforge {

struct WarpResult {
    ColorImage image;
    BinaryMask mask;
};

/// Inclusive pixel rectangle.
struct RoiBox {
    int y0 = 0, y1 = 0, x0 = 0, x1 = 0;
    int height() const { return y1 - y0 + 1; }
    int width() const { return x1 - x0 + 1; }
};

/// Bounding box of the mask padded by `margin`, clamped to the frame.
/// The mask must be non-empty.
RoiBox warp_roi_box(const BinaryMask& mask, int margin);

// Deterministic core of the warp: inpaints the ROI hole, evaluates the
// model's backward maps over the ROI, remaps the original ROI (bilinear) and
// the ROI mask (nearest), composites the warped object over the inpainted
// background, and places the warped mask into the full frame.
WarpResult tps_warp_apply(const ColorImage& image, const BinaryMask& mask, const RoiBox& box,
                          const TpsModel& model);

// Local thin-plate-spline deformation of the masked region:
//  1. warp_roi_box (with partial_roi, a random sub-rectangle of it: side
//     lengths uniform in [50%, 90%] of the box, resampled until it
//     intersects the mask, at most 100 tries, then the full box);
//  2. num_ctrl_pts distinct control points sampled from mask pixels inside
//     the ROI, displaced per axis by uniform(-max_offset, max_offset);
//  3. TPS fit + tps_warp_apply.
//
// Stream consumption order: [partial-ROI draws,] control-point indices
// (rejection until distinct), then per point dy, dx.
//
// An empty mask returns the inputs unchanged; so do degenerate regions the
// TPS cannot fit (fewer than 3 distinct or collinear control points).
WarpResult tps_warp_region(const ColorImage& image, const BinaryMask& mask,
                           const WarpParams& params, Rng& rng);

} // namespace defectforge
