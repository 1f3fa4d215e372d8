#include "defectforge/gen/warp.hpp"

#include "defectforge/ops/inpaint.hpp"
#include "defectforge/ops/remap.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace defectforge {

namespace {

bool box_touches_mask(const BinaryMask& mask, const RoiBox& b) {
    for (int y = b.y0; y <= b.y1; ++y)
        for (int x = b.x0; x <= b.x1; ++x)
            if (mask.at(y, x)) return true;
    return false;
}

RoiBox sample_sub_roi(const BinaryMask& mask, const RoiBox& full, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const int sh = std::max(
            1, static_cast<int>(std::lround(full.height() * rng.uniform(0.5, 0.9))));
        const int sw = std::max(
            1, static_cast<int>(std::lround(full.width() * rng.uniform(0.5, 0.9))));
        const int y0 = full.y0 + static_cast<int>(rng.below(
                                     static_cast<std::uint64_t>(full.height() - sh + 1)));
        const int x0 = full.x0 + static_cast<int>(rng.below(
                                     static_cast<std::uint64_t>(full.width() - sw + 1)));
        const RoiBox sub{y0, y0 + sh - 1, x0, x0 + sw - 1};
        if (box_touches_mask(mask, sub)) return sub;
    }
    return full;
}

} // namespace

RoiBox warp_roi_box(const BinaryMask& mask, int margin) {
    int ymin = mask.height, ymax = -1, xmin = mask.width, xmax = -1;
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            if (mask.at(y, x)) {
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
            }
    if (ymax < 0) throw ParameterError("warp_roi_box: empty mask");
    return RoiBox{std::max(0, ymin - margin), std::min(mask.height - 1, ymax + margin),
                  std::max(0, xmin - margin), std::min(mask.width - 1, xmax + margin)};
}

WarpResult tps_warp_apply(const ColorImage& image, const BinaryMask& mask, const RoiBox& box,
                          const TpsModel& model) {
    const int rh = box.height();
    const int rw = box.width();

    ColorImage roi(rh, rw);
    BinaryMask roi_mask(rh, rw);
    for (int y = 0; y < rh; ++y)
        for (int x = 0; x < rw; ++x) {
            for (int c = 0; c < 3; ++c)
                roi.channels[c].at(y, x) = image.channels[c].at(box.y0 + y, box.x0 + x);
            roi_mask.at(y, x) = mask.at(box.y0 + y, box.x0 + x);
        }

    const ColorImage inpainted = inpaint_diffusion(roi, roi_mask);
    const DisplacementField field = tps_eval_field(model, rh, rw);
    const ColorImage warped_img = remap(roi, field, Interp::Bilinear);
    const BinaryMask warped_mask = remap(roi_mask, field, Interp::Nearest);

    ColorImage out_img = image;
    BinaryMask out_mask(mask.height, mask.width);
    for (int y = 0; y < rh; ++y)
        for (int x = 0; x < rw; ++x) {
            const bool on = warped_mask.at(y, x) != 0;
            for (int c = 0; c < 3; ++c)
                out_img.channels[c].at(box.y0 + y, box.x0 + x) =
                    on ? warped_img.channels[c].at(y, x) : inpainted.channels[c].at(y, x);
            out_mask.at(box.y0 + y, box.x0 + x) = on ? 1 : 0;
        }
    return {out_img, out_mask};
}

WarpResult tps_warp_region(const ColorImage& image, const BinaryMask& mask,
                           const WarpParams& params, Rng& rng) {
    if (mask.height != image.height() || mask.width != image.width())
        throw DimensionError("tps_warp_region: mask dimensions must match the image");
    if (mask.empty_mask()) return {image, mask};

    RoiBox box = warp_roi_box(mask, params.margin);
    if (params.partial_roi) box = sample_sub_roi(mask, box, rng);

    std::vector<std::pair<int, int>> mask_pixels;
    for (int y = box.y0; y <= box.y1; ++y)
        for (int x = box.x0; x <= box.x1; ++x)
            if (mask.at(y, x)) mask_pixels.emplace_back(y - box.y0, x - box.x0);
    if (mask_pixels.size() < 3) return {image, mask};

    // distinct control points; duplicates would make the TPS system singular
    const auto want = static_cast<std::size_t>(
        std::min<std::size_t>(mask_pixels.size(), params.num_ctrl_pts));
    std::vector<std::size_t> chosen;
    chosen.reserve(want);
    int guard = 0;
    while (chosen.size() < want && guard < 10000) {
        ++guard;
        const auto idx = rng.below(mask_pixels.size());
        if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end()) chosen.push_back(idx);
    }

    std::vector<std::pair<double, double>> src, disp;
    src.reserve(chosen.size());
    disp.reserve(chosen.size());
    for (auto idx : chosen)
        src.emplace_back(static_cast<double>(mask_pixels[idx].first),
                         static_cast<double>(mask_pixels[idx].second));
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        const double dy = rng.uniform(-params.max_offset, params.max_offset);
        const double dx = rng.uniform(-params.max_offset, params.max_offset);
        disp.emplace_back(dy, dx);
    }

    TpsModel model;
    try {
        model = tps_fit(src, disp);
    } catch (const std::exception&) {
        // collinear control points (thin masks); deformation degenerates
        return {image, mask};
    }
    return tps_warp_apply(image, mask, box, model);
}

} // namespace defectforge
