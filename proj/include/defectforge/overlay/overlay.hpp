#pragma once

#include "defectforge/core/field.hpp"

#include <array>

#include <nlohmann/json_fwd.hpp>

namespace defectforge {

struct OverlayParams {
    double base_alpha = 0.85;  // final blend weight of the modified image
    double max_darken = 0.45;  // brightness multiplier at full strength
    std::array<double, 3> max_color_shift{0.06, 0.03, 0.02}; // additive, [0,1] units
    double edge_fade = 4.0;    // px; must be > 0
    // Literal strength field is distance-to-mask, which is 0 (strength 1)
    // at every masked pixel. boundary_fade instead ramps strength with the
    // depth into the defect, fading the rim.
    bool boundary_fade = false;
};

struct ReferenceColor {
    std::array<double, 3> z{0.35, 0.22, 0.18}; // channel values in [0,1]
};

// Darken/color-shift overlay of a defect mask:
//   dist      = distance_transform(1 - mask)
//   strength  = clip(1 - dist/edge_fade, 0, 1)        (literal mode)
//             = clip(distance_transform(mask)/edge_fade, 0, 1)  (boundary_fade)
//   where mask = 1:  v = v*(1 - (1-max_darken)*strength) + shift_c*strength
//   out = (1-base_alpha)*orig + base_alpha*v, clipped to [0,1]
// Pixels with mask = 0 are returned bit-identical to the input.
ColorImage apply_fracture_overlay(const ColorImage& image, const BinaryMask& mask,
                                  const OverlayParams& params);

/// out = image*(1 - strength*mask) + z*(strength*mask), per channel.
ColorImage blend_reference_color(const ColorImage& image, const BinaryMask& mask,
                                 const ReferenceColor& z, double strength);

void to_json(nlohmann::json& j, const OverlayParams& p);
void from_json(const nlohmann::json& j, OverlayParams& p);
void to_json(nlohmann::json& j, const ReferenceColor& z);
void from_json(const nlohmann::json& j, ReferenceColor& z);

} // namespace defectforge
