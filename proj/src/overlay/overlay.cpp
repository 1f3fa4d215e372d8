#include "defectforge/overlay/overlay.hpp"

#include "defectforge/ops/distance.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace defectforge {

ColorImage apply_fracture_overlay(const ColorImage& image, const BinaryMask& mask,
                                  const OverlayParams& params) {
    if (mask.height != image.height() || mask.width != image.width())
        throw DimensionError("apply_fracture_overlay: mask dimensions must match the image");
    if (!(params.edge_fade > 0.0))
        throw ParameterError("apply_fracture_overlay: edge_fade must be > 0");

    const ScalarField dist =
        params.boundary_fade ? distance_transform(mask) : distance_transform(mask.complement());

    ColorImage out = image;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(y, x)) continue; // untouched outside the mask
            const double raw = params.boundary_fade
                                   ? dist.at(y, x) / params.edge_fade
                                   : 1.0 - dist.at(y, x) / params.edge_fade;
            const double strength = std::clamp(raw, 0.0, 1.0);
            const double darken = 1.0 - (1.0 - params.max_darken) * strength;
            for (int c = 0; c < 3; ++c) {
                const double orig = image.channels[c].at(y, x);
                const double mod = orig * darken + params.max_color_shift[c] * strength;
                const double blended =
                    (1.0 - params.base_alpha) * orig + params.base_alpha * mod;
                out.channels[c].at(y, x) = std::clamp(blended, 0.0, 1.0);
            }
        }
    }
    return out;
}

ColorImage blend_reference_color(const ColorImage& image, const BinaryMask& mask,
                                 const ReferenceColor& z, double strength) {
    if (mask.height != image.height() || mask.width != image.width())
        throw DimensionError("blend_reference_color: mask dimensions must match the image");
    ColorImage out = image;
    for (int c = 0; c < 3; ++c) {
        for (int y = 0; y < mask.height; ++y) {
            for (int x = 0; x < mask.width; ++x) {
                const double m = mask.at(y, x) ? strength : 0.0;
                out.channels[c].at(y, x) =
                    image.channels[c].at(y, x) * (1.0 - m) + z.z[c] * m;
            }
        }
    }
    return out;
}

void to_json(nlohmann::json& j, const OverlayParams& p) {
    j = nlohmann::json{{"base_alpha", p.base_alpha},
                       {"max_darken", p.max_darken},
                       {"max_color_shift", p.max_color_shift},
                       {"edge_fade", p.edge_fade},
                       {"boundary_fade", p.boundary_fade}};
}

void from_json(const nlohmann::json& j, OverlayParams& p) {
    if (auto it = j.find("base_alpha"); it != j.end()) it->get_to(p.base_alpha);
    if (auto it = j.find("max_darken"); it != j.end()) it->get_to(p.max_darken);
    if (auto it = j.find("max_color_shift"); it != j.end()) it->get_to(p.max_color_shift);
    if (auto it = j.find("edge_fade"); it != j.end()) it->get_to(p.edge_fade);
    if (auto it = j.find("boundary_fade"); it != j.end()) it->get_to(p.boundary_fade);
}

void to_json(nlohmann::json& j, const ReferenceColor& z) {
    j = nlohmann::json{{"z", z.z}};
}

void from_json(const nlohmann::json& j, ReferenceColor& z) {
    if (auto it = j.find("z"); it != j.end()) it->get_to(z.z);
}

} // namespace defectforge
