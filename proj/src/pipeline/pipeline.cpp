#include "defectforge/pipeline/pipeline.hpp"

#include "defectforge/core/rng.hpp"
#include "defectforge/gen/fracture.hpp"
#include "defectforge/gen/pitting.hpp"
#include "defectforge/gen/warp.hpp"
#include "defectforge/ops/perlin.hpp"
#include "defectforge/refine/wave_filter.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace defectforge {

GenResult run_generate(const GenerationRecipe& recipe, const ColorImage& image,
                       const BinaryMask& foreground) {
    if (foreground.height != image.height() || foreground.width != image.width())
        throw DimensionError("run_generate: foreground dimensions must match the image");
    Rng rng(recipe.seed);

    switch (recipe.mechanism) {
        case Mechanism::Fracture: {
            const BinaryMask skeleton = generate_skeleton(foreground, recipe.fracture, rng);
            BinaryMask mask = fracture_mask_from_skeleton(skeleton, recipe.fracture, rng);
            // anomalies live on the object: the thickened band is clipped to
            // the foreground here, the generator itself never sees it
            for (std::size_t i = 0; i < mask.size(); ++i)
                mask.data[i] = mask.data[i] & foreground.data[i];
            return {mask, apply_fracture_overlay(image, mask, recipe.overlay)};
        }
        case Mechanism::Pitting: {
            const BinaryMask mask = generate_pitting_mask(foreground, recipe.pitting, rng);
            return {mask, blend_reference_color(image, mask, recipe.reference_color,
                                                recipe.reference_strength)};
        }
        case Mechanism::Warp: {
            WarpResult warped = tps_warp_region(image, foreground, recipe.warp, rng);
            return {std::move(warped.mask), std::move(warped.image)};
        }
    }
    throw ParameterError("run_generate: unknown mechanism");
}

RefineResult run_refine(const ColorImage& coarse, const ColorImage& orig,
                        const BinaryMask& mask, const RefineSettings& settings,
                        const ReferenceColor& z) {
    if (coarse.height() != orig.height() || coarse.width() != orig.width())
        throw DimensionError("run_refine: coarse/orig dimensions must match");

    const PhaseImage init = color_to_phase(coarse);
    PhaseImage u = ac_relax(init, mask, settings.ac);
    if (settings.apply_wave_filter)
        u = pde_wave_filter(u, settings.wave_eps_p, settings.subband_gains);

    RefineResult out;
    out.metrics = refinement_metrics(u, color_to_phase(orig), init, mask, z, settings.beta,
                                     settings.delta, settings.ac.eps2);
    out.refined = phase_to_color(u);
    return out;
}

ColorImage synthetic_base_image(int height, int width, std::uint64_t seed) {
    const BinaryMask fg = synthetic_base_foreground(height, width);
    Rng rng(seed);
    std::array<double, 3> base{};
    for (auto& b : base) b = rng.uniform(0.45, 0.75);
    const PerlinNoise noise(rng.next());

    ColorImage img(height, width);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double tex = noise.fractal(4.0 * y / height, 4.0 * x / width, 2, 0.15);
            for (int c = 0; c < 3; ++c) {
                const double v = fg.at(y, x) ? base[static_cast<std::size_t>(c)] + tex
                                             : 0.12 + 0.25 * tex;
                img.channels[c].at(y, x) = std::clamp(v, 0.0, 1.0);
            }
        }
    }
    return img;
}

BinaryMask synthetic_base_foreground(int height, int width) {
    BinaryMask fg(height, width);
    const double cy = (height - 1) / 2.0;
    const double cx = (width - 1) / 2.0;
    const double ry = 0.4 * height;
    const double rx = 0.4 * width;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const double dy = (y - cy) / ry;
            const double dx = (x - cx) / rx;
            fg.at(y, x) = dy * dy + dx * dx <= 1.0 ? 1 : 0;
        }
    return fg;
}

void write_json_atomic(const std::string& path, const nlohmann::json& j) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp);
        out << j.dump(2) << '\n';
        if (!out) throw IoError("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

} // namespace defectforge
