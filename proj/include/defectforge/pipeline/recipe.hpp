#pragma once

#include "defectforge/gen/params.hpp"
#include "defectforge/overlay/overlay.hpp"
#include "defectforge/refine/allen_cahn.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

namespace defectforge {

enum class Mechanism { Fracture, Pitting, Warp };

const char* mechanism_name(Mechanism m);
Mechanism mechanism_from_name(const std::string& name);

struct RefineSettings {
    AcParams ac;
    std::array<double, 4> subband_gains{1.0, 0.5, 0.5, 0.25};
    double wave_eps_p = 0.001;
    double beta = 0.5;  // anomaly-region weight in the region loss
    double delta = 0.1; // global L2 weight inside the beta bracket
    bool apply_wave_filter = false; // post-relaxation filter is opt-in
};

// Everything needed to generate one sample: the mechanism, its parameters,
// the overlay/coarse-blend settings, refinement settings, and the seed. The
// JSON form accepts at most the parameter block matching `mechanism`
// ("fracture" | "pitting" | "warp"); a mismatched block is an error.
struct GenerationRecipe {
    Mechanism mechanism = Mechanism::Fracture;
    FractureParams fracture;
    PittingParams pitting;
    WarpParams warp;
    OverlayParams overlay;
    ReferenceColor reference_color;
    double reference_strength = 0.8; // coarse blend toward the reference color
    RefineSettings refine;
    std::uint64_t seed = 0;
    std::string category;
};

void to_json(nlohmann::json& j, const RefineSettings& r);
void from_json(const nlohmann::json& j, RefineSettings& r);
void to_json(nlohmann::json& j, const GenerationRecipe& r);
void from_json(const nlohmann::json& j, GenerationRecipe& r);

// Template form used by dataset configs: all three mechanism blocks may be
// present (the batch runner stamps the mechanism per entry), and the
// "mechanism" key is optional.
GenerationRecipe recipe_template_from_json(const nlohmann::json& j);

GenerationRecipe load_recipe(const std::string& path);

/// FNV-1a 64-bit over the canonical (sorted-key) JSON dump of the recipe.
std::string params_digest(const GenerationRecipe& recipe);

std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

} // namespace defectforge
