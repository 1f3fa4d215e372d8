#pragma once

#include "defectforge/pipeline/recipe.hpp"
#include "defectforge/refine/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace defectforge {

struct GenResult {
    BinaryMask mask;
    ColorImage coarse;
};

// One sample from a recipe: dispatches to the mechanism generator, then to
// the mechanism's compositor (fracture -> darken/shift overlay, pitting ->
// reference-color blend, warp -> warped image directly). Deterministic in
// (inputs, recipe, seed); the stream is Rng(recipe.seed).
GenResult run_generate(const GenerationRecipe& recipe, const ColorImage& image,
                       const BinaryMask& foreground);

struct RefineResult {
    ColorImage refined;
    RefineMetrics metrics;
};

// Phase-space relaxation of the coarse image (anchored to it outside the
// mask) plus the metric bundle computed against `orig` and the coarse image.
// With settings.apply_wave_filter the wavelet-PDE filter runs after the
// relaxation.
RefineResult run_refine(const ColorImage& coarse, const ColorImage& orig,
                        const BinaryMask& mask, const RefineSettings& settings,
                        const ReferenceColor& z);

// --- batch dataset ----------------------------------------------------------

struct CategoryConfig {
    std::string name;
    std::string image_path;      // empty -> deterministic synthetic base image
    std::string foreground_path; // empty -> Otsu fallback / synthetic ellipse
};

struct DatasetConfig {
    std::uint64_t master_seed = 0;
    int height = 512; // used for synthetic base images
    int width = 512;
    std::vector<CategoryConfig> categories;
    int count_fracture = 0;
    int count_pitting = 0;
    int count_warp = 0;
    GenerationRecipe base; // parameter template; mechanism/seed set per entry
};

struct ManifestEntry {
    std::string id;
    std::string category;
    std::string mechanism;
    std::uint64_t seed = 0;
    std::string input_path;
    std::string mask_path;
    std::string coarse_path;
    std::string refined_path;
    std::string params_digest;
    RefineMetrics metrics;
};

struct DatasetManifest {
    std::uint64_t master_seed = 0;
    std::vector<ManifestEntry> entries;
};

void to_json(nlohmann::json& j, const ManifestEntry& e);
void from_json(const nlohmann::json& j, ManifestEntry& e);
void to_json(nlohmann::json& j, const DatasetManifest& m);
void from_json(const nlohmann::json& j, DatasetManifest& m);

void to_json(nlohmann::json& j, const CategoryConfig& c);
void from_json(const nlohmann::json& j, CategoryConfig& c);
void to_json(nlohmann::json& j, const DatasetConfig& c);
void from_json(const nlohmann::json& j, DatasetConfig& c);

DatasetConfig load_dataset_config(const std::string& path);

// Generates counts x mechanisms x categories samples under out_dir
// (<category>/<mechanism>/NNNN_{mask,coarse,refined}.png). Entry k uses the
// child stream child_seed(master_seed, k); entries are independent, so jobs
// may run them concurrently with identical results. The manifest is written
// last, atomically (temp file + rename), and contains no timestamps. Failed
// entries are logged, skipped in the manifest, and make the run throw after
// all entries finish.
DatasetManifest run_dataset(const DatasetConfig& config, const std::string& out_dir,
                            int jobs = 1);

/// Deterministic synthetic base: smooth two-octave texture on a bright
/// centered ellipse over a dark background.
ColorImage synthetic_base_image(int height, int width, std::uint64_t seed);
BinaryMask synthetic_base_foreground(int height, int width);

/// Writes JSON with sorted keys, 2-space indent, newline at EOF; temp file +
/// rename so readers never see a partial document.
void write_json_atomic(const std::string& path, const nlohmann::json& j);

} // namespace defectforge
