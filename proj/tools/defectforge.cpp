// defectforge CLI: seeded synthesis of surface-defect masks, coarse
// composites, phase-field refinement, batch dataset builds with manifests,
// and the toy bilevel reweighting demo.

#include "defectforge/io/png_io.hpp"
#include "defectforge/pipeline/foreground.hpp"
#include "defectforge/pipeline/pipeline.hpp"
#include "defectforge/pipeline/weights_demo.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace defectforge;

namespace {

std::optional<std::uint64_t> env_seed_override() {
    const char* env = std::getenv("DEFECTFORGE_SEED");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw ParameterError("DEFECTFORGE_SEED must be an unsigned integer");
    return v;
}

int cmd_gen(const std::string& recipe_path, const std::string& image_path,
            const std::string& foreground_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed) {
    GenerationRecipe recipe = load_recipe(recipe_path);
    if (seed) recipe.seed = *seed;
    if (auto env = env_seed_override()) recipe.seed = *env;

    const ColorImage image = read_color_png(image_path);
    const BinaryMask foreground = foreground_path.empty()
                                      ? otsu_foreground(image)
                                      : load_foreground(image_path, foreground_path);

    const GenResult result = run_generate(recipe, image, foreground);
    fs::create_directories(out_dir);
    const std::string mask_path = (fs::path(out_dir) / "mask.png").string();
    const std::string coarse_path = (fs::path(out_dir) / "coarse.png").string();
    write_png(mask_path, result.mask);
    write_png(coarse_path, result.coarse);
    // the resolved recipe (seed included) rides along with the artifacts
    write_json_atomic((fs::path(out_dir) / "recipe_used.json").string(),
                      nlohmann::json(recipe));
    std::cout << "mask:   " << mask_path << "\n"
              << "coarse: " << coarse_path << "\n"
              << "seed:   " << recipe.seed << "\n";
    return 0;
}

int cmd_refine(const std::string& coarse_path, const std::string& orig_path,
               const std::string& mask_path, const std::string& out_dir,
               const RefineSettings& settings, const ReferenceColor& z) {
    const ColorImage coarse = read_color_png(coarse_path);
    const ColorImage orig = read_color_png(orig_path);
    const BinaryMask mask = read_mask_png(mask_path);

    const RefineResult result = run_refine(coarse, orig, mask, settings, z);
    fs::create_directories(out_dir);
    const std::string refined_path = (fs::path(out_dir) / "refined.png").string();
    write_png(refined_path, result.refined);
    write_json_atomic((fs::path(out_dir) / "metrics.json").string(),
                      nlohmann::json(result.metrics));
    std::cout << "refined: " << refined_path << "\n"
              << "metrics: " << (fs::path(out_dir) / "metrics.json").string() << "\n";
    return 0;
}

int cmd_dataset(const std::string& config_path, const std::string& out_dir, int jobs) {
    DatasetConfig config = load_dataset_config(config_path);
    if (auto env = env_seed_override()) config.master_seed = *env;
    const DatasetManifest manifest = run_dataset(config, out_dir, jobs);
    std::cout << "entries:  " << manifest.entries.size() << "\n"
              << "manifest: " << (fs::path(out_dir) / "manifest.json").string() << "\n";
    return 0;
}

int cmd_weights_demo(const std::string& config_path, const std::string& out_path) {
    WeightsDemoConfig config = load_weights_demo_config(config_path);
    if (auto env = env_seed_override()) config.seed = *env;
    const nlohmann::json report = run_weights_demo(config);
    write_json_atomic(out_path, report);
    std::cout << "report: " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"physics-informed surface-defect synthesis toolkit"};
    app.require_subcommand(1);

    // gen
    std::string recipe_path, image_path, foreground_path, out_dir;
    std::optional<std::uint64_t> seed;
    auto* gen = app.add_subcommand("gen", "generate one mask + coarse composite");
    gen->add_option("--recipe", recipe_path, "recipe JSON")->required();
    gen->add_option("--image", image_path, "input PNG")->required();
    gen->add_option("--foreground", foreground_path, "foreground mask PNG (optional)");
    gen->add_option("--out-dir", out_dir, "output directory")->required();
    gen->add_option("--seed", seed, "seed override");

    // refine
    std::string coarse_path, orig_path, mask_path, refine_out;
    RefineSettings settings;
    ReferenceColor z;
    auto* refine = app.add_subcommand("refine", "phase-field refinement of a coarse image");
    refine->add_option("--coarse", coarse_path, "coarse PNG")->required();
    refine->add_option("--orig", orig_path, "original PNG")->required();
    refine->add_option("--mask", mask_path, "defect mask PNG")->required();
    refine->add_option("--out-dir", refine_out, "output directory")->required();
    refine->add_option("--eps2", settings.ac.eps2, "diffusion strength");
    refine->add_option("--dt", settings.ac.dt, "step size");
    refine->add_option("--steps", settings.ac.n_steps, "relaxation steps");
    refine->add_option("--mu", settings.ac.fidelity_mu, "fidelity anchor");
    refine->add_option("--beta", settings.beta, "region-loss anomaly weight");
    refine->add_option("--delta", settings.delta, "region-loss global L2 weight");
    refine->add_flag("--wave-filter", settings.apply_wave_filter,
                     "apply the wavelet-PDE filter after relaxation");
    refine->add_option("--ref-color", z.z, "reference color (3 values in [0,1])")
        ->expected(3);

    // dataset
    std::string dataset_config, dataset_out;
    int jobs = 1;
    auto* dataset = app.add_subcommand("dataset", "batch generation with a manifest");
    dataset->add_option("--config", dataset_config, "dataset config JSON")->required();
    dataset->add_option("--out-dir", dataset_out, "output directory")->required();
    dataset->add_option("--jobs", jobs, "parallel entries");

    // weights-demo
    std::string weights_config, weights_out = "weights_report.json";
    auto* weights = app.add_subcommand("weights-demo", "toy bilevel reweighting loop");
    weights->add_option("--config", weights_config, "demo config JSON")->required();
    weights->add_option("--out", weights_out, "report JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(recipe_path, image_path, foreground_path, out_dir, seed);
        if (refine->parsed()) return cmd_refine(coarse_path, orig_path, mask_path, refine_out, settings, z);
        if (dataset->parsed()) return cmd_dataset(dataset_config, dataset_out, jobs);
        if (weights->parsed()) return cmd_weights_demo(weights_config, weights_out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
