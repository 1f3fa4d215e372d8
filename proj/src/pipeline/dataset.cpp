#include "defectforge/pipeline/pipeline.hpp"

#include "defectforge/core/rng.hpp"
#include "defectforge/io/png_io.hpp"
#include "defectforge/pipeline/foreground.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

namespace defectforge {

namespace fs = std::filesystem;

void to_json(nlohmann::json& j, const ManifestEntry& e) {
    j = nlohmann::json{{"id", e.id},
                       {"category", e.category},
                       {"mechanism", e.mechanism},
                       {"seed", e.seed},
                       {"input_path", e.input_path},
                       {"mask_path", e.mask_path},
                       {"coarse_path", e.coarse_path},
                       {"refined_path", e.refined_path},
                       {"params_digest", e.params_digest},
                       {"metrics", e.metrics}};
}

void from_json(const nlohmann::json& j, ManifestEntry& e) {
    j.at("id").get_to(e.id);
    j.at("category").get_to(e.category);
    j.at("mechanism").get_to(e.mechanism);
    j.at("seed").get_to(e.seed);
    j.at("input_path").get_to(e.input_path);
    j.at("mask_path").get_to(e.mask_path);
    j.at("coarse_path").get_to(e.coarse_path);
    j.at("refined_path").get_to(e.refined_path);
    j.at("params_digest").get_to(e.params_digest);
    j.at("metrics").get_to(e.metrics);
}

void to_json(nlohmann::json& j, const DatasetManifest& m) {
    j = nlohmann::json{{"master_seed", m.master_seed}, {"entries", m.entries}};
}

void from_json(const nlohmann::json& j, DatasetManifest& m) {
    j.at("master_seed").get_to(m.master_seed);
    j.at("entries").get_to(m.entries);
}

void to_json(nlohmann::json& j, const CategoryConfig& c) {
    j = nlohmann::json{{"name", c.name},
                       {"image", c.image_path},
                       {"foreground", c.foreground_path}};
}

void from_json(const nlohmann::json& j, CategoryConfig& c) {
    j.at("name").get_to(c.name);
    if (auto it = j.find("image"); it != j.end()) it->get_to(c.image_path);
    if (auto it = j.find("foreground"); it != j.end()) it->get_to(c.foreground_path);
}

void to_json(nlohmann::json& j, const DatasetConfig& c) {
    j = nlohmann::json{{"master_seed", c.master_seed},
                       {"height", c.height},
                       {"width", c.width},
                       {"categories", c.categories},
                       {"counts",
                        {{"fracture", c.count_fracture},
                         {"pitting", c.count_pitting},
                         {"warp", c.count_warp}}},
                       {"base", c.base}};
}

void from_json(const nlohmann::json& j, DatasetConfig& c) {
    if (auto it = j.find("master_seed"); it != j.end()) it->get_to(c.master_seed);
    if (auto it = j.find("height"); it != j.end()) it->get_to(c.height);
    if (auto it = j.find("width"); it != j.end()) it->get_to(c.width);
    j.at("categories").get_to(c.categories);
    const auto& counts = j.at("counts");
    if (auto it = counts.find("fracture"); it != counts.end()) it->get_to(c.count_fracture);
    if (auto it = counts.find("pitting"); it != counts.end()) it->get_to(c.count_pitting);
    if (auto it = counts.find("warp"); it != counts.end()) it->get_to(c.count_warp);
    if (auto it = j.find("base"); it != j.end()) c.base = recipe_template_from_json(*it);
}

DatasetConfig load_dataset_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset config: " + path);
    nlohmann::json j;
    in >> j;
    return j.get<DatasetConfig>();
}

namespace {

struct EntrySpec {
    std::size_t index; // position in the global entry order (seed fan-out)
    std::size_t category;
    Mechanism mechanism;
    int sample;
};

struct CategoryData {
    ColorImage image;
    BinaryMask foreground;
    std::string input_rel;
};

int mechanism_count(const DatasetConfig& cfg, Mechanism m) {
    switch (m) {
        case Mechanism::Fracture: return cfg.count_fracture;
        case Mechanism::Pitting: return cfg.count_pitting;
        case Mechanism::Warp: return cfg.count_warp;
    }
    return 0;
}

} // namespace

DatasetManifest run_dataset(const DatasetConfig& config, const std::string& out_dir, int jobs) {
    if (config.categories.empty())
        throw ParameterError("run_dataset: at least one category required");
    if (jobs < 1) throw ParameterError("run_dataset: jobs must be >= 1");

    fs::create_directories(out_dir);

    // Per-category inputs are prepared serially so parallel runs see
    // identical bytes on disk before any entry starts.
    std::vector<CategoryData> cats;
    cats.reserve(config.categories.size());
    for (const auto& cat : config.categories) {
        CategoryData data;
        if (cat.image_path.empty()) {
            const std::uint64_t cat_seed =
                child_seed(config.master_seed ^ fnv1a64(cat.name), 0);
            data.image = synthetic_base_image(config.height, config.width, cat_seed);
            data.foreground = synthetic_base_foreground(config.height, config.width);
        } else {
            data.image = read_color_png(cat.image_path);
            data.foreground = cat.foreground_path.empty()
                                  ? otsu_foreground(data.image)
                                  : load_foreground(cat.image_path, cat.foreground_path);
        }
        data.input_rel = cat.name + "/input.png";
        fs::create_directories(fs::path(out_dir) / cat.name);
        write_png((fs::path(out_dir) / data.input_rel).string(), data.image);
        cats.push_back(std::move(data));
    }

    std::vector<EntrySpec> specs;
    std::size_t index = 0;
    for (std::size_t c = 0; c < config.categories.size(); ++c) {
        for (Mechanism m : {Mechanism::Fracture, Mechanism::Pitting, Mechanism::Warp}) {
            const int n = mechanism_count(config, m);
            for (int s = 0; s < n; ++s) specs.push_back({index++, c, m, s});
        }
    }

    for (const auto& spec : specs) {
        const fs::path dir = fs::path(out_dir) / config.categories[spec.category].name /
                             mechanism_name(spec.mechanism);
        fs::create_directories(dir);
    }

    std::vector<ManifestEntry> entries(specs.size());
    std::vector<std::string> errors(specs.size());

    auto process = [&](const EntrySpec& spec) {
        const auto& cat = config.categories[spec.category];
        const auto& data = cats[spec.category];

        GenerationRecipe recipe = config.base;
        recipe.mechanism = spec.mechanism;
        recipe.category = cat.name;
        recipe.seed = child_seed(config.master_seed, spec.index);

        const GenResult gen = run_generate(recipe, data.image, data.foreground);
        const RefineResult refined = run_refine(gen.coarse, data.image, gen.mask,
                                                recipe.refine, recipe.reference_color);

        char tag[16];
        std::snprintf(tag, sizeof(tag), "%04d", spec.sample);
        const std::string rel_base =
            cat.name + "/" + mechanism_name(spec.mechanism) + "/" + tag;

        ManifestEntry e;
        e.id = cat.name + "-" + mechanism_name(spec.mechanism) + "-" + tag;
        e.category = cat.name;
        e.mechanism = mechanism_name(spec.mechanism);
        e.seed = recipe.seed;
        e.input_path = data.input_rel;
        e.mask_path = rel_base + "_mask.png";
        e.coarse_path = rel_base + "_coarse.png";
        e.refined_path = rel_base + "_refined.png";
        e.params_digest = params_digest(recipe);
        e.metrics = refined.metrics;

        write_png((fs::path(out_dir) / e.mask_path).string(), gen.mask);
        write_png((fs::path(out_dir) / e.coarse_path).string(), gen.coarse);
        write_png((fs::path(out_dir) / e.refined_path).string(), refined.refined);
        entries[spec.index] = std::move(e);
    };

    if (jobs == 1) {
        for (const auto& spec : specs) {
            try {
                process(spec);
            } catch (const std::exception& ex) {
                errors[spec.index] = ex.what();
            }
        }
    } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= specs.size()) break;
                try {
                    process(specs[i]);
                } catch (const std::exception& ex) {
                    errors[i] = ex.what();
                }
            }
        };
        std::vector<std::thread> pool;
        const int n_threads = std::min<int>(jobs, static_cast<int>(specs.size()));
        pool.reserve(static_cast<std::size_t>(std::max(1, n_threads)));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    DatasetManifest manifest;
    manifest.master_seed = config.master_seed;
    std::string failure_log;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!errors[i].empty()) {
            failure_log += "entry " + std::to_string(i) + ": " + errors[i] + "\n";
            continue;
        }
        manifest.entries.push_back(std::move(entries[i]));
    }

    write_json_atomic((fs::path(out_dir) / "manifest.json").string(), manifest);

    if (!failure_log.empty()) {
        std::ofstream log(fs::path(out_dir) / "errors.log");
        log << failure_log;
        throw NumericError("run_dataset: some entries failed:\n" + failure_log);
    }
    return manifest;
}

} // namespace defectforge
