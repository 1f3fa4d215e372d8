#include "defectforge/pipeline/recipe.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace defectforge {

const char* mechanism_name(Mechanism m) {
    switch (m) {
        case Mechanism::Fracture: return "fracture";
        case Mechanism::Pitting: return "pitting";
        case Mechanism::Warp: return "warp";
    }
    return "?";
}

Mechanism mechanism_from_name(const std::string& name) {
    if (name == "fracture") return Mechanism::Fracture;
    if (name == "pitting") return Mechanism::Pitting;
    if (name == "warp") return Mechanism::Warp;
    throw ParameterError("unknown mechanism: " + name);
}

void to_json(nlohmann::json& j, const RefineSettings& r) {
    j = nlohmann::json{{"ac", r.ac},
                       {"subband_gains", r.subband_gains},
                       {"wave_eps_p", r.wave_eps_p},
                       {"beta", r.beta},
                       {"delta", r.delta},
                       {"apply_wave_filter", r.apply_wave_filter}};
}

void from_json(const nlohmann::json& j, RefineSettings& r) {
    if (auto it = j.find("ac"); it != j.end()) it->get_to(r.ac);
    if (auto it = j.find("subband_gains"); it != j.end()) it->get_to(r.subband_gains);
    if (auto it = j.find("wave_eps_p"); it != j.end()) it->get_to(r.wave_eps_p);
    if (auto it = j.find("beta"); it != j.end()) it->get_to(r.beta);
    if (auto it = j.find("delta"); it != j.end()) it->get_to(r.delta);
    if (auto it = j.find("apply_wave_filter"); it != j.end()) it->get_to(r.apply_wave_filter);
}

void to_json(nlohmann::json& j, const GenerationRecipe& r) {
    j = nlohmann::json{{"mechanism", mechanism_name(r.mechanism)},
                       {"overlay", r.overlay},
                       {"reference_color", r.reference_color},
                       {"reference_strength", r.reference_strength},
                       {"refine", r.refine},
                       {"seed", r.seed},
                       {"category", r.category}};
    switch (r.mechanism) {
        case Mechanism::Fracture: j["fracture"] = r.fracture; break;
        case Mechanism::Pitting: j["pitting"] = r.pitting; break;
        case Mechanism::Warp: j["warp"] = r.warp; break;
    }
}

namespace {

void recipe_fields_from_json(const nlohmann::json& j, GenerationRecipe& r);

} // namespace

void from_json(const nlohmann::json& j, GenerationRecipe& r) {
    r.mechanism = mechanism_from_name(j.at("mechanism").get<std::string>());
    for (const char* block : {"fracture", "pitting", "warp"}) {
        if (j.contains(block) && block != std::string(mechanism_name(r.mechanism)))
            throw ParameterError(std::string("recipe: parameter block '") + block +
                                 "' does not match mechanism '" +
                                 mechanism_name(r.mechanism) + "'");
    }
    recipe_fields_from_json(j, r);
}

GenerationRecipe recipe_template_from_json(const nlohmann::json& j) {
    GenerationRecipe r;
    if (auto it = j.find("mechanism"); it != j.end())
        r.mechanism = mechanism_from_name(it->get<std::string>());
    recipe_fields_from_json(j, r);
    return r;
}

namespace {

void recipe_fields_from_json(const nlohmann::json& j, GenerationRecipe& r) {
    if (auto it = j.find("fracture"); it != j.end()) it->get_to(r.fracture);
    if (auto it = j.find("pitting"); it != j.end()) it->get_to(r.pitting);
    if (auto it = j.find("warp"); it != j.end()) it->get_to(r.warp);
    if (auto it = j.find("overlay"); it != j.end()) it->get_to(r.overlay);
    if (auto it = j.find("reference_color"); it != j.end()) it->get_to(r.reference_color);
    if (auto it = j.find("reference_strength"); it != j.end()) it->get_to(r.reference_strength);
    if (auto it = j.find("refine"); it != j.end()) it->get_to(r.refine);
    if (auto it = j.find("seed"); it != j.end()) it->get_to(r.seed);
    if (auto it = j.find("category"); it != j.end()) it->get_to(r.category);
}

} // namespace

GenerationRecipe load_recipe(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open recipe: " + path);
    nlohmann::json j;
    in >> j;
    return j.get<GenerationRecipe>();
}

std::string params_digest(const GenerationRecipe& recipe) {
    const nlohmann::json j = recipe;
    return hex64(fnv1a64(j.dump()));
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

} // namespace defectforge
