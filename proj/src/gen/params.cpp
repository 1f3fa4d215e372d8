#include "defectforge/gen/params.hpp"

#include <nlohmann/json.hpp>

namespace defectforge {

namespace {

template <typename T>
void maybe(const nlohmann::json& j, const char* key, T& out) {
    if (auto it = j.find(key); it != j.end()) it->get_to(out);
}

} // namespace

void to_json(nlohmann::json& j, const FractureParams& p) {
    j = nlohmann::json{{"max_steps", p.max_steps},
                       {"step_size", p.step_size},
                       {"branching_prob", p.branching_prob},
                       {"stop_prob", p.stop_prob},
                       {"n_starts", p.n_starts},
                       {"w0", p.w0},
                       {"alpha", p.alpha},
                       {"epsilon", p.epsilon},
                       {"noise_scale", p.noise_scale},
                       {"noise_octaves", p.noise_octaves},
                       {"morph_kernel_size", p.morph_kernel_size},
                       {"sigma_blur", p.sigma_blur},
                       {"blur_threshold", p.blur_threshold}};
}

void from_json(const nlohmann::json& j, FractureParams& p) {
    maybe(j, "max_steps", p.max_steps);
    maybe(j, "step_size", p.step_size);
    maybe(j, "branching_prob", p.branching_prob);
    maybe(j, "stop_prob", p.stop_prob);
    maybe(j, "n_starts", p.n_starts);
    maybe(j, "w0", p.w0);
    maybe(j, "alpha", p.alpha);
    maybe(j, "epsilon", p.epsilon);
    maybe(j, "noise_scale", p.noise_scale);
    maybe(j, "noise_octaves", p.noise_octaves);
    maybe(j, "morph_kernel_size", p.morph_kernel_size);
    maybe(j, "sigma_blur", p.sigma_blur);
    maybe(j, "blur_threshold", p.blur_threshold);
}

void to_json(nlohmann::json& j, const PittingParams& p) {
    j = nlohmann::json{{"k", p.k},
                       {"polygon_size", {p.polygon_size_min, p.polygon_size_max}},
                       {"deform_factor", p.deform_factor},
                       {"overlap_prob", p.overlap_prob},
                       {"n_growth", p.n_growth},
                       {"grow_prob", p.grow_prob},
                       {"perlin_threshold", p.perlin_threshold},
                       {"noise_enabled", p.noise_enabled}};
}

void from_json(const nlohmann::json& j, PittingParams& p) {
    maybe(j, "k", p.k);
    if (auto it = j.find("polygon_size"); it != j.end()) {
        p.polygon_size_min = (*it)[0].get<double>();
        p.polygon_size_max = (*it)[1].get<double>();
    }
    maybe(j, "deform_factor", p.deform_factor);
    maybe(j, "overlap_prob", p.overlap_prob);
    maybe(j, "n_growth", p.n_growth);
    maybe(j, "grow_prob", p.grow_prob);
    maybe(j, "perlin_threshold", p.perlin_threshold);
    maybe(j, "noise_enabled", p.noise_enabled);
}

void to_json(nlohmann::json& j, const WarpParams& p) {
    j = nlohmann::json{{"num_ctrl_pts", p.num_ctrl_pts},
                       {"max_offset", p.max_offset},
                       {"dist_field_radius", p.dist_field_radius},
                       {"inpaint_radius", p.inpaint_radius},
                       {"margin", p.margin},
                       {"partial_roi", p.partial_roi}};
}

void from_json(const nlohmann::json& j, WarpParams& p) {
    maybe(j, "num_ctrl_pts", p.num_ctrl_pts);
    maybe(j, "max_offset", p.max_offset);
    maybe(j, "dist_field_radius", p.dist_field_radius);
    maybe(j, "inpaint_radius", p.inpaint_radius);
    maybe(j, "margin", p.margin);
    maybe(j, "partial_roi", p.partial_roi);
}

} // namespace defectforge
