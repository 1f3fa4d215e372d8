#pragma once

#include <nlohmann/json_fwd.hpp>

namespace defectforge {

// Parameter bundles for the three mechanism generators. Field names follow
// the documented parameter tables so config files read like the docs;
// defaults sit inside the recommended ranges.

struct FractureParams {
    int max_steps = 400;           // 200..800
    double step_size = 1.5;        // 1..2 px
    double branching_prob = 0.03;  // 0.01..0.05
    double stop_prob = 0.02;       // 0.01..0.05
    int n_starts = 2;              // 1..3
    double w0 = 1.5;               // 0.5..2.5 px
    double alpha = 0.015;          // 0.01..0.02 1/px
    double epsilon = 0.6;          // 0.3..1.0 px
    double noise_scale = 0.2;      // 0.1..0.3
    int noise_octaves = 2;         // 1..3
    int morph_kernel_size = 3;     // odd, 1..3
    double sigma_blur = 1.0;       // fixed 1.0
    double blur_threshold = 0.3;   // post-blur binarization level
};

struct PittingParams {
    int k = 3;                      // 1..5 polygons
    double polygon_size_min = 15.0; // radius px, 15..65
    double polygon_size_max = 65.0;
    double deform_factor = 0.2;     // 0.1..0.3 rad vertex-angle jitter
    double overlap_prob = 0.85;     // 0.7..1.0
    int n_growth = 20;              // 8..50 boundary-growth rounds
    double grow_prob = 0.5;         // 0.3..0.7
    double perlin_threshold = 0.3;  // edge-breakage threshold rho
    bool noise_enabled = true;
};

struct WarpParams {
    int num_ctrl_pts = 8;           // 3..12
    double max_offset = 15.0;       // 8..30 px
    double dist_field_radius = 50.0; // 30..80; kept for schema compatibility,
                                     // the r^2 log r kernel has no shape knob
    int inpaint_radius = 5;         // 3..10
    int margin = 20;                // 10..30 px around the bounding box
    bool partial_roi = false;
};

void to_json(nlohmann::json& j, const FractureParams& p);
void from_json(const nlohmann::json& j, FractureParams& p);
void to_json(nlohmann::json& j, const PittingParams& p);
void from_json(const nlohmann::json& j, PittingParams& p);
void to_json(nlohmann::json& j, const WarpParams& p);
void from_json(const nlohmann::json& j, WarpParams& p);

} // namespace defectforge
