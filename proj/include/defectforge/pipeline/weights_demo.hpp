#pragma once

#include "defectforge/weights/weights.hpp"

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace defectforge {

// Toy bilevel reweighting run. The dataset is either given explicitly
// (samples/targets/validation sets) or synthesized from `random` settings.
struct WeightsDemoConfig {
    std::uint64_t seed = 0;
    int epochs = 10;
    double inner_lr = 0.05;
    double outer_lr = 1e-4;
    double lambda_sqe = 1.0;
    double lambda_bi = 1.0;
    double eps = 1e-8;
    double auc_alpha = 5.0;

    std::vector<double> theta0;
    std::vector<std::vector<double>> samples;
    std::vector<double> targets;
    std::vector<double> d0; // defaults to ones
    std::vector<std::vector<double>> val_pos;
    std::vector<std::vector<double>> val_neg;

    // synthesized when samples are absent
    int random_samples = 0;
    int random_dim = 3;
    int random_val = 8;
};

void from_json(const nlohmann::json& j, WeightsDemoConfig& c);
WeightsDemoConfig load_weights_demo_config(const std::string& path);

// Per epoch: losses at theta, quality targets, mixed weights, outer d-update
// (theta restored), then one persistent inner training step. The report
// carries the per-epoch q/d/w and soft-AUC trace plus the final WeightState
// record {losses, q, d, lambdas}.
nlohmann::json run_weights_demo(const WeightsDemoConfig& config);

} // namespace defectforge
