#include "defectforge/pipeline/weights_demo.hpp"

#include "defectforge/core/field.hpp"
#include "defectforge/core/rng.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace defectforge {

void from_json(const nlohmann::json& j, WeightsDemoConfig& c) {
    auto opt = [&](const char* key, auto& out) {
        if (auto it = j.find(key); it != j.end()) it->get_to(out);
    };
    opt("seed", c.seed);
    opt("epochs", c.epochs);
    opt("inner_lr", c.inner_lr);
    opt("outer_lr", c.outer_lr);
    opt("lambda_sqe", c.lambda_sqe);
    opt("lambda_bi", c.lambda_bi);
    opt("eps", c.eps);
    opt("auc_alpha", c.auc_alpha);
    opt("theta0", c.theta0);
    opt("samples", c.samples);
    opt("targets", c.targets);
    opt("d0", c.d0);
    opt("val_pos", c.val_pos);
    opt("val_neg", c.val_neg);
    if (auto it = j.find("random"); it != j.end()) {
        if (auto f = it->find("samples"); f != it->end()) f->get_to(c.random_samples);
        if (auto f = it->find("dim"); f != it->end()) f->get_to(c.random_dim);
        if (auto f = it->find("val"); f != it->end()) f->get_to(c.random_val);
    }
}

WeightsDemoConfig load_weights_demo_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open weights-demo config: " + path);
    nlohmann::json j;
    in >> j;
    return j.get<WeightsDemoConfig>();
}

namespace {

void synthesize(WeightsDemoConfig& c) {
    Rng rng(c.seed);
    const int dim = c.random_dim;
    auto vec = [&](double lo, double hi) {
        std::vector<double> v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = rng.uniform(lo, hi);
        return v;
    };
    for (int i = 0; i < c.random_samples; ++i) {
        c.samples.push_back(vec(-1.0, 1.0));
        c.targets.push_back(rng.uniform(-1.0, 1.0));
    }
    for (int i = 0; i < c.random_val; ++i) c.val_pos.push_back(vec(0.25, 1.0));
    for (int i = 0; i < c.random_val; ++i) c.val_neg.push_back(vec(-1.0, -0.25));
    if (c.theta0.empty()) c.theta0.assign(static_cast<std::size_t>(dim), 0.0);
}

} // namespace

nlohmann::json run_weights_demo(const WeightsDemoConfig& config_in) {
    WeightsDemoConfig cfg = config_in;
    if (cfg.samples.empty()) {
        if (cfg.random_samples <= 0)
            throw ParameterError("weights-demo: no samples given and no random block");
        synthesize(cfg);
    }
    if (cfg.samples.size() != cfg.targets.size())
        throw ParameterError("weights-demo: one target per sample required");
    if (cfg.val_pos.empty() || cfg.val_neg.empty())
        throw ParameterError("weights-demo: validation sets must be non-empty");
    if (cfg.epochs < 1) throw ParameterError("weights-demo: epochs must be >= 1");
    if (cfg.theta0.empty() && !cfg.samples.empty())
        cfg.theta0.assign(cfg.samples[0].size(), 0.0);

    ToyDetector det;
    det.theta = cfg.theta0;
    det.xs = cfg.samples;
    det.ts = cfg.targets;
    det.inner_lr = cfg.inner_lr;
    det.outer_lr = cfg.outer_lr;

    WeightState state;
    state.lambda_sqe = cfg.lambda_sqe;
    state.lambda_bi = cfg.lambda_bi;
    state.eps = cfg.eps;
    state.data_weights =
        cfg.d0.empty() ? std::vector<double>(cfg.samples.size(), 1.0) : cfg.d0;
    if (state.data_weights.size() != cfg.samples.size())
        throw ParameterError("weights-demo: d0 size must match sample count");

    const AucConfig auc{cfg.auc_alpha};
    nlohmann::json trace = nlohmann::json::array();

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        state.losses = toy_losses(det);
        state.quality = quality_targets(state.losses, state.eps);
        const std::vector<double> w =
            sample_weights(state.quality, state.data_weights, state.lambda_sqe, state.lambda_bi);

        const OuterUpdateResult outer =
            outer_update_weights(det, state, cfg.val_pos, cfg.val_neg, auc);
        state.data_weights = outer.data_weights;

        trace.push_back({{"epoch", epoch},
                         {"q", state.quality},
                         {"d", state.data_weights},
                         {"w", w},
                         {"soft_auc_loss", outer.auc_loss}});

        det.theta = toy_inner_step(det, w);
    }

    return nlohmann::json{{"epochs", trace}, {"final_state", state}, {"theta", det.theta}};
}

} // namespace defectforge
