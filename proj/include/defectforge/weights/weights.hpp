#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace defectforge {

// Per-sample reweighting state: losses l_i, quality targets q_i in [0,1],
// learnable data weights d_i, and the mixing coefficients.
struct WeightState {
    std::vector<double> losses;
    std::vector<double> quality;
    std::vector<double> data_weights;
    double lambda_sqe = 1.0;
    double lambda_bi = 1.0;
    double eps = 1e-8;
};

// Linear least-squares stand-in for the detector: per-sample loss
// l_i(theta) = (theta.x_i - t_i)^2, so every quantity the weighting calculus
// needs is closed-form.
struct ToyDetector {
    std::vector<double> theta;
    std::vector<std::vector<double>> xs;
    std::vector<double> ts;
    double inner_lr = 0.01;
    double outer_lr = 1e-4;
};

struct AucConfig {
    double alpha = 50.0; // sharpness of the logistic pairwise relaxation
};

/// y_i = 1 - (l_i - min l) / (max l - min l + eps); at least one loss, eps > 0.
std::vector<double> quality_targets(const std::vector<double>& losses, double eps);

// w_i = lambda_sqe * q_i + lambda_bi * d_i. With lambda_sqe = 0 the quality
// path is off and the rule falls back to uniform weights of 1.
std::vector<double> sample_weights(const std::vector<double>& q, const std::vector<double>& d,
                                   double lambda_sqe, double lambda_bi);

/// 1 - (1/(N+ N-)) * sum_ij sigmoid(alpha * (pos_i - neg_j)); both sides
/// non-empty, alpha > 0.
double soft_auc_loss(const std::vector<double>& pos_scores,
                     const std::vector<double>& neg_scores, double alpha);

/// Per-sample losses l_i(theta) for the current parameters.
std::vector<double> toy_losses(const ToyDetector& det);

/// theta' = theta - inner_lr * sum_i w_i * 2*(theta.x_i - t_i)*x_i.
std::vector<double> toy_inner_step(const ToyDetector& det, const std::vector<double>& weights);

struct OuterUpdateResult {
    std::vector<double> data_weights; // updated d
    double auc_loss = 0.0;            // validation soft-AUC loss at theta'
};

// One outer-loop step: theta' from toy_inner_step with weights
// sample_weights(q, d, ...); validation scores s_j = theta'.x_j; the chain
//   dL/dd_i = grad_theta' L . (-inner_lr * lambda_bi * grad_theta l_i)
// updates d_i <- d_i - outer_lr * dL/dd_i. theta' is discarded; det.theta is
// never modified. With lambda_sqe = 0 the inner weights are the uniform
// fallback and carry no d-dependence, so d is returned unchanged.
OuterUpdateResult outer_update_weights(const ToyDetector& det, const WeightState& state,
                                       const std::vector<std::vector<double>>& val_pos,
                                       const std::vector<std::vector<double>>& val_neg,
                                       const AucConfig& auc);

// Validation-split rule: indices of the ceil(fraction * n) scores with the
// highest Bernoulli predictive entropy (ties broken toward lower index).
// Scores are clamped to (0,1) for the entropy evaluation.
std::vector<std::size_t> entropy_val_selector(const std::vector<double>& scores,
                                              double fraction = 0.05);

void to_json(nlohmann::json& j, const WeightState& s);
void from_json(const nlohmann::json& j, WeightState& s);

} // namespace defectforge
