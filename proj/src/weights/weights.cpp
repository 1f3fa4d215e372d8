#include "defectforge/weights/weights.hpp"

#include "defectforge/core/field.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace defectforge {

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void check_samples(const ToyDetector& det) {
    if (det.xs.size() != det.ts.size())
        throw ParameterError("ToyDetector: one target per sample required");
    for (const auto& x : det.xs)
        if (x.size() != det.theta.size())
            throw ParameterError("ToyDetector: feature dimension mismatch");
}

} // namespace

std::vector<double> quality_targets(const std::vector<double>& losses, double eps) {
    if (losses.empty()) throw ParameterError("quality_targets: at least one loss required");
    if (!(eps > 0.0)) throw ParameterError("quality_targets: eps must be > 0");
    const auto [mn_it, mx_it] = std::minmax_element(losses.begin(), losses.end());
    const double mn = *mn_it;
    const double mx = *mx_it;
    std::vector<double> y(losses.size());
    for (std::size_t i = 0; i < losses.size(); ++i)
        y[i] = 1.0 - (losses[i] - mn) / (mx - mn + eps);
    return y;
}

std::vector<double> sample_weights(const std::vector<double>& q, const std::vector<double>& d,
                                   double lambda_sqe, double lambda_bi) {
    if (q.size() != d.size())
        throw ParameterError("sample_weights: q and d must have equal length");
    std::vector<double> w(q.size());
    if (lambda_sqe == 0.0) {
        std::fill(w.begin(), w.end(), 1.0); // uniform fallback
        return w;
    }
    for (std::size_t i = 0; i < q.size(); ++i) w[i] = lambda_sqe * q[i] + lambda_bi * d[i];
    return w;
}

double soft_auc_loss(const std::vector<double>& pos_scores,
                     const std::vector<double>& neg_scores, double alpha) {
    if (pos_scores.empty() || neg_scores.empty())
        throw ParameterError("soft_auc_loss: both score sets must be non-empty");
    if (!(alpha > 0.0)) throw ParameterError("soft_auc_loss: alpha must be > 0");
    double sum = 0.0;
    for (double p : pos_scores)
        for (double n : neg_scores) sum += sigmoid(alpha * (p - n));
    return 1.0 - sum / (static_cast<double>(pos_scores.size()) *
                        static_cast<double>(neg_scores.size()));
}

std::vector<double> toy_losses(const ToyDetector& det) {
    check_samples(det);
    std::vector<double> l(det.xs.size());
    for (std::size_t i = 0; i < det.xs.size(); ++i) {
        const double r = dot(det.theta, det.xs[i]) - det.ts[i];
        l[i] = r * r;
    }
    return l;
}

std::vector<double> toy_inner_step(const ToyDetector& det, const std::vector<double>& weights) {
    check_samples(det);
    if (weights.size() != det.xs.size())
        throw ParameterError("toy_inner_step: one weight per sample required");
    std::vector<double> grad(det.theta.size(), 0.0);
    for (std::size_t i = 0; i < det.xs.size(); ++i) {
        const double r = dot(det.theta, det.xs[i]) - det.ts[i];
        const double coeff = weights[i] * 2.0 * r;
        for (std::size_t k = 0; k < grad.size(); ++k) grad[k] += coeff * det.xs[i][k];
    }
    std::vector<double> theta_next(det.theta.size());
    for (std::size_t k = 0; k < theta_next.size(); ++k)
        theta_next[k] = det.theta[k] - det.inner_lr * grad[k];
    return theta_next;
}

OuterUpdateResult outer_update_weights(const ToyDetector& det, const WeightState& state,
                                       const std::vector<std::vector<double>>& val_pos,
                                       const std::vector<std::vector<double>>& val_neg,
                                       const AucConfig& auc) {
    check_samples(det);
    if (val_pos.empty() || val_neg.empty())
        throw ParameterError("outer_update_weights: validation sets must be non-empty");
    if (state.quality.size() != det.xs.size() || state.data_weights.size() != det.xs.size())
        throw ParameterError("outer_update_weights: state size must match sample count");
    if (!(auc.alpha > 0.0)) throw ParameterError("outer_update_weights: alpha must be > 0");

    const std::vector<double> w =
        sample_weights(state.quality, state.data_weights, state.lambda_sqe, state.lambda_bi);
    const std::vector<double> theta_prime = toy_inner_step(det, w);

    std::vector<double> pos(val_pos.size()), neg(val_neg.size());
    for (std::size_t j = 0; j < val_pos.size(); ++j) pos[j] = dot(theta_prime, val_pos[j]);
    for (std::size_t j = 0; j < val_neg.size(); ++j) neg[j] = dot(theta_prime, val_neg[j]);

    OuterUpdateResult out;
    out.auc_loss = soft_auc_loss(pos, neg, auc.alpha);
    out.data_weights = state.data_weights;

    // Uniform-fallback weights carry no d-dependence: gradient is identically 0.
    if (state.lambda_sqe == 0.0 || state.lambda_bi == 0.0) return out;

    // grad_theta' of L = 1 - mean sigmoid(alpha*(s+ - s-)):
    //   -(alpha / (N+ N-)) * sum_ij s'(z_ij) * (x+_i - x-_j)
    std::vector<double> gl(theta_prime.size(), 0.0);
    const double norm =
        static_cast<double>(val_pos.size()) * static_cast<double>(val_neg.size());
    for (std::size_t i = 0; i < val_pos.size(); ++i) {
        for (std::size_t j = 0; j < val_neg.size(); ++j) {
            const double z = auc.alpha * (pos[i] - neg[j]);
            const double s = sigmoid(z);
            const double coeff = -(auc.alpha / norm) * s * (1.0 - s);
            for (std::size_t k = 0; k < gl.size(); ++k)
                gl[k] += coeff * (val_pos[i][k] - val_neg[j][k]);
        }
    }

    // dtheta'/dd_i = -inner_lr * lambda_bi * grad_theta l_i(theta)
    for (std::size_t i = 0; i < det.xs.size(); ++i) {
        const double r = dot(det.theta, det.xs[i]) - det.ts[i];
        double gthetas = 0.0;
        for (std::size_t k = 0; k < gl.size(); ++k) gthetas += gl[k] * det.xs[i][k];
        const double dl_ddi = gthetas * (-det.inner_lr * state.lambda_bi * 2.0 * r);
        out.data_weights[i] -= det.outer_lr * dl_ddi;
    }
    return out;
}

std::vector<std::size_t> entropy_val_selector(const std::vector<double>& scores,
                                              double fraction) {
    if (scores.empty()) throw ParameterError("entropy_val_selector: empty scores");
    if (!(fraction > 0.0) || fraction > 1.0)
        throw ParameterError("entropy_val_selector: fraction must be in (0, 1]");
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto entropy = [&](std::size_t i) {
        const double q = std::clamp(scores[i], 1e-12, 1.0 - 1e-12);
        return -q * std::log(q) - (1.0 - q) * std::log(1.0 - q);
    };
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return entropy(a) > entropy(b); });
    const auto want = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(scores.size())));
    idx.resize(std::min(want, idx.size()));
    return idx;
}

void to_json(nlohmann::json& j, const WeightState& s) {
    j = nlohmann::json{{"losses", s.losses},
                       {"q", s.quality},
                       {"d", s.data_weights},
                       {"lambdas", {{"sqe", s.lambda_sqe}, {"bi", s.lambda_bi}}},
                       {"eps", s.eps}};
}

void from_json(const nlohmann::json& j, WeightState& s) {
    j.at("losses").get_to(s.losses);
    j.at("q").get_to(s.quality);
    j.at("d").get_to(s.data_weights);
    if (auto it = j.find("lambdas"); it != j.end()) {
        it->at("sqe").get_to(s.lambda_sqe);
        it->at("bi").get_to(s.lambda_bi);
    }
    if (auto it = j.find("eps"); it != j.end()) it->get_to(s.eps);
}

} // namespace defectforge
