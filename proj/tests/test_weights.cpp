#include "defectforge/weights/weights.hpp"

#include "defectforge/core/field.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cmath>

using namespace defectforge;

TEST_CASE("quality_targets: equal losses map to 1") {
    const auto y = quality_targets({0.7, 0.7, 0.7}, 1e-8);
    for (double v : y) CHECK(v == 1.0);
}

TEST_CASE("quality_targets: argmin maps to exactly 1, argmax strictly inside (0,1)") {
    const auto y = quality_targets({3.0, 1.0, 2.0, 5.0}, 1e-8);
    CHECK(y[1] == 1.0);
    CHECK(y[3] > 0.0);
    CHECK(y[3] < 1.0);
    for (double v : y) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("quality_targets: losses [1,3] give [1, ~0]") {
    const auto y = quality_targets({1.0, 3.0}, 1e-8);
    CHECK(y[0] == 1.0);
    CHECK(y[1] == doctest::Approx(1e-8 / (2.0 + 1e-8)).epsilon(1e-9));
}

TEST_CASE("quality_targets: shift invariance, and scale invariance with scaled eps") {
    const std::vector<double> base = {0.3, 1.4, 0.9, 2.2};
    const auto y0 = quality_targets(base, 1e-8);
    std::vector<double> shifted = base;
    for (auto& v : shifted) v += 17.5;
    const auto y1 = quality_targets(shifted, 1e-8);
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(y0[i] == doctest::Approx(y1[i]).epsilon(1e-9));

    std::vector<double> scaled = base;
    for (auto& v : scaled) v *= 1000.0;
    const auto y2 = quality_targets(scaled, 1e-8 * 1000.0);
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(y0[i] == doctest::Approx(y2[i]).epsilon(1e-12));
}

TEST_CASE("quality_targets: empty input / bad eps are parameter errors") {
    CHECK_THROWS_AS(quality_targets({}, 1e-8), ParameterError);
    CHECK_THROWS_AS(quality_targets({1.0}, 0.0), ParameterError);
}

TEST_CASE("sample_weights: pure quality path and mixed path") {
    const auto w1 = sample_weights({0.2, 0.8}, {5.0, 5.0}, 1.0, 0.0);
    CHECK(w1 == std::vector<double>{0.2, 0.8});
    const auto w2 = sample_weights({0.2, 0.8}, {1.0, 1.0}, 1.0, 0.5);
    CHECK(w2[0] == doctest::Approx(0.7));
    CHECK(w2[1] == doctest::Approx(1.3));
}

TEST_CASE("sample_weights: lambda_sqe = 0 falls back to uniform 1") {
    const auto w = sample_weights({0.1, 0.9, 0.4}, {7.0, -2.0, 0.0}, 0.0, 3.0);
    for (double v : w) CHECK(v == 1.0);
}

TEST_CASE("sample_weights: length mismatch is a parameter error") {
    CHECK_THROWS_AS(sample_weights({0.1}, {1.0, 2.0}, 1.0, 1.0), ParameterError);
}

TEST_CASE("soft_auc_loss: saturated, indifferent, degenerate") {
    CHECK(soft_auc_loss({10.0}, {-10.0}, 1.0) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(soft_auc_loss({1.0, 1.0}, {1.0, 1.0}, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(soft_auc_loss({}, {1.0}, 1.0), ParameterError);
    CHECK_THROWS_AS(soft_auc_loss({1.0}, {1.0}, 0.0), ParameterError);
}

TEST_CASE("soft_auc_loss: close to exact Wilcoxon AUC at alpha = 50") {
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> pos(50), neg(50);
        for (auto& v : pos) v = rng.uniform(-1.0, 1.0);
        for (auto& v : neg) v = rng.uniform(-1.0, 1.0);
        const double soft = 1.0 - soft_auc_loss(pos, neg, 50.0);
        const double exact = oracles::exact_auc(pos, neg);
        CHECK(std::abs(soft - exact) <= 0.02);
    }
}

TEST_CASE("soft_auc_loss: antisymmetry of the logistic pairs") {
    Rng rng(2);
    std::vector<double> pos(7), neg(9);
    for (auto& v : pos) v = rng.uniform(-2.0, 2.0);
    for (auto& v : neg) v = rng.uniform(-2.0, 2.0);
    const double a = soft_auc_loss(pos, neg, 3.0);
    const double b = soft_auc_loss(neg, pos, 3.0);
    // sigma(x) + sigma(-x) = 1 pairwise, so the two losses sum to 1
    CHECK(a + b == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("soft_auc_loss: approaches exact AUC as alpha grows on gapped scores") {
    Rng rng(3);
    // all pairwise gaps >= 0.1
    std::vector<double> pos = {0.55, 0.75, 0.95}, neg = {0.05, 0.25, 0.45};
    const double soft = 1.0 - soft_auc_loss(pos, neg, 200.0);
    const double exact = oracles::exact_auc(pos, neg);
    CHECK(std::abs(soft - exact) <= 1.0 / (1.0 + std::exp(0.1 * 200.0)));
}

namespace {

ToyDetector simple_detector() {
    ToyDetector det;
    det.theta = {1.0, 0.0};
    det.xs = {{1.0, 0.0}};
    det.ts = {0.0};
    det.inner_lr = 0.1;
    return det;
}

} // namespace

TEST_CASE("toy_inner_step: hand-checked single-sample gradient") {
    const ToyDetector det = simple_detector();
    const auto theta = toy_inner_step(det, {1.0});
    CHECK(theta[0] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(theta[1] == 0.0);
}

TEST_CASE("toy_inner_step: zero lr or zero weights freeze theta") {
    ToyDetector det = simple_detector();
    det.inner_lr = 0.0;
    CHECK(toy_inner_step(det, {1.0}) == det.theta);
    det.inner_lr = 0.1;
    CHECK(toy_inner_step(det, {0.0}) == det.theta);
}

namespace {

struct OuterFixture {
    ToyDetector det;
    WeightState state;
    std::vector<std::vector<double>> val_pos, val_neg;
    AucConfig auc{2.0};
};

OuterFixture make_fixture(Rng& rng, int n_samples = 5, int dim = 3) {
    OuterFixture f;
    f.det.inner_lr = 0.05;
    f.det.outer_lr = 1e-2;
    for (int k = 0; k < dim; ++k) f.det.theta.push_back(rng.uniform(-1.0, 1.0));
    for (int i = 0; i < n_samples; ++i) {
        std::vector<double> x;
        for (int k = 0; k < dim; ++k) x.push_back(rng.uniform(-1.0, 1.0));
        f.det.xs.push_back(x);
        f.det.ts.push_back(rng.uniform(-1.0, 1.0));
        f.state.quality.push_back(rng.uniform());
        f.state.data_weights.push_back(rng.uniform(0.5, 1.5));
    }
    for (int j = 0; j < 4; ++j) {
        std::vector<double> xp, xn;
        for (int k = 0; k < dim; ++k) {
            xp.push_back(rng.uniform(-1.0, 1.0));
            xn.push_back(rng.uniform(-1.0, 1.0));
        }
        f.val_pos.push_back(xp);
        f.val_neg.push_back(xn);
    }
    return f;
}

// Loss as a function of d, everything else fixed: recompute the whole inner
// step + validation soft-AUC.
double outer_loss_at(const OuterFixture& f, const std::vector<double>& d) {
    WeightState s = f.state;
    s.data_weights = d;
    const auto w = sample_weights(s.quality, s.data_weights, s.lambda_sqe, s.lambda_bi);
    const auto theta_prime = toy_inner_step(f.det, w);
    std::vector<double> pos, neg;
    for (const auto& x : f.val_pos) {
        double sc = 0;
        for (std::size_t k = 0; k < x.size(); ++k) sc += theta_prime[k] * x[k];
        pos.push_back(sc);
    }
    for (const auto& x : f.val_neg) {
        double sc = 0;
        for (std::size_t k = 0; k < x.size(); ++k) sc += theta_prime[k] * x[k];
        neg.push_back(sc);
    }
    return soft_auc_loss(pos, neg, f.auc.alpha);
}

} // namespace

TEST_CASE("outer_update_weights: analytic gradient matches central differences") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const OuterFixture f = make_fixture(rng);
        const auto res = outer_update_weights(f.det, f.state, f.val_pos, f.val_neg, f.auc);

        for (std::size_t i = 0; i < f.state.data_weights.size(); ++i) {
            const double analytic =
                (f.state.data_weights[i] - res.data_weights[i]) / f.det.outer_lr;
            std::vector<double> dp = f.state.data_weights, dm = f.state.data_weights;
            const double h = 1e-5;
            dp[i] += h;
            dm[i] -= h;
            const double fd = (outer_loss_at(f, dp) - outer_loss_at(f, dm)) / (2.0 * h);
            const double denom = std::max({std::abs(fd), std::abs(analytic), 1e-6});
            CHECK(std::abs(analytic - fd) / denom <= 1e-4);
        }
    }
}

TEST_CASE("outer_update_weights: theta is never mutated") {
    Rng rng(8);
    const OuterFixture f = make_fixture(rng);
    const auto theta_before = f.det.theta;
    (void)outer_update_weights(f.det, f.state, f.val_pos, f.val_neg, f.auc);
    CHECK(f.det.theta == theta_before);
}

TEST_CASE("outer_update_weights: zero inner lr or lambda_bi leaves d unchanged") {
    Rng rng(9);
    OuterFixture f = make_fixture(rng);
    f.det.inner_lr = 0.0;
    auto res = outer_update_weights(f.det, f.state, f.val_pos, f.val_neg, f.auc);
    CHECK(res.data_weights == f.state.data_weights);

    OuterFixture g = make_fixture(rng);
    g.state.lambda_bi = 0.0;
    res = outer_update_weights(g.det, g.state, g.val_pos, g.val_neg, g.auc);
    CHECK(res.data_weights == g.state.data_weights);

    OuterFixture u = make_fixture(rng);
    u.state.lambda_sqe = 0.0; // uniform fallback: no d-dependence
    res = outer_update_weights(u.det, u.state, u.val_pos, u.val_neg, u.auc);
    CHECK(res.data_weights == u.state.data_weights);
}

TEST_CASE("outer_update_weights: adversarial sample is strictly down-weighted") {
    // One training sample whose gradient pushes theta against the validation
    // ranking: raising its weight raises the val loss, so d must decrease.
    OuterFixture f;
    f.det.theta = {0.0, 0.0};
    f.det.inner_lr = 0.1;
    f.det.outer_lr = 1e-2;
    // sample drives theta toward (-1, 0): theta' = theta - lr*2*(theta.x - 1)*x
    f.det.xs = {{1.0, 0.0}};
    f.det.ts = {-1.0}; // pulls theta[0] negative
    f.state.quality = {0.5};
    f.state.data_weights = {1.0};
    f.val_pos = {{1.0, 0.0}};  // positives score theta[0]
    f.val_neg = {{-1.0, 0.0}}; // negatives score -theta[0]
    f.auc.alpha = 2.0;

    const auto res = outer_update_weights(f.det, f.state, f.val_pos, f.val_neg, f.auc);
    CHECK(res.data_weights[0] < f.state.data_weights[0]);

    // and the finite-difference slope confirms the sign
    std::vector<double> dp = {1.0 + 1e-5}, dm = {1.0 - 1e-5};
    CHECK(outer_loss_at(f, dp) > outer_loss_at(f, dm));
}

TEST_CASE("outer_update_weights: degenerate validation sets are parameter errors") {
    Rng rng(10);
    const OuterFixture f = make_fixture(rng);
    CHECK_THROWS_AS(outer_update_weights(f.det, f.state, {}, f.val_neg, f.auc),
                    ParameterError);
    CHECK_THROWS_AS(outer_update_weights(f.det, f.state, f.val_pos, {}, f.auc),
                    ParameterError);
}

TEST_CASE("entropy_val_selector: picks the most uncertain scores") {
    const std::vector<double> scores = {0.99, 0.5, 0.02, 0.45, 0.93};
    const auto idx = entropy_val_selector(scores, 0.4); // ceil(0.4*5) = 2
    REQUIRE(idx.size() == 2);
    CHECK(idx[0] == 1); // 0.5 has maximal entropy
    CHECK(idx[1] == 3); // then 0.45
}

TEST_CASE("WeightState: JSON round-trip") {
    WeightState s;
    s.losses = {1.0, 2.0};
    s.quality = {1.0, 0.0};
    s.data_weights = {0.9, 1.1};
    s.lambda_sqe = 0.7;
    s.lambda_bi = 1.3;
    nlohmann::json j = s;
    const WeightState back = j.get<WeightState>();
    CHECK(back.losses == s.losses);
    CHECK(back.quality == s.quality);
    CHECK(back.data_weights == s.data_weights);
    CHECK(back.lambda_sqe == s.lambda_sqe);
    CHECK(back.lambda_bi == s.lambda_bi);
}
