#include "defectforge/gen/fracture.hpp"

#include "defectforge/ops/distance.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace defectforge;

TEST_CASE("skeleton: empty foreground gives an empty skeleton") {
    const BinaryMask fg(32, 32, 0);
    Rng rng(1);
    CHECK(generate_skeleton(fg, FractureParams{}, rng).count() == 0);
}

TEST_CASE("skeleton: stays inside the foreground and marks every start") {
    FractureParams p;
    p.n_starts = 3;
    BinaryMask fg(64, 64);
    for (int y = 8; y < 56; ++y)
        for (int x = 8; x < 56; ++x) fg.at(y, x) = 1;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const BinaryMask s = generate_skeleton(fg, p, rng);
        CHECK(s.subset_of(fg));
        CHECK(s.count() >= static_cast<std::size_t>(p.n_starts) - 2); // starts may collide
        CHECK(s.count() > 0);
    }
}

TEST_CASE("skeleton: every sampled start point is marked") {
    FractureParams p;
    p.n_starts = 3;
    BinaryMask fg(40, 40);
    for (int y = 5; y < 35; ++y)
        for (int x = 5; x < 35; ++x) fg.at(y, x) = 1;
    std::vector<std::pair<int, int>> fg_pixels;
    for (int y = 0; y < 40; ++y)
        for (int x = 0; x < 40; ++x)
            if (fg.at(y, x)) fg_pixels.emplace_back(y, x);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const BinaryMask s = generate_skeleton(fg, p, rng);
        // replay the documented per-start draws: pixel index, then angle
        Rng replay(seed);
        for (int i = 0; i < p.n_starts; ++i) {
            const auto [y0, x0] = fg_pixels[replay.below(fg_pixels.size())];
            (void)replay.uniform();
            CHECK(s.at(y0, x0) == 1);
        }
    }
}

TEST_CASE("skeleton: deterministic for a fixed seed") {
    BinaryMask fg(48, 48, 1);
    Rng a(99), b(99);
    const BinaryMask s1 = generate_skeleton(fg, FractureParams{}, a);
    const BinaryMask s2 = generate_skeleton(fg, FractureParams{}, b);
    CHECK(s1.data == s2.data);
}

TEST_CASE("skeleton: pixel count bounded by n_starts * max_steps * 8") {
    FractureParams p;
    BinaryMask fg(128, 128, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const BinaryMask s = generate_skeleton(fg, p, rng);
        CHECK(s.count() <= static_cast<std::size_t>(p.n_starts) * p.max_steps * 8);
    }
}

TEST_CASE("fracture threshold stage: empty skeleton gives an empty mask") {
    const BinaryMask skeleton(32, 32, 0);
    CHECK(fracture_threshold_stage(skeleton, FractureParams{}, 7).count() == 0);
}

TEST_CASE("fracture threshold stage: noise-free mask is exactly {dist < w0+eps}") {
    FractureParams p;
    p.noise_scale = 0.0;
    p.alpha = 0.0; // w_t degenerates to w0 + epsilon = 1.3
    p.w0 = 1.0;
    p.epsilon = 0.3;
    BinaryMask skeleton(16, 16);
    skeleton.at(8, 8) = 1;
    skeleton.at(3, 12) = 1;
    const BinaryMask mask = fracture_threshold_stage(skeleton, p, 5);
    const ScalarField dist = oracles::brute_force_edt(skeleton.complement());
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
            CHECK(mask.at(y, x) == (dist.at(y, x) < 1.3 ? 1 : 0));
}

TEST_CASE("fracture threshold stage: skeleton pixels survive when noise < w0") {
    FractureParams p; // noise_scale 0.2 < w0 1.5; |nu| <= 0.2*1.5*2 = 0.6 < 1.5+0.6
    BinaryMask fg(64, 64, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const BinaryMask skeleton = generate_skeleton(fg, p, rng);
        const BinaryMask mask = fracture_threshold_stage(skeleton, p, rng.next());
        CHECK(skeleton.subset_of(mask));
    }
}

TEST_CASE("fracture threshold stage: thickness is monotone in the distance") {
    FractureParams p;
    p.noise_scale = 0.0;
    BinaryMask skeleton(24, 24);
    skeleton.at(12, 12) = 1;
    const BinaryMask mask = fracture_threshold_stage(skeleton, p, 1);
    const ScalarField dist = distance_transform(skeleton.complement());
    // downward closure: if q is in and dist(p) < dist(q), then p is in
    double max_in = 0.0, min_out = 1e18;
    for (int y = 0; y < 24; ++y)
        for (int x = 0; x < 24; ++x) {
            if (mask.at(y, x))
                max_in = std::max(max_in, dist.at(y, x));
            else
                min_out = std::min(min_out, dist.at(y, x));
        }
    CHECK(max_in < min_out);
}

TEST_CASE("fracture full mask: deterministic and foreground-confined skeleton source") {
    FractureParams p;
    BinaryMask fg(96, 96);
    for (int y = 10; y < 86; ++y)
        for (int x = 10; x < 86; ++x) fg.at(y, x) = 1;
    Rng a(5), b(5);
    const BinaryMask skel_a = generate_skeleton(fg, p, a);
    const BinaryMask skel_b = generate_skeleton(fg, p, b);
    const BinaryMask mask_a = fracture_mask_from_skeleton(skel_a, p, a);
    const BinaryMask mask_b = fracture_mask_from_skeleton(skel_b, p, b);
    CHECK(mask_a.data == mask_b.data);
    CHECK(mask_a.count() > 0);
}
