#include "defectforge/gen/pitting.hpp"

#include "defectforge/ops/morphology.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace defectforge;

TEST_CASE("pitting: empty foreground returns the all-zero mask") {
    const BinaryMask fg(64, 64, 0);
    Rng rng(3);
    CHECK(generate_pitting_mask(fg, PittingParams{}, rng).count() == 0);
}

TEST_CASE("pitting: output is a subset of the foreground over 50 seeds") {
    BinaryMask fg(96, 96);
    for (int y = 20; y < 76; ++y)
        for (int x = 12; x < 70; ++x) fg.at(y, x) = 1;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const BinaryMask m = generate_pitting_mask(fg, PittingParams{}, rng);
        CHECK(m.subset_of(fg));
    }
}

TEST_CASE("pitting: growth rounds only add pixels when noise is off") {
    BinaryMask fg(80, 80, 1);
    PittingParams base;
    base.noise_enabled = false;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        // both runs share the stream through the polygon stage; growth only
        // adds pixels and the close afterwards is monotone, so the 0-round
        // mask must be a subset of the 5-round mask
        PittingParams small = base;
        small.n_growth = 0;
        PittingParams big = base;
        big.n_growth = 5;
        Rng r1(seed), r2(seed);
        const BinaryMask m_small = generate_pitting_mask(fg, small, r1);
        const BinaryMask m_big = generate_pitting_mask(fg, big, r2);
        CHECK(m_small.subset_of(m_big));
    }
}

TEST_CASE("pitting: with growth and noise off equals the closed polygon union") {
    PittingParams p;
    p.k = 3;
    p.n_growth = 0;
    p.noise_enabled = false;
    p.overlap_prob = 1.0; // every polygon ORs in
    p.polygon_size_min = 6.0;
    p.polygon_size_max = 14.0;

    BinaryMask fg(64, 64);
    for (int y = 4; y < 60; ++y)
        for (int x = 4; x < 60; ++x) fg.at(y, x) = 1;

    std::vector<std::pair<int, int>> fg_pixels;
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x)
            if (fg.at(y, x)) fg_pixels.emplace_back(y, x);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const BinaryMask got = generate_pitting_mask(fg, p, rng);

        // replay the documented stream layout and rasterize with the
        // per-pixel even-odd oracle
        Rng replay(seed);
        (void)replay.next(); // noise seed draw
        BinaryMask want(64, 64);
        for (int i = 0; i < p.k; ++i) {
            const auto [cy, cx] = fg_pixels[replay.below(fg_pixels.size())];
            const Polygon poly = sample_pitting_polygon(cy, cx, p, replay);
            (void)replay.uniform(); // overlap draw
            for (int y = 0; y < 64; ++y)
                for (int x = 0; x < 64; ++x)
                    if (fg.at(y, x) && oracles::point_in_polygon(poly.pts, y, x))
                        want.at(y, x) = 1;
        }
        want = morph(want, MorphOp::Close, 3);
        for (std::size_t i = 0; i < want.size(); ++i)
            if (!fg.data[i]) want.data[i] = 0;

        CHECK(got.data == want.data);
    }
}

TEST_CASE("pitting: deterministic per seed") {
    BinaryMask fg(72, 72, 1);
    Rng a(17), b(17);
    const BinaryMask m1 = generate_pitting_mask(fg, PittingParams{}, a);
    const BinaryMask m2 = generate_pitting_mask(fg, PittingParams{}, b);
    CHECK(m1.data == m2.data);
    CHECK(m1.count() > 0);
}
