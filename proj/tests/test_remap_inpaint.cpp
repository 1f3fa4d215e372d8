#include "defectforge/ops/inpaint.hpp"
#include "defectforge/ops/remap.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace defectforge;

namespace {

DisplacementField identity_field(int h, int w) {
    DisplacementField f{ScalarField(h, w), ScalarField(h, w)};
    for (int v = 0; v < h; ++v)
        for (int u = 0; u < w; ++u) {
            f.map_x.at(v, u) = u;
            f.map_y.at(v, u) = v;
        }
    return f;
}

} // namespace

TEST_CASE("remap: identity field reproduces the input") {
    Rng rng(1);
    const ScalarField in = oracles::random_field(rng, 6, 7);
    const auto field = identity_field(6, 7);
    const ScalarField out_b = remap(in, field, Interp::Bilinear);
    const ScalarField out_n = remap(in, field, Interp::Nearest);
    for (std::size_t i = 0; i < in.data.size(); ++i) {
        CHECK(out_b.data[i] == in.data[i]);
        CHECK(out_n.data[i] == in.data[i]);
    }
}

TEST_CASE("remap: +1 column shift with border clamp") {
    ScalarField in(4, 4);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) in.at(y, x) = y * 10.0 + x;
    DisplacementField field = identity_field(4, 4);
    for (auto& v : field.map_x.data) v += 1.0; // sample one column to the right
    const ScalarField out = remap(in, field, Interp::Nearest);
    for (int y = 0; y < 4; ++y) {
        for (int x = 0; x < 3; ++x) CHECK(out.at(y, x) == in.at(y, x + 1));
        CHECK(out.at(y, 3) == in.at(y, 3)); // clamped at the border
    }
}

TEST_CASE("remap: nearest on a mask stays binary; bilinear is rejected") {
    Rng rng(2);
    const BinaryMask m = oracles::random_mask(rng, 9, 9);
    DisplacementField field = identity_field(9, 9);
    for (auto& v : field.map_x.data) v += rng.uniform(-2.0, 2.0);
    for (auto& v : field.map_y.data) v += rng.uniform(-2.0, 2.0);
    const BinaryMask out = remap(m, field, Interp::Nearest);
    for (auto v : out.data) CHECK((v == 0 || v == 1));
    CHECK_THROWS_AS(remap(m, field, Interp::Bilinear), ParameterError);
}

TEST_CASE("remap: mismatched field dimensions are a dimension error") {
    const ScalarField in(4, 4, 1.0);
    const auto field = identity_field(5, 4);
    CHECK_THROWS_AS(remap(in, field, Interp::Bilinear), DimensionError);
}

TEST_CASE("inpaint: empty hole leaves the image untouched") {
    Rng rng(3);
    ColorImage img(5, 5);
    for (int c = 0; c < 3; ++c) img.channels[c] = oracles::random_field(rng, 5, 5, 0.0, 1.0);
    const BinaryMask hole(5, 5, 0);
    const ColorImage out = inpaint_diffusion(img, hole);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < img.channels[c].data.size(); ++i)
            CHECK(out.channels[c].data[i] == img.channels[c].data[i]);
}

TEST_CASE("inpaint: hole surrounded by a constant fills with it") {
    ScalarField img(7, 7, 0.625);
    BinaryMask hole(7, 7);
    for (int y = 2; y <= 4; ++y)
        for (int x = 2; x <= 4; ++x) hole.at(y, x) = 1;
    const ScalarField out = inpaint_diffusion(img, hole, 1e-8, 5000);
    for (double v : out.data) CHECK(v == doctest::Approx(0.625).epsilon(1e-12));
}

TEST_CASE("inpaint: filled values obey the boundary-ring maximum principle") {
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        ScalarField img = oracles::random_field(rng, 10, 10, 0.0, 1.0);
        BinaryMask hole(10, 10);
        for (int y = 3; y <= 6; ++y)
            for (int x = 2; x <= 7; ++x) hole.at(y, x) = 1;

        double rmin = 1e9, rmax = -1e9;
        for (int y = 0; y < 10; ++y)
            for (int x = 0; x < 10; ++x) {
                if (hole.at(y, x)) continue;
                const bool ring = (y > 0 && hole.at(y - 1, x)) || (y < 9 && hole.at(y + 1, x)) ||
                                  (x > 0 && hole.at(y, x - 1)) || (x < 9 && hole.at(y, x + 1));
                if (ring) {
                    rmin = std::min(rmin, img.at(y, x));
                    rmax = std::max(rmax, img.at(y, x));
                }
            }

        // deliberately few iterations: the principle must hold at any stage
        const ScalarField out = inpaint_diffusion(img, hole, 1e-4, 1 + int(rng.below(50)));
        for (int y = 0; y < 10; ++y)
            for (int x = 0; x < 10; ++x)
                if (hole.at(y, x)) {
                    CHECK(out.at(y, x) >= rmin - 1e-12);
                    CHECK(out.at(y, x) <= rmax + 1e-12);
                } else {
                    CHECK(out.at(y, x) == img.at(y, x));
                }
    }
}

TEST_CASE("inpaint: hole covering the whole image is an error") {
    const ScalarField img(4, 4, 0.5);
    const BinaryMask hole(4, 4, 1);
    CHECK_THROWS_AS(inpaint_diffusion(img, hole), ParameterError);
}
