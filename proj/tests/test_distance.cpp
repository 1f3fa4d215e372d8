#include "defectforge/ops/distance.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace defectforge;

TEST_CASE("distance_transform: all-zeros mask gives all-zeros field") {
    const BinaryMask mask(5, 7, 0);
    const ScalarField d = distance_transform(mask);
    for (double v : d.data) CHECK(v == 0.0);
}

TEST_CASE("distance_transform: zero pixels are at distance zero") {
    BinaryMask mask(6, 6, 1);
    mask.at(2, 3) = 0;
    mask.at(5, 0) = 0;
    const ScalarField d = distance_transform(mask);
    CHECK(d.at(2, 3) == 0.0);
    CHECK(d.at(5, 0) == 0.0);
}

TEST_CASE("distance_transform: single zero at center of 5x5") {
    BinaryMask mask(5, 5, 1);
    mask.at(2, 2) = 0;
    const ScalarField d = distance_transform(mask);
    // corner at (0,0): sqrt(8) = 2*sqrt(2), frozen via the brute-force oracle
    const ScalarField ref = oracles::brute_force_edt(mask);
    CHECK(d.at(0, 0) == ref.at(0, 0));
    CHECK(d.at(0, 0) == doctest::Approx(2.8284271247).epsilon(1e-9));
    CHECK(d.at(2, 2) == 0.0);
    CHECK(d.at(2, 3) == 1.0);
}

TEST_CASE("distance_transform: no zero pixel yields the far sentinel") {
    const BinaryMask mask(4, 9, 1);
    const ScalarField d = distance_transform(mask);
    for (double v : d.data) CHECK(v >= 13.0);
}

TEST_CASE("distance_transform: zero-sized mask is a dimension error") {
    BinaryMask mask;
    CHECK_THROWS_AS(distance_transform(mask), DimensionError);
}

TEST_CASE("distance_transform: equals brute force exactly on random masks") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int h = 1 + int(rng.below(16));
        const int w = 1 + int(rng.below(16));
        const BinaryMask mask = oracles::random_mask(rng, h, w, rng.uniform(0.1, 0.95));
        const ScalarField got = distance_transform(mask);
        const ScalarField want = oracles::brute_force_edt(mask);
        for (std::size_t i = 0; i < got.data.size(); ++i) CHECK(got.data[i] == want.data[i]);
    }
}
