#include "defectforge/ops/perlin.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace defectforge;

TEST_CASE("perlin: single octave vanishes at integer lattice points") {
    const PerlinNoise noise(7);
    CHECK(noise.noise(1.0, 2.0) == 0.0);
    CHECK(noise.noise(0.0, 0.0) == 0.0);
    CHECK(noise.noise(-3.0, 5.0) == 0.0);
    CHECK(perlin_fractal(1.0, 2.0, 1, 3.0, 7) == 0.0);
}

TEST_CASE("perlin: deterministic per (inputs, seed)") {
    const double a = perlin_fractal(0.371, 0.82, 3, 1.7, 42);
    const double b = perlin_fractal(0.371, 0.82, 3, 1.7, 42);
    CHECK(a == b);
    const double c = perlin_fractal(0.371, 0.82, 3, 1.7, 43);
    CHECK(a != c); // different table with overwhelming probability
}

TEST_CASE("perlin: matches the straight-line reference evaluation") {
    CHECK(perlin_fractal(0.5, 0.5, 1, 1.0, 42) ==
          doctest::Approx(oracles::perlin_reference(42, 0.5, 0.5)).epsilon(1e-12));
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const double y = rng.uniform(-4.0, 4.0);
        const double x = rng.uniform(-4.0, 4.0);
        const std::uint64_t seed = rng.next();
        CHECK(perlin_fractal(y, x, 1, 1.0, seed) ==
              doctest::Approx(oracles::perlin_reference(seed, y, x)).epsilon(1e-12));
    }
}

TEST_CASE("perlin: fractal sum is scale * sum of halved octaves") {
    const PerlinNoise noise(11);
    const double y = 0.37, x = 1.21;
    const double manual =
        noise.noise(y, x) + 0.5 * noise.noise(2 * y, 2 * x) + 0.25 * noise.noise(4 * y, 4 * x);
    CHECK(noise.fractal(y, x, 3, 2.0) == doctest::Approx(2.0 * manual).epsilon(1e-12));
}

TEST_CASE("perlin: octaves = 0 is a parameter error") {
    CHECK_THROWS_AS(perlin_fractal(0.1, 0.2, 0, 1.0, 1), ParameterError);
}

TEST_CASE("perlin: bounded by scale * sum(0.5^o) * 2") {
    Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        const double y = rng.uniform(-10.0, 10.0);
        const double x = rng.uniform(-10.0, 10.0);
        const int octaves = 1 + int(rng.below(3));
        const double scale = rng.uniform(0.1, 0.3);
        double amp_sum = 0.0;
        for (int o = 0; o < octaves; ++o) amp_sum += std::pow(0.5, o);
        const double v = perlin_fractal(y, x, octaves, scale, 99);
        CHECK(std::abs(v) <= scale * amp_sum * 2.0 + 1e-12);
    }
}
