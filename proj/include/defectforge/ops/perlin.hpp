#pragma once

#include "defectforge/core/field.hpp"
#include "defectforge/core/rng.hpp"

#include <array>
#include <cstdint>

namespace defectforge {

// Classic seeded gradient noise. The exact scheme (this is the contract the
// golden tests pin down):
//
//  * permutation: 0..255 shuffled by a Fisher-Yates pass driven by
//    Rng(seed).below(i+1), table duplicated to 512 entries;
//  * corner hash:  perm[perm[xi & 255] + (yi & 255)] & 7 selects one of the
//    eight gradients (1,1) (1,-1) (-1,1) (-1,-1) (0,1) (0,-1) (1,0) (-1,0)
//    as (gy,gx);
//  * corner value: gy*dy + gx*dx for the offset (dy,dx) from the corner;
//  * interpolation: bilinear with fade t^3*(t*(t*6-15)+10) per axis.
//
// A single octave vanishes at integer lattice points and is bounded by
// |noise| <= 2 (|g|_inf <= 1, |offset|_1 <= 2, convex interpolation).
class PerlinNoise {
public:
    explicit PerlinNoise(std::uint64_t seed);

    /// Single octave at (y, x).
    double noise(double y, double x) const;

    /// scale * sum_{o<octaves} 0.5^o * noise(y*2^o, x*2^o); octaves >= 1.
    /// Lacunarity 2 and persistence 0.5 are fixed; the sum is not normalized.
    double fractal(double y, double x, int octaves, double scale) const;

private:
    std::array<std::uint8_t, 512> perm_;
};

/// One-shot convenience wrapper around PerlinNoise.
double perlin_fractal(double y, double x, int octaves, double scale, std::uint64_t seed);

} // namespace defectforge
