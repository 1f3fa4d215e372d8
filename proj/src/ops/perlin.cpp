#include "defectforge/ops/perlin.hpp"

#include <cmath>
#include <utility>

namespace defectforge {

namespace {

// (gy, gx) pairs indexed by hash & 7.
constexpr int kGrad[8][2] = {
    {1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 1}, {0, -1}, {1, 0}, {-1, 0},
};

inline double fade(double t) { return t * t * t * (t * (t * 6.0 - 15.0) + 10.0); }
inline double lerp(double t, double a, double b) { return a + t * (b - a); }

} // namespace

PerlinNoise::PerlinNoise(std::uint64_t seed) {
    std::array<std::uint8_t, 256> p;
    for (int i = 0; i < 256; ++i) p[i] = static_cast<std::uint8_t>(i);
    Rng rng(seed);
    for (int i = 255; i > 0; --i) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(p[i], p[j]);
    }
    for (int i = 0; i < 256; ++i) {
        perm_[i] = p[i];
        perm_[i + 256] = p[i];
    }
}

double PerlinNoise::noise(double y, double x) const {
    const auto yf = std::floor(y);
    const auto xf = std::floor(x);
    const int yi = static_cast<int>(static_cast<std::int64_t>(yf) & 255);
    const int xi = static_cast<int>(static_cast<std::int64_t>(xf) & 255);
    const double dy = y - yf;
    const double dx = x - xf;

    auto corner = [&](int cy, int cx, double oy, double ox) {
        const int hash = perm_[perm_[(xi + cx) & 255] + ((yi + cy) & 255)] & 7;
        return kGrad[hash][0] * oy + kGrad[hash][1] * ox;
    };

    const double n00 = corner(0, 0, dy, dx);
    const double n01 = corner(0, 1, dy, dx - 1.0);
    const double n10 = corner(1, 0, dy - 1.0, dx);
    const double n11 = corner(1, 1, dy - 1.0, dx - 1.0);

    const double u = fade(dx);
    const double v = fade(dy);
    return lerp(v, lerp(u, n00, n01), lerp(u, n10, n11));
}

double PerlinNoise::fractal(double y, double x, int octaves, double scale) const {
    if (octaves < 1) throw ParameterError("perlin_fractal requires octaves >= 1");
    double sum = 0.0;
    double amp = 1.0;
    double freq = 1.0;
    for (int o = 0; o < octaves; ++o) {
        sum += amp * noise(y * freq, x * freq);
        amp *= 0.5;
        freq *= 2.0;
    }
    return scale * sum;
}

double perlin_fractal(double y, double x, int octaves, double scale, std::uint64_t seed) {
    return PerlinNoise(seed).fractal(y, x, octaves, scale);
}

} // namespace defectforge
