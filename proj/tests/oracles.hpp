#pragma once

// Test-side oracles: independent, deliberately naive implementations used to
// freeze expected values. None of these share code paths with the library
// routines they check.

#include "defectforge/core/field.hpp"
#include "defectforge/core/rng.hpp"
#include "defectforge/refine/allen_cahn.hpp"
#include "defectforge/weights/weights.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace oracles {

using defectforge::BinaryMask;
using defectforge::PhaseImage;
using defectforge::Rng;
using defectforge::ScalarField;

// O(N^2) nearest-zero scan.
inline ScalarField brute_force_edt(const BinaryMask& mask) {
    ScalarField out(mask.height, mask.width);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            double best = std::numeric_limits<double>::infinity();
            for (int qy = 0; qy < mask.height; ++qy)
                for (int qx = 0; qx < mask.width; ++qx)
                    if (!mask.at(qy, qx)) {
                        const double d2 = double(y - qy) * (y - qy) +
                                          double(x - qx) * (x - qx);
                        best = std::min(best, d2);
                    }
            out.at(y, x) = std::isinf(best)
                               ? double(mask.height) + double(mask.width)
                               : std::sqrt(best);
        }
    }
    return out;
}

// Set-algebra morphology: dilation = union of translates, erosion = pixels
// whose whole window lies in the mask (outside the frame is background).
inline BinaryMask set_dilate(const BinaryMask& m, int ksize) {
    const int r = ksize / 2;
    BinaryMask out(m.height, m.width);
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x)
            if (m.at(y, x))
                for (int dy = -r; dy <= r; ++dy)
                    for (int dx = -r; dx <= r; ++dx)
                        if (m.in_bounds(y + dy, x + dx)) out.at(y + dy, x + dx) = 1;
    return out;
}

inline BinaryMask set_erode(const BinaryMask& m, int ksize) {
    const int r = ksize / 2;
    BinaryMask out(m.height, m.width);
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x) {
            bool all = true;
            for (int dy = -r; dy <= r && all; ++dy)
                for (int dx = -r; dx <= r; ++dx)
                    if (!m.in_bounds(y + dy, x + dx) || !m.at(y + dy, x + dx)) {
                        all = false;
                        break;
                    }
            out.at(y, x) = all ? 1 : 0;
        }
    return out;
}

// Straight-line evaluation of the documented gradient-noise scheme. The
// permutation construction is part of the contract (Fisher-Yates over
// Rng(seed)); the hashing, fade and interpolation are re-derived here.
inline double perlin_reference(std::uint64_t seed, double y, double x) {
    std::uint8_t p[512];
    {
        std::uint8_t base[256];
        for (int i = 0; i < 256; ++i) base[i] = std::uint8_t(i);
        Rng rng(seed);
        for (int i = 255; i > 0; --i) {
            const int j = int(rng.below(std::uint64_t(i) + 1));
            const std::uint8_t t = base[i];
            base[i] = base[j];
            base[j] = t;
        }
        for (int i = 0; i < 512; ++i) p[i] = base[i & 255];
    }
    const double yf = std::floor(y), xf = std::floor(x);
    const int yi = int(std::int64_t(yf) & 255), xi = int(std::int64_t(xf) & 255);
    const double ty = y - yf, tx = x - xf;

    const int gy_tab[8] = {1, 1, -1, -1, 0, 0, 1, -1};
    const int gx_tab[8] = {1, -1, 1, -1, 1, -1, 0, 0};
    double corner_val[2][2];
    for (int cy = 0; cy < 2; ++cy)
        for (int cx = 0; cx < 2; ++cx) {
            const int hash = p[p[(xi + cx) & 255] + ((yi + cy) & 255)] & 7;
            corner_val[cy][cx] = gy_tab[hash] * (ty - cy) + gx_tab[hash] * (tx - cx);
        }
    auto fade = [](double t) { return ((6.0 * t - 15.0) * t + 10.0) * t * t * t; };
    const double u = fade(tx), v = fade(ty);
    const double top = corner_val[0][0] + u * (corner_val[0][1] - corner_val[0][0]);
    const double bot = corner_val[1][0] + u * (corner_val[1][1] - corner_val[1][0]);
    return top + v * (bot - top);
}

// Even-odd point-in-polygon by crossing count with the half-open edge rule,
// matching the rasterizer's convention but evaluated per pixel.
inline bool point_in_polygon(const std::vector<std::pair<double, double>>& pts, double py,
                             double px) {
    int crossings = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& [ay, ax] = pts[i];
        const auto& [by, bx] = pts[(i + 1) % pts.size()];
        if ((ay <= py) == (by <= py)) continue;
        const double xc = ax + (py - ay) * (bx - ax) / (by - ay);
        if (xc > px) ++crossings;
    }
    return crossings % 2 == 1;
}

// Exact Wilcoxon AUC with half ties.
inline double exact_auc(const std::vector<double>& pos, const std::vector<double>& neg) {
    double wins = 0.0;
    for (double p : pos)
        for (double n : neg) {
            if (p > n)
                wins += 1.0;
            else if (p == n)
                wins += 0.5;
        }
    return wins / (double(pos.size()) * double(neg.size()));
}

// Ginzburg-Landau energy with the fidelity anchor, by direct summation
// (long double accumulator):
//   sum_c [ eps2/2 * sum_edges (u_a - u_b)^2 + sum_p (u_p^2 - 1)^2 / 4 ]
//   + mu/2 * sum_{p unmasked} sum_c (u - init)^2
inline long double gl_energy(const PhaseImage& u, const PhaseImage& init,
                             const BinaryMask& mask, double eps2, double mu) {
    long double e = 0.0L;
    const int h = u.height(), w = u.width();
    for (int c = 0; c < 3; ++c) {
        const auto& f = u.channels[c];
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                const long double v = f.at(y, x);
                e += (v * v - 1.0L) * (v * v - 1.0L) / 4.0L;
                if (y + 1 < h) {
                    const long double d = f.at(y + 1, x) - v;
                    e += 0.5L * eps2 * d * d;
                }
                if (x + 1 < w) {
                    const long double d = f.at(y, x + 1) - v;
                    e += 0.5L * eps2 * d * d;
                }
                if (!mask.at(y, x)) {
                    const long double d = v - init.channels[c].at(y, x);
                    e += 0.5L * mu * d * d;
                }
            }
    }
    return e;
}

// --- random fixtures --------------------------------------------------------

inline BinaryMask random_mask(Rng& rng, int h, int w, double density = 0.5) {
    BinaryMask m(h, w);
    for (auto& v : m.data) v = rng.uniform() < density ? 1 : 0;
    return m;
}

inline ScalarField random_field(Rng& rng, int h, int w, double lo = -1.0, double hi = 1.0) {
    ScalarField f(h, w);
    for (auto& v : f.data) v = rng.uniform(lo, hi);
    return f;
}

inline PhaseImage random_phase(Rng& rng, int h, int w, double lo = -1.0, double hi = 1.0) {
    PhaseImage img(h, w);
    for (int c = 0; c < 3; ++c)
        for (auto& v : img.channels[c].data) v = rng.uniform(lo, hi);
    return img;
}

} // namespace oracles
