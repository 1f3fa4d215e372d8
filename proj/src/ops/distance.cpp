#include "defectforge/ops/distance.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace defectforge {

namespace {

constexpr double kFar = 1e20;

// 1D lower envelope of parabolas, d(x) = min_v (x - v)^2 + f(v).
void edt_1d(const double* f, int n, double* d, int* v, double* z) {
    int k = 0;
    v[0] = 0;
    z[0] = -std::numeric_limits<double>::infinity();
    z[1] = std::numeric_limits<double>::infinity();
    for (int q = 1; q < n; ++q) {
        double s;
        while (true) {
            s = ((f[q] + static_cast<double>(q) * q) -
                 (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                (2.0 * q - 2.0 * v[k]);
            if (s <= z[k]) {
                --k;
            } else {
                break;
            }
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = std::numeric_limits<double>::infinity();
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        const double dx = q - v[k];
        d[q] = dx * dx + f[v[k]];
    }
}

} // namespace

ScalarField distance_transform(const BinaryMask& mask) {
    const int h = mask.height;
    const int w = mask.width;
    ScalarField::check_dims(h, w);

    ScalarField sq(h, w);
    for (std::size_t i = 0; i < mask.size(); ++i)
        sq.data[i] = mask.data[i] ? kFar : 0.0;

    const int n = std::max(h, w);
    std::vector<double> f(n), d(n), z(n + 1);
    std::vector<int> v(n);

    // Columns first, then rows.
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) f[y] = sq.at(y, x);
        edt_1d(f.data(), h, d.data(), v.data(), z.data());
        for (int y = 0; y < h; ++y) sq.at(y, x) = d[y];
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) f[x] = sq.at(y, x);
        edt_1d(f.data(), w, d.data(), v.data(), z.data());
        for (int x = 0; x < w; ++x) sq.at(y, x) = d[x];
    }

    const double sentinel = static_cast<double>(h) + static_cast<double>(w);
    ScalarField out(h, w);
    for (std::size_t i = 0; i < sq.data.size(); ++i)
        out.data[i] = sq.data[i] >= kFar ? sentinel : std::sqrt(sq.data[i]);
    return out;
}

} // namespace defectforge
