#include "defectforge/kernels/kernels.hpp"

// Scalar reference kernels. The SIMD variants replicate the exact operation
// order used here; any change to an expression below must be mirrored there.

namespace defectforge::kernels::scalar {

void laplacian(const double* f, int h, int w, double* out) {
    for (int y = 0; y < h; ++y) {
        const int yu = reflect_index(y - 1, h);
        const int yd = reflect_index(y + 1, h);
        const double* row = f + static_cast<std::size_t>(y) * w;
        const double* rup = f + static_cast<std::size_t>(yu) * w;
        const double* rdn = f + static_cast<std::size_t>(yd) * w;
        double* o = out + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            const double c = row[x];
            const double left = row[reflect_index(x - 1, w)];
            const double right = row[reflect_index(x + 1, w)];
            o[x] = ((rup[x] + rdn[x]) + (left + right)) - 4.0 * c;
        }
    }
}

void ac_step(const double* u, const double* anchor, const std::uint8_t* mask,
             int h, int w, double eps2, double dt, double mu,
             double lo, double hi, double* out) {
    for (int y = 0; y < h; ++y) {
        const int yu = reflect_index(y - 1, h);
        const int yd = reflect_index(y + 1, h);
        const std::size_t off = static_cast<std::size_t>(y) * w;
        const double* row = u + off;
        const double* rup = u + static_cast<std::size_t>(yu) * w;
        const double* rdn = u + static_cast<std::size_t>(yd) * w;
        const double* anc = anchor + off;
        const std::uint8_t* m = mask + off;
        double* o = out + off;
        for (int x = 0; x < w; ++x) {
            const double c = row[x];
            const double left = row[reflect_index(x - 1, w)];
            const double right = row[reflect_index(x + 1, w)];
            const double lap = ((rup[x] + rdn[x]) + (left + right)) - 4.0 * c;
            const double res = eps2 * lap - ((c * c) * c - c);
            const double mu_eff = m[x] ? 0.0 : mu;
            const double dtmu = dt * mu_eff;
            double v = (c + dt * res + dtmu * anc[x]) / (1.0 + dtmu);
            v = v < lo ? lo : v;
            v = v > hi ? hi : v;
            o[x] = v;
        }
    }
}

void conv1d_rows(const double* f, int h, int w, const double* k, int radius, double* out) {
    const int taps = 2 * radius + 1;
    for (int y = 0; y < h; ++y) {
        const double* row = f + static_cast<std::size_t>(y) * w;
        double* o = out + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            const double c = row[x];
            double acc = 0.0;
            for (int j = 0; j < taps; ++j) {
                const double v = row[reflect_index(x + j - radius, w)];
                acc += k[j] * (v - c);
            }
            o[x] = c + acc;
        }
    }
}

void conv1d_cols(const double* f, int h, int w, const double* k, int radius, double* out) {
    const int taps = 2 * radius + 1;
    for (int y = 0; y < h; ++y) {
        const double* row = f + static_cast<std::size_t>(y) * w;
        double* o = out + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            const double c = row[x];
            double acc = 0.0;
            for (int j = 0; j < taps; ++j) {
                const int yy = reflect_index(y + j - radius, h);
                const double v = f[static_cast<std::size_t>(yy) * w + x];
                acc += k[j] * (v - c);
            }
            o[x] = c + acc;
        }
    }
}

} // namespace defectforge::kernels::scalar
