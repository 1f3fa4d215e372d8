#include "defectforge/kernels/kernels.hpp"

#if defined(DEFECTFORGE_HAVE_AVX2_BUILD)

#include <immintrin.h>

// AVX2 variants. Each lane performs the same operation sequence as the scalar
// reference (see kernels_scalar.cpp), so results are bit-identical; only the
// iteration is 4-wide. Row borders and short rows fall back to the scalar
// per-pixel body.

namespace defectforge::kernels::avx2 {

namespace {

// Loads 4 mask bytes as doubles in {0.0, 1.0}.
inline __m256d load_mask4(const std::uint8_t* m) {
    const int packed = m[0] | (m[1] << 8) | (m[2] << 16) | (static_cast<int>(m[3]) << 24);
    const __m128i bytes = _mm_cvtsi32_si128(packed);
    return _mm256_cvtepi32_pd(_mm_cvtepu8_epi32(bytes));
}

inline void laplacian_px(const double* row, const double* rup, const double* rdn,
                         int x, int w, double* o) {
    const double c = row[x];
    const double left = row[reflect_index(x - 1, w)];
    const double right = row[reflect_index(x + 1, w)];
    o[x] = ((rup[x] + rdn[x]) + (left + right)) - 4.0 * c;
}

inline void ac_step_px(const double* row, const double* rup, const double* rdn,
                       const double* anc, const std::uint8_t* m, int x, int w,
                       double eps2, double dt, double mu, double lo, double hi, double* o) {
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

} // namespace

void laplacian(const double* f, int h, int w, double* out) {
    const __m256d four = _mm256_set1_pd(4.0);
    for (int y = 0; y < h; ++y) {
        const int yu = reflect_index(y - 1, h);
        const int yd = reflect_index(y + 1, h);
        const double* row = f + static_cast<std::size_t>(y) * w;
        const double* rup = f + static_cast<std::size_t>(yu) * w;
        const double* rdn = f + static_cast<std::size_t>(yd) * w;
        double* o = out + static_cast<std::size_t>(y) * w;
        int x = 0;
        if (w >= 6) {
            laplacian_px(row, rup, rdn, 0, w, o);
            x = 1;
            for (; x + 4 <= w - 1; x += 4) {
                const __m256d c = _mm256_loadu_pd(row + x);
                const __m256d l = _mm256_loadu_pd(row + x - 1);
                const __m256d r = _mm256_loadu_pd(row + x + 1);
                const __m256d up = _mm256_loadu_pd(rup + x);
                const __m256d dn = _mm256_loadu_pd(rdn + x);
                const __m256d lap = _mm256_sub_pd(
                    _mm256_add_pd(_mm256_add_pd(up, dn), _mm256_add_pd(l, r)),
                    _mm256_mul_pd(four, c));
                _mm256_storeu_pd(o + x, lap);
            }
        }
        for (; x < w; ++x) laplacian_px(row, rup, rdn, x, w, o);
    }
}

void ac_step(const double* u, const double* anchor, const std::uint8_t* mask,
             int h, int w, double eps2, double dt, double mu,
             double lo, double hi, double* out) {
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d eps2v = _mm256_set1_pd(eps2);
    const __m256d dtv = _mm256_set1_pd(dt);
    const __m256d muv = _mm256_set1_pd(mu);
    const __m256d lov = _mm256_set1_pd(lo);
    const __m256d hiv = _mm256_set1_pd(hi);
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
        int x = 0;
        if (w >= 6) {
            ac_step_px(row, rup, rdn, anc, m, 0, w, eps2, dt, mu, lo, hi, o);
            x = 1;
            for (; x + 4 <= w - 1; x += 4) {
                const __m256d c = _mm256_loadu_pd(row + x);
                const __m256d l = _mm256_loadu_pd(row + x - 1);
                const __m256d r = _mm256_loadu_pd(row + x + 1);
                const __m256d up = _mm256_loadu_pd(rup + x);
                const __m256d dn = _mm256_loadu_pd(rdn + x);
                const __m256d lap = _mm256_sub_pd(
                    _mm256_add_pd(_mm256_add_pd(up, dn), _mm256_add_pd(l, r)),
                    _mm256_mul_pd(four, c));
                const __m256d cube = _mm256_mul_pd(_mm256_mul_pd(c, c), c);
                const __m256d res =
                    _mm256_sub_pd(_mm256_mul_pd(eps2v, lap), _mm256_sub_pd(cube, c));
                const __m256d md = load_mask4(m + x);
                const __m256d inside = _mm256_cmp_pd(md, zero, _CMP_NEQ_OQ);
                const __m256d mu_eff = _mm256_blendv_pd(muv, zero, inside);
                const __m256d dtmu = _mm256_mul_pd(dtv, mu_eff);
                const __m256d numer = _mm256_add_pd(
                    _mm256_add_pd(c, _mm256_mul_pd(dtv, res)),
                    _mm256_mul_pd(dtmu, _mm256_loadu_pd(anc + x)));
                const __m256d v = _mm256_div_pd(numer, _mm256_add_pd(one, dtmu));
                _mm256_storeu_pd(o + x, _mm256_min_pd(_mm256_max_pd(v, lov), hiv));
            }
        }
        for (; x < w; ++x)
            ac_step_px(row, rup, rdn, anc, m, x, w, eps2, dt, mu, lo, hi, o);
    }
}

void conv1d_rows(const double* f, int h, int w, const double* k, int radius, double* out) {
    const int taps = 2 * radius + 1;
    for (int y = 0; y < h; ++y) {
        const double* row = f + static_cast<std::size_t>(y) * w;
        double* o = out + static_cast<std::size_t>(y) * w;
        int x = 0;
        if (w >= taps + 8) {
            for (; x < radius; ++x) {
                const double c = row[x];
                double acc = 0.0;
                for (int j = 0; j < taps; ++j)
                    acc += k[j] * (row[reflect_index(x + j - radius, w)] - c);
                o[x] = c + acc;
            }
            for (; x + 4 <= w - radius; x += 4) {
                const __m256d c = _mm256_loadu_pd(row + x);
                __m256d acc = _mm256_setzero_pd();
                for (int j = 0; j < taps; ++j) {
                    const __m256d v = _mm256_loadu_pd(row + x + j - radius);
                    acc = _mm256_add_pd(
                        acc, _mm256_mul_pd(_mm256_set1_pd(k[j]), _mm256_sub_pd(v, c)));
                }
                _mm256_storeu_pd(o + x, _mm256_add_pd(c, acc));
            }
        }
        for (; x < w; ++x) {
            const double c = row[x];
            double acc = 0.0;
            for (int j = 0; j < taps; ++j)
                acc += k[j] * (row[reflect_index(x + j - radius, w)] - c);
            o[x] = c + acc;
        }
    }
}

void conv1d_cols(const double* f, int h, int w, const double* k, int radius, double* out) {
    const int taps = 2 * radius + 1;
    for (int y = 0; y < h; ++y) {
        const double* row = f + static_cast<std::size_t>(y) * w;
        double* o = out + static_cast<std::size_t>(y) * w;
        int x = 0;
        for (; x + 4 <= w; x += 4) {
            const __m256d c = _mm256_loadu_pd(row + x);
            __m256d acc = _mm256_setzero_pd();
            for (int j = 0; j < taps; ++j) {
                const int yy = reflect_index(y + j - radius, h);
                const __m256d v = _mm256_loadu_pd(f + static_cast<std::size_t>(yy) * w + x);
                acc = _mm256_add_pd(acc,
                                    _mm256_mul_pd(_mm256_set1_pd(k[j]), _mm256_sub_pd(v, c)));
            }
            _mm256_storeu_pd(o + x, _mm256_add_pd(c, acc));
        }
        for (; x < w; ++x) {
            const double c = row[x];
            double acc = 0.0;
            for (int j = 0; j < taps; ++j) {
                const int yy = reflect_index(y + j - radius, h);
                acc += k[j] * (f[static_cast<std::size_t>(yy) * w + x] - c);
            }
            o[x] = c + acc;
        }
    }
}

} // namespace defectforge::kernels::avx2

#endif // DEFECTFORGE_HAVE_AVX2_BUILD
