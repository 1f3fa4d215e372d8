#pragma once

#include <cstdint>
#include <string>

namespace defectforge::kernels {

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2 variant, selected once at startup (env DEFECTFORGE_KERNEL=scalar|avx2
// overrides auto-detection; tests use force_impl).
//
// Contract: every variant of a kernel is bit-identical to the scalar
// reference. Per-element operation order is fixed, FMA contraction is
// disabled for these translation units, and reductions are not vectorized.
// Dispatch therefore never changes output bytes, which the dataset
// determinism guarantee relies on.
//
// Boundary handling for stencils/convolutions is edge-duplicating reflection
// (… c b a | a b c … ), so the 4-neighbor Laplacian realizes a no-flux
// boundary: out-of-range neighbors alias the border sample and contribute
// zero difference.

enum class Impl { Scalar, Avx2 };

const char* impl_name(Impl impl);
bool impl_supported(Impl impl);

/// Implementation selected for dispatch (auto-detected on first use).
Impl active_impl();

/// Force a specific implementation; throws ParameterError if unsupported on
/// this CPU. Intended for tests and benchmarking.
void force_impl(Impl impl);

// --- kernels ---------------------------------------------------------------

// 4-neighbor Laplacian with reflected borders:
//   out = ((up + down) + (left + right)) - 4*c
void laplacian(const double* f, int h, int w, double* out);

// One semi-implicit Allen-Cahn relaxation step on a single channel:
//   lap    = ((up + down) + (left + right)) - 4*c
//   res    = eps2*lap - ((c*c)*c - c)
//   mu_eff = mask ? 0 : mu              (anchor applies outside the mask)
//   v      = (c + dt*res + (dt*mu_eff)*anchor) / (1 + dt*mu_eff)
//   out    = min(max(v, lo), hi)
// `u` and `out` must not alias (Jacobi update over the previous state).
void ac_step(const double* u, const double* anchor, const std::uint8_t* mask,
             int h, int w, double eps2, double dt, double mu,
             double lo, double hi, double* out);

// Horizontal 1D correlation in difference form (exact on constants):
//   out(y,x) = f(y,x) + sum_j k[j] * (f(y, reflect(x+j-radius)) - f(y,x))
void conv1d_rows(const double* f, int h, int w, const double* k, int radius, double* out);

// Vertical counterpart of conv1d_rows.
void conv1d_cols(const double* f, int h, int w, const double* k, int radius, double* out);

// --- direct entry points (equivalence tests) -------------------------------

namespace scalar {
void laplacian(const double* f, int h, int w, double* out);
void ac_step(const double* u, const double* anchor, const std::uint8_t* mask,
             int h, int w, double eps2, double dt, double mu,
             double lo, double hi, double* out);
void conv1d_rows(const double* f, int h, int w, const double* k, int radius, double* out);
void conv1d_cols(const double* f, int h, int w, const double* k, int radius, double* out);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DEFECTFORGE_HAVE_AVX2_BUILD 1
namespace avx2 {
void laplacian(const double* f, int h, int w, double* out);
void ac_step(const double* u, const double* anchor, const std::uint8_t* mask,
             int h, int w, double eps2, double dt, double mu,
             double lo, double hi, double* out);
void conv1d_rows(const double* f, int h, int w, const double* k, int radius, double* out);
void conv1d_cols(const double* f, int h, int w, const double* k, int radius, double* out);
} // namespace avx2
#endif

/// Reflected index into [0, n): -1 -> 0, n -> n-1 (edge-duplicating).
inline int reflect_index(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

} // namespace defectforge::kernels
