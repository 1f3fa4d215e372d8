#include "defectforge/kernels/kernels.hpp"

#include "defectforge/core/field.hpp"

#include <cstdlib>
#include <cstring>

namespace defectforge::kernels {

const char* impl_name(Impl impl) {
    switch (impl) {
        case Impl::Scalar: return "scalar";
        case Impl::Avx2: return "avx2";
    }
    return "?";
}

bool impl_supported(Impl impl) {
    if (impl == Impl::Scalar) return true;
#if defined(DEFECTFORGE_HAVE_AVX2_BUILD)
    if (impl == Impl::Avx2) return __builtin_cpu_supports("avx2") != 0;
#endif
    return false;
}

namespace {

Impl detect() {
    if (const char* env = std::getenv("DEFECTFORGE_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Impl::Scalar;
        if (std::strcmp(env, "avx2") == 0 && impl_supported(Impl::Avx2)) return Impl::Avx2;
        // Unknown or unsupported request falls through to auto-detection.
    }
    return impl_supported(Impl::Avx2) ? Impl::Avx2 : Impl::Scalar;
}

Impl& impl_slot() {
    static Impl impl = detect();
    return impl;
}

} // namespace

Impl active_impl() { return impl_slot(); }

void force_impl(Impl impl) {
    if (!impl_supported(impl))
        throw ParameterError(std::string("kernel impl not supported on this CPU: ") +
                             impl_name(impl));
    impl_slot() = impl;
}

void laplacian(const double* f, int h, int w, double* out) {
#if defined(DEFECTFORGE_HAVE_AVX2_BUILD)
    if (active_impl() == Impl::Avx2) return avx2::laplacian(f, h, w, out);
#endif
    scalar::laplacian(f, h, w, out);
}

void ac_step(const double* u, const double* anchor, const std::uint8_t* mask,
             int h, int w, double eps2, double dt, double mu,
             double lo, double hi, double* out) {
#if defined(DEFECTFORGE_HAVE_AVX2_BUILD)
    if (active_impl() == Impl::Avx2)
        return avx2::ac_step(u, anchor, mask, h, w, eps2, dt, mu, lo, hi, out);
#endif
    scalar::ac_step(u, anchor, mask, h, w, eps2, dt, mu, lo, hi, out);
}

void conv1d_rows(const double* f, int h, int w, const double* k, int radius, double* out) {
#if defined(DEFECTFORGE_HAVE_AVX2_BUILD)
    if (active_impl() == Impl::Avx2) return avx2::conv1d_rows(f, h, w, k, radius, out);
#endif
    scalar::conv1d_rows(f, h, w, k, radius, out);
}

void conv1d_cols(const double* f, int h, int w, const double* k, int radius, double* out) {
#if defined(DEFECTFORGE_HAVE_AVX2_BUILD)
    if (active_impl() == Impl::Avx2) return avx2::conv1d_cols(f, h, w, k, radius, out);
#endif
    scalar::conv1d_cols(f, h, w, k, radius, out);
}

} // namespace defectforge::kernels
