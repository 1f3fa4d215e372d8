#pragma once

#include "defectforge/core/field.hpp"

#include <array>

namespace defectforge {

// Deterministic wavelet-PDE image filter: sharpen with f - eps_p * lap(f),
// one-level Haar decomposition, per-subband gains (LL, LH, HL, HH) in place
// of a learned subband mix, inverse transform. Odd dimensions are padded by
// edge duplication and cropped back. eps_p = 0 with unit gains is the
// identity up to Haar roundtrip error.
PhaseImage pde_wave_filter(const PhaseImage& u, double eps_p,
                           const std::array<double, 4>& subband_gain);

ScalarField pde_wave_filter(const ScalarField& f, double eps_p,
                            const std::array<double, 4>& subband_gain);

} // namespace defectforge
