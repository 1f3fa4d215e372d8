#pragma once

#include "defectforge/core/field.hpp"

#include <nlohmann/json_fwd.hpp>

namespace defectforge {

// Allen-Cahn relaxation settings. Defaults satisfy the explicit-step
// stability bounds dt <= h^2/(4*eps2) (h = 1) and dt * 2 < 1 for the
// reaction term.
struct AcParams {
    double eps2 = 0.005;    // diffusion strength eps^2
    double dt = 0.1;        // explicit Euler step
    int n_steps = 500;
    double fidelity_mu = 4.0; // anchor to the initial image outside the mask
};

inline constexpr double kPhaseClampLo = -1.5;
inline constexpr double kPhaseClampHi = 1.5;

/// Res = eps2 * lap(u) - (u^3 - u) per channel; 4-neighbor Laplacian with
/// reflected borders.
PhaseImage allen_cahn_residual(const PhaseImage& u, double eps2);

/// Sum of squared residual over masked pixels, all channels.
double pde_loss(const PhaseImage& u, const BinaryMask& mask, double eps2);

// One relaxation step, Jacobi update over the previous state:
//   masked:    u <- u + dt * Res(u)
//   unmasked:  u <- (u + dt*Res(u) + dt*mu*init) / (1 + dt*mu)
// i.e. the fidelity anchor is treated implicitly so that the anchored flow is
// unconditionally stable in mu (mu -> inf pins u to init instead of blowing
// up the explicit step). Values are clamped to [-1.5, 1.5].
void ac_step_inplace(PhaseImage& u, const PhaseImage& init, const BinaryMask& mask,
                     const AcParams& params);

// Runs n_steps of ac_step_inplace from `init`; throws NumericError naming the
// step index if a non-finite value appears.
PhaseImage ac_relax(const PhaseImage& init, const BinaryMask& mask, const AcParams& params);

void to_json(nlohmann::json& j, const AcParams& p);
void from_json(const nlohmann::json& j, AcParams& p);

} // namespace defectforge
