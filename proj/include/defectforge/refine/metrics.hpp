#pragma once

#include "defectforge/core/field.hpp"
#include "defectforge/overlay/overlay.hpp"

#include <nlohmann/json_fwd.hpp>

namespace defectforge {

struct RefineMetrics {
    double pde_loss = 0.0;     // ||Res_AC(u) . mask||^2
    double tv_loss = 0.0;      // sum_c |forward dy| + |forward dx|
    double region_loss = 0.0;  // L1(normal vs orig) + beta*(L1(anom vs b1) + delta*L2^2(u,orig))
    double wave_hf_loss = 0.0; // L1 of 3x3 Laplacian response inside the mask
    double color_loss = 0.0;   // sum over masked pixels of (u - z)^2
    double rec_normal = 0.0;   // sum (u - orig)^2 outside the mask
    double rec_anom = 0.0;     // sum (u - orig)^2 inside the mask
};

// All metrics are plain sums over channels and pixels of phase-space images
// ([-1,1]); the reference color z is mapped to phase (2z-1) for color_loss.
// b1 is the coarse-stage image the anomaly region is compared against.
RefineMetrics refinement_metrics(const PhaseImage& u, const PhaseImage& orig,
                                 const PhaseImage& b1, const BinaryMask& mask,
                                 const ReferenceColor& z, double beta, double delta,
                                 double eps2);

void to_json(nlohmann::json& j, const RefineMetrics& m);
void from_json(const nlohmann::json& j, RefineMetrics& m);

} // namespace defectforge
