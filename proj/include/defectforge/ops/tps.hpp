#pragma once

#include "defectforge/core/field.hpp"

#include <utility>
#include <vector>

namespace defectforge {

/// Backward sampling maps: map_x(v,u) / map_y(v,u) give the source column /
/// row each output pixel pulls from. Same dimensions as the remapped image.
struct DisplacementField {
    ScalarField map_x;
    ScalarField map_y;
};

// Thin-plate spline interpolant of 2D displacements: per axis
//   delta(p) = a0 + a1*y + a2*x + sum_i w_i * phi(|p - p_i|),
// phi(r) = r^2 log r (phi(0) = 0), with the usual side conditions
// sum w = sum w*y = sum w*x = 0 and a ridge term on the kernel block for
// conditioning. The affine part is what lets constant displacements
// reproduce exactly.
struct TpsModel {
    std::vector<std::pair<double, double>> src; // (y, x) control points
    std::vector<double> wy, wx;                 // kernel weights per axis
    std::vector<double> ay, ax;                 // affine coefficients {1, y, x}
    double ridge = 1e-8;

    /// Interpolated displacement (dy, dx) at (y, x).
    std::pair<double, double> displacement(double y, double x) const;
};

// Fits the TPS system for displacements (dy_i, dx_i) given at src points
// (y_i, x_i). Requires >= 3 non-collinear points; throws NumericError when
// the system is singular even after the ridge, ParameterError on bad input.
// Residual at the control points stays below 1e-6 px for solvable systems.
TpsModel tps_fit(const std::vector<std::pair<double, double>>& src,
                 const std::vector<std::pair<double, double>>& displacements,
                 double ridge = 1e-8);

// Evaluates the backward maps over an h×w grid:
//   map_x(v,u) = u - dx(v,u),  map_y(v,u) = v - dy(v,u).
DisplacementField tps_eval_field(const TpsModel& model, int height, int width);

} // namespace defectforge
