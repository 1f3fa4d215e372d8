#include "defectforge/ops/tps.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace defectforge {

namespace {

inline double tps_kernel(double r2) {
    // phi(r) = r^2 log r = 0.5 * r^2 log r^2; exactly 0 at r = 0.
    return r2 > 0.0 ? 0.5 * r2 * std::log(r2) : 0.0;
}

} // namespace

std::pair<double, double> TpsModel::displacement(double y, double x) const {
    double dy = ay[0] + ay[1] * y + ay[2] * x;
    double dx = ax[0] + ax[1] * y + ax[2] * x;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const double ry = y - src[i].first;
        const double rx = x - src[i].second;
        const double k = tps_kernel(ry * ry + rx * rx);
        dy += wy[i] * k;
        dx += wx[i] * k;
    }
    return {dy, dx};
}

TpsModel tps_fit(const std::vector<std::pair<double, double>>& src,
                 const std::vector<std::pair<double, double>>& displacements,
                 double ridge) {
    const auto n = src.size();
    if (n < 3) throw ParameterError("tps_fit requires at least 3 control points");
    if (displacements.size() != n)
        throw ParameterError("tps_fit: one displacement per control point required");
    if (ridge < 0.0) throw ParameterError("tps_fit: ridge must be >= 0");

    const auto m = static_cast<Eigen::Index>(n) + 3;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(m, 2);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double ry = src[i].first - src[j].first;
            const double rx = src[i].second - src[j].second;
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                tps_kernel(ry * ry + rx * rx);
        }
        A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += ridge;
        const auto r = static_cast<Eigen::Index>(i);
        A(r, static_cast<Eigen::Index>(n)) = 1.0;
        A(r, static_cast<Eigen::Index>(n) + 1) = src[i].first;
        A(r, static_cast<Eigen::Index>(n) + 2) = src[i].second;
        A(static_cast<Eigen::Index>(n), r) = 1.0;
        A(static_cast<Eigen::Index>(n) + 1, r) = src[i].first;
        A(static_cast<Eigen::Index>(n) + 2, r) = src[i].second;
        rhs(r, 0) = displacements[i].first;
        rhs(r, 1) = displacements[i].second;
    }

    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (!qr.isInvertible())
        throw NumericError("tps_fit: singular system after ridge (rank " +
                           std::to_string(qr.rank()) + " of " + std::to_string(m) +
                           "); control points are degenerate");
    const Eigen::MatrixXd sol = qr.solve(rhs);
    if (!sol.allFinite())
        throw NumericError("tps_fit: singular system (non-finite solution)");
    const double resid = (A * sol - rhs).cwiseAbs().maxCoeff();
    const double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
    if (!(resid <= 1e-6 * scale))
        throw NumericError("tps_fit: system ill-conditioned, residual " + std::to_string(resid));

    TpsModel model;
    model.src = src;
    model.ridge = ridge;
    model.wy.resize(n);
    model.wx.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        model.wy[i] = sol(static_cast<Eigen::Index>(i), 0);
        model.wx[i] = sol(static_cast<Eigen::Index>(i), 1);
    }
    model.ay = {sol(static_cast<Eigen::Index>(n), 0), sol(static_cast<Eigen::Index>(n) + 1, 0),
                sol(static_cast<Eigen::Index>(n) + 2, 0)};
    model.ax = {sol(static_cast<Eigen::Index>(n), 1), sol(static_cast<Eigen::Index>(n) + 1, 1),
                sol(static_cast<Eigen::Index>(n) + 2, 1)};
    return model;
}

DisplacementField tps_eval_field(const TpsModel& model, int height, int width) {
    ScalarField::check_dims(height, width);
    DisplacementField field{ScalarField(height, width), ScalarField(height, width)};
    for (int v = 0; v < height; ++v) {
        for (int u = 0; u < width; ++u) {
            const auto [dy, dx] = model.displacement(static_cast<double>(v),
                                                     static_cast<double>(u));
            field.map_x.at(v, u) = static_cast<double>(u) - dx;
            field.map_y.at(v, u) = static_cast<double>(v) - dy;
        }
    }
    return field;
}

} // namespace defectforge
