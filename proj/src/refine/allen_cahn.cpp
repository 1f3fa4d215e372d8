#include "defectforge/refine/allen_cahn.hpp"

#include "defectforge/kernels/kernels.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <string>

namespace defectforge {

PhaseImage allen_cahn_residual(const PhaseImage& u, double eps2) {
    if (!(eps2 > 0.0)) throw ParameterError("allen_cahn_residual requires eps2 > 0");
    const int h = u.height();
    const int w = u.width();
    PhaseImage res(h, w);
    ScalarField lap(h, w);
    for (int c = 0; c < 3; ++c) {
        kernels::laplacian(u.channels[c].data.data(), h, w, lap.data.data());
        const auto& uc = u.channels[c].data;
        auto& rc = res.channels[c].data;
        for (std::size_t i = 0; i < uc.size(); ++i) {
            const double v = uc[i];
            rc[i] = eps2 * lap.data[i] - ((v * v) * v - v);
        }
    }
    return res;
}

double pde_loss(const PhaseImage& u, const BinaryMask& mask, double eps2) {
    if (mask.height != u.height() || mask.width != u.width())
        throw DimensionError("pde_loss: mask dimensions must match the image");
    const PhaseImage res = allen_cahn_residual(u, eps2);
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto& rc = res.channels[c].data;
        for (std::size_t i = 0; i < rc.size(); ++i)
            if (mask.data[i]) sum += rc[i] * rc[i];
    }
    return sum;
}

void ac_step_inplace(PhaseImage& u, const PhaseImage& init, const BinaryMask& mask,
                     const AcParams& params) {
    const int h = u.height();
    const int w = u.width();
    ScalarField next(h, w);
    for (int c = 0; c < 3; ++c) {
        kernels::ac_step(u.channels[c].data.data(), init.channels[c].data.data(),
                         mask.data.data(), h, w, params.eps2, params.dt, params.fidelity_mu,
                         kPhaseClampLo, kPhaseClampHi, next.data.data());
        u.channels[c].data.swap(next.data);
    }
}

PhaseImage ac_relax(const PhaseImage& init, const BinaryMask& mask, const AcParams& params) {
    if (mask.height != init.height() || mask.width != init.width())
        throw DimensionError("ac_relax: mask dimensions must match the image");
    if (!(params.eps2 > 0.0) || !(params.dt > 0.0) || params.n_steps < 0)
        throw ParameterError("ac_relax: eps2 > 0, dt > 0 and n_steps >= 0 required");

    PhaseImage u = init;
    for (int step = 0; step < params.n_steps; ++step) {
        ac_step_inplace(u, init, mask, params);
        for (int c = 0; c < 3; ++c) {
            for (double v : u.channels[c].data) {
                if (!std::isfinite(v))
                    throw NumericError("ac_relax: non-finite value at step " +
                                       std::to_string(step));
            }
        }
    }
    return u;
}

void to_json(nlohmann::json& j, const AcParams& p) {
    j = nlohmann::json{{"eps2", p.eps2},
                       {"dt", p.dt},
                       {"n_steps", p.n_steps},
                       {"fidelity_mu", p.fidelity_mu}};
}

void from_json(const nlohmann::json& j, AcParams& p) {
    if (auto it = j.find("eps2"); it != j.end()) it->get_to(p.eps2);
    if (auto it = j.find("dt"); it != j.end()) it->get_to(p.dt);
    if (auto it = j.find("n_steps"); it != j.end()) it->get_to(p.n_steps);
    if (auto it = j.find("fidelity_mu"); it != j.end()) it->get_to(p.fidelity_mu);
}

} // namespace defectforge
