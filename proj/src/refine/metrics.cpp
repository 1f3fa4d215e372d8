#include "defectforge/refine/metrics.hpp"

#include "defectforge/ops/filters.hpp"
#include "defectforge/refine/allen_cahn.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace defectforge {

RefineMetrics refinement_metrics(const PhaseImage& u, const PhaseImage& orig,
                                 const PhaseImage& b1, const BinaryMask& mask,
                                 const ReferenceColor& z, double beta, double delta,
                                 double eps2) {
    const int h = u.height();
    const int w = u.width();
    if (orig.height() != h || orig.width() != w || b1.height() != h || b1.width() != w ||
        mask.height != h || mask.width != w)
        throw DimensionError("refinement_metrics: input dimensions must match");

    RefineMetrics m;
    m.pde_loss = pde_loss(u, mask, eps2);

    double l1_normal = 0.0, l1_anom = 0.0, l2_global = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto& uc = u.channels[c].data;
        const auto& oc = orig.channels[c].data;
        const auto& bc = b1.channels[c].data;
        const double zc = 2.0 * z.z[static_cast<std::size_t>(c)] - 1.0;
        for (std::size_t i = 0; i < uc.size(); ++i) {
            const double du = uc[i] - oc[i];
            l2_global += du * du;
            if (mask.data[i]) {
                l1_anom += std::abs(uc[i] - bc[i]);
                m.rec_anom += du * du;
                const double dz = uc[i] - zc;
                m.color_loss += dz * dz;
            } else {
                l1_normal += std::abs(du);
                m.rec_normal += du * du;
            }
        }

        // forward-difference total variation
        const auto& f = u.channels[c];
        for (int y = 0; y + 1 < h; ++y)
            for (int x = 0; x < w; ++x) m.tv_loss += std::abs(f.at(y + 1, x) - f.at(y, x));
        for (int y = 0; y < h; ++y)
            for (int x = 0; x + 1 < w; ++x) m.tv_loss += std::abs(f.at(y, x + 1) - f.at(y, x));

        const ScalarField hf = laplacian_hf(u.channels[c]);
        for (std::size_t i = 0; i < hf.data.size(); ++i)
            if (mask.data[i]) m.wave_hf_loss += std::abs(hf.data[i]);
    }
    m.region_loss = l1_normal + beta * (l1_anom + delta * l2_global);
    return m;
}

void to_json(nlohmann::json& j, const RefineMetrics& m) {
    j = nlohmann::json{{"pde_loss", m.pde_loss},       {"tv_loss", m.tv_loss},
                       {"region_loss", m.region_loss}, {"wave_hf_loss", m.wave_hf_loss},
                       {"color_loss", m.color_loss},   {"rec_normal", m.rec_normal},
                       {"rec_anom", m.rec_anom}};
}

void from_json(const nlohmann::json& j, RefineMetrics& m) {
    j.at("pde_loss").get_to(m.pde_loss);
    j.at("tv_loss").get_to(m.tv_loss);
    j.at("region_loss").get_to(m.region_loss);
    j.at("wave_hf_loss").get_to(m.wave_hf_loss);
    j.at("color_loss").get_to(m.color_loss);
    j.at("rec_normal").get_to(m.rec_normal);
    j.at("rec_anom").get_to(m.rec_anom);
}

} // namespace defectforge
