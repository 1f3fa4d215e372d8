#include "defectforge/ops/filters.hpp"

#include "defectforge/kernels/kernels.hpp"

#include <cmath>
#include <vector>

namespace defectforge {

ScalarField gaussian_blur(const ScalarField& field, double sigma) {
    if (!(sigma > 0.0)) throw ParameterError("gaussian_blur requires sigma > 0");
    ScalarField::check_dims(field.height, field.width);

    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
    double total = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        k[static_cast<std::size_t>(i + radius)] = w;
        total += w;
    }
    for (auto& w : k) w /= total;

    ScalarField tmp(field.height, field.width);
    ScalarField out(field.height, field.width);
    kernels::conv1d_rows(field.data.data(), field.height, field.width, k.data(), radius,
                         tmp.data.data());
    kernels::conv1d_cols(tmp.data.data(), field.height, field.width, k.data(), radius,
                         out.data.data());
    return out;
}

ScalarField laplacian_hf(const ScalarField& field) {
    if (field.height < 3 || field.width < 3)
        throw DimensionError("laplacian_hf requires a field of at least 3x3");
    ScalarField out(field.height, field.width);
    kernels::laplacian(field.data.data(), field.height, field.width, out.data.data());
    return out;
}

} // namespace defectforge
