#include "defectforge/core/field.hpp"

#include <algorithm>
#include <cmath>

namespace defectforge {

PhaseImage color_to_phase(const ColorImage& img) {
    PhaseImage out(img.height(), img.width());
    for (int c = 0; c < 3; ++c) {
        const auto& src = img.channels[c].data;
        auto& dst = out.channels[c].data;
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] = 2.0 * src[i] - 1.0;
    }
    return out;
}

ColorImage phase_to_color(const PhaseImage& img) {
    ColorImage out(img.height(), img.width());
    for (int c = 0; c < 3; ++c) {
        const auto& src = img.channels[c].data;
        auto& dst = out.channels[c].data;
        for (std::size_t i = 0; i < src.size(); ++i)
            dst[i] = std::clamp((src[i] + 1.0) * 0.5, 0.0, 1.0);
    }
    return out;
}

void require_finite(const ScalarField& f, const char* where) {
    for (double v : f.data) {
        if (!std::isfinite(v))
            throw NumericError(std::string("non-finite value in ") + where);
    }
}

} // namespace defectforge
