#include "defectforge/refine/wave_filter.hpp"

#include "defectforge/kernels/kernels.hpp"
#include "defectforge/ops/wavelet.hpp"

#include <algorithm>

namespace defectforge {

ScalarField pde_wave_filter(const ScalarField& f, double eps_p,
                            const std::array<double, 4>& subband_gain) {
    ScalarField::check_dims(f.height, f.width);

    ScalarField sharp(f.height, f.width);
    kernels::laplacian(f.data.data(), f.height, f.width, sharp.data.data());
    for (std::size_t i = 0; i < f.data.size(); ++i)
        sharp.data[i] = f.data[i] - eps_p * sharp.data[i];

    const int ph = sharp.height + (sharp.height % 2);
    const int pw = sharp.width + (sharp.width % 2);
    ScalarField padded(ph, pw);
    for (int y = 0; y < ph; ++y)
        for (int x = 0; x < pw; ++x)
            padded.at(y, x) = sharp.at(std::min(y, sharp.height - 1),
                                       std::min(x, sharp.width - 1));

    HaarSubbands s = haar_dwt(padded);
    ScalarField* bands[4] = {&s.ll, &s.lh, &s.hl, &s.hh};
    for (int b = 0; b < 4; ++b)
        for (auto& v : bands[b]->data) v *= subband_gain[static_cast<std::size_t>(b)];

    const ScalarField recon = haar_idwt(s);
    ScalarField out(f.height, f.width);
    for (int y = 0; y < f.height; ++y)
        for (int x = 0; x < f.width; ++x) out.at(y, x) = recon.at(y, x);
    return out;
}

PhaseImage pde_wave_filter(const PhaseImage& u, double eps_p,
                           const std::array<double, 4>& subband_gain) {
    PhaseImage out;
    for (int c = 0; c < 3; ++c)
        out.channels[c] = pde_wave_filter(u.channels[c], eps_p, subband_gain);
    return out;
}

} // namespace defectforge
