#include "defectforge/ops/wavelet.hpp"

namespace defectforge {

HaarSubbands haar_dwt(const ScalarField& field) {
    if (field.height % 2 != 0 || field.width % 2 != 0)
        throw DimensionError("haar_dwt requires even dimensions");
    const int hh = field.height / 2;
    const int hw = field.width / 2;
    HaarSubbands s{ScalarField(hh, hw), ScalarField(hh, hw), ScalarField(hh, hw),
                   ScalarField(hh, hw)};
    for (int i = 0; i < hh; ++i) {
        for (int j = 0; j < hw; ++j) {
            const double a = field.at(2 * i, 2 * j);
            const double b = field.at(2 * i, 2 * j + 1);
            const double c = field.at(2 * i + 1, 2 * j);
            const double d = field.at(2 * i + 1, 2 * j + 1);
            s.ll.at(i, j) = ((a + b) + (c + d)) * 0.5;
            s.lh.at(i, j) = ((a - b) + (c - d)) * 0.5;
            s.hl.at(i, j) = ((a + b) - (c + d)) * 0.5;
            s.hh.at(i, j) = ((a - b) - (c - d)) * 0.5;
        }
    }
    return s;
}

ScalarField haar_idwt(const HaarSubbands& s) {
    if (!s.ll.same_dims(s.lh) || !s.ll.same_dims(s.hl) || !s.ll.same_dims(s.hh))
        throw DimensionError("haar_idwt requires four subbands of equal dimensions");
    ScalarField out(s.ll.height * 2, s.ll.width * 2);
    for (int i = 0; i < s.ll.height; ++i) {
        for (int j = 0; j < s.ll.width; ++j) {
            const double ll = s.ll.at(i, j);
            const double lh = s.lh.at(i, j);
            const double hl = s.hl.at(i, j);
            const double hh = s.hh.at(i, j);
            out.at(2 * i, 2 * j) = ((ll + lh) + (hl + hh)) * 0.5;
            out.at(2 * i, 2 * j + 1) = ((ll - lh) + (hl - hh)) * 0.5;
            out.at(2 * i + 1, 2 * j) = ((ll + lh) - (hl + hh)) * 0.5;
            out.at(2 * i + 1, 2 * j + 1) = ((ll - lh) - (hl - hh)) * 0.5;
        }
    }
    return out;
}

} // namespace defectforge
