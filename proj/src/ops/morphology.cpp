#include "defectforge/ops/morphology.hpp"

namespace defectforge {

namespace {

void check_kernel(int kernel_size) {
    if (kernel_size < 1 || kernel_size % 2 == 0)
        throw ParameterError("morphology kernel_size must be odd and >= 1, got " +
                             std::to_string(kernel_size));
}

} // namespace

BinaryMask dilate(const BinaryMask& mask, int kernel_size) {
    check_kernel(kernel_size);
    const int r = kernel_size / 2;
    BinaryMask out(mask.height, mask.width);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            std::uint8_t v = 0;
            for (int dy = -r; dy <= r && !v; ++dy) {
                const int yy = y + dy;
                if (yy < 0 || yy >= mask.height) continue;
                for (int dx = -r; dx <= r; ++dx) {
                    const int xx = x + dx;
                    if (xx < 0 || xx >= mask.width) continue;
                    if (mask.at(yy, xx)) {
                        v = 1;
                        break;
                    }
                }
            }
            out.at(y, x) = v;
        }
    }
    return out;
}

BinaryMask erode(const BinaryMask& mask, int kernel_size) {
    check_kernel(kernel_size);
    const int r = kernel_size / 2;
    BinaryMask out(mask.height, mask.width);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            std::uint8_t v = 1;
            for (int dy = -r; dy <= r && v; ++dy) {
                const int yy = y + dy;
                for (int dx = -r; dx <= r; ++dx) {
                    const int xx = x + dx;
                    // Outside the frame is background.
                    if (yy < 0 || yy >= mask.height || xx < 0 || xx >= mask.width ||
                        !mask.at(yy, xx)) {
                        v = 0;
                        break;
                    }
                }
            }
            out.at(y, x) = v;
        }
    }
    return out;
}

BinaryMask morph(const BinaryMask& mask, MorphOp op, int kernel_size) {
    switch (op) {
        case MorphOp::Dilate: return dilate(mask, kernel_size);
        case MorphOp::Erode: return erode(mask, kernel_size);
        case MorphOp::Open: return dilate(erode(mask, kernel_size), kernel_size);
        case MorphOp::Close: return erode(dilate(mask, kernel_size), kernel_size);
    }
    throw ParameterError("unknown morphology op");
}

} // namespace defectforge
