#include "defectforge/pipeline/foreground.hpp"

#include "defectforge/io/png_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace defectforge {

namespace {

int otsu_threshold(const std::array<std::uint64_t, 256>& hist, std::uint64_t total) {
    double sum = 0.0;
    for (int i = 0; i < 256; ++i) sum += static_cast<double>(i) * hist[static_cast<std::size_t>(i)];
    double sum_b = 0.0;
    std::uint64_t w_b = 0;
    double best_var = -1.0;
    int best_t = 0;
    for (int t = 0; t < 256; ++t) {
        w_b += hist[static_cast<std::size_t>(t)];
        if (w_b == 0) continue;
        const std::uint64_t w_f = total - w_b;
        if (w_f == 0) break;
        sum_b += static_cast<double>(t) * hist[static_cast<std::size_t>(t)];
        const double m_b = sum_b / w_b;
        const double m_f = (sum - sum_b) / w_f;
        const double var = static_cast<double>(w_b) * static_cast<double>(w_f) *
                           (m_b - m_f) * (m_b - m_f);
        if (var > best_var) {
            best_var = var;
            best_t = t;
        }
    }
    return best_t;
}

BinaryMask largest_component(const BinaryMask& mask) {
    BinaryMask out(mask.height, mask.width);
    std::vector<int> label(mask.size(), -1);
    int best_label = -1;
    std::size_t best_size = 0;
    int next_label = 0;
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * mask.width + x;
            if (!mask.data[idx] || label[idx] >= 0) continue;
            const int cur = next_label++;
            std::size_t size = 0;
            stack.emplace_back(y, x);
            label[idx] = cur;
            while (!stack.empty()) {
                const auto [cy, cx] = stack.back();
                stack.pop_back();
                ++size;
                constexpr int dy[4] = {-1, 1, 0, 0};
                constexpr int dx[4] = {0, 0, -1, 1};
                for (int k = 0; k < 4; ++k) {
                    const int ny = cy + dy[k];
                    const int nx = cx + dx[k];
                    if (ny < 0 || ny >= mask.height || nx < 0 || nx >= mask.width) continue;
                    const std::size_t nidx = static_cast<std::size_t>(ny) * mask.width + nx;
                    if (mask.data[nidx] && label[nidx] < 0) {
                        label[nidx] = cur;
                        stack.emplace_back(ny, nx);
                    }
                }
            }
            if (size > best_size) {
                best_size = size;
                best_label = cur;
            }
        }
    }
    if (best_label >= 0)
        for (std::size_t i = 0; i < mask.size(); ++i)
            out.data[i] = label[i] == best_label ? 1 : 0;
    return out;
}

} // namespace

BinaryMask otsu_foreground(const ColorImage& image) {
    const int h = image.height();
    const int w = image.width();
    std::array<std::uint64_t, 256> hist{};
    std::vector<std::uint8_t> lum(static_cast<std::size_t>(h) * w);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double l = 255.0 * (0.299 * image.channels[0].at(y, x) +
                                      0.587 * image.channels[1].at(y, x) +
                                      0.114 * image.channels[2].at(y, x));
            const auto b = static_cast<std::uint8_t>(std::clamp(std::floor(l + 0.5), 0.0, 255.0));
            lum[static_cast<std::size_t>(y) * w + x] = b;
            ++hist[b];
        }
    const int t = otsu_threshold(hist, static_cast<std::uint64_t>(h) * w);
    BinaryMask bright(h, w);
    for (std::size_t i = 0; i < lum.size(); ++i) bright.data[i] = lum[i] > t ? 1 : 0;
    return largest_component(bright);
}

BinaryMask load_foreground(const std::string& image_path, const std::string& mask_path) {
    const ColorImage image = read_color_png(image_path);
    if (!mask_path.empty()) {
        const BinaryMask mask = read_mask_png(mask_path);
        if (mask.height != image.height() || mask.width != image.width())
            throw DimensionError("foreground mask dimensions do not match the image: " +
                                 mask_path);
        return mask;
    }
    return otsu_foreground(image);
}

} // namespace defectforge
