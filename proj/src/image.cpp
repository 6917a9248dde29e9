#include "texdesc/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace texdesc {

ImagePlane::ImagePlane(int width, int height, std::vector<float> values)
    : width_(width), height_(height), values_(std::move(values)) {
    if (width_ < 1 || height_ < 1) {
        throw std::invalid_argument("ImagePlane: dimensions must be >= 1");
    }
    if (values_.size() != static_cast<std::size_t>(width_) * height_) {
        throw std::invalid_argument("ImagePlane: value count does not match dimensions");
    }
    for (float v : values_) {
        if (!std::isfinite(v) || v < 0.0f || v > 1.0f) {
            throw std::invalid_argument("ImagePlane: values must be finite and in [0,1]");
        }
    }
}

ImagePlane::ImagePlane(int width, int height, float fill)
    : width_(width), height_(height),
      values_(static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0), fill) {
    if (width_ < 1 || height_ < 1) {
        throw std::invalid_argument("ImagePlane: dimensions must be >= 1");
    }
    if (!std::isfinite(fill) || fill < 0.0f || fill > 1.0f) {
        throw std::invalid_argument("ImagePlane: fill must be finite and in [0,1]");
    }
}

float ImagePlane::at_clamped(int x, int y) const {
    x = std::clamp(x, 0, width_ - 1);
    y = std::clamp(y, 0, height_ - 1);
    return at(x, y);
}

ImageRgb::ImageRgb(ImagePlane r, ImagePlane g, ImagePlane b)
    : planes_{std::move(r), std::move(g), std::move(b)} {
    if (planes_[1].width() != planes_[0].width() || planes_[1].height() != planes_[0].height() ||
        planes_[2].width() != planes_[0].width() || planes_[2].height() != planes_[0].height()) {
        throw std::invalid_argument("ImageRgb: planes must share dimensions");
    }
}

ImagePlane ImageRgb::to_gray() const {
    const int w = width(), h = height();
    std::vector<float> out(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const float v = 0.299f * planes_[0].at(x, y) + 0.587f * planes_[1].at(x, y) +
                            0.114f * planes_[2].at(x, y);
            out[static_cast<std::size_t>(y) * w + x] = std::clamp(v, 0.0f, 1.0f);
        }
    }
    return ImagePlane(w, h, std::move(out));
}

}  // namespace texdesc
