#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace texdesc {

/// Single-channel image with luminance values in [0,1], row-major.
class ImagePlane {
public:
    ImagePlane() = default;
    ImagePlane(int width, int height, std::vector<float> values);
    ImagePlane(int width, int height, float fill = 0.0f);

    int width() const { return width_; }
    int height() const { return height_; }

    float at(int x, int y) const { return values_[static_cast<std::size_t>(y) * width_ + x]; }
    float& at(int x, int y) { return values_[static_cast<std::size_t>(y) * width_ + x]; }

    const std::vector<float>& values() const { return values_; }
    std::vector<float>& values() { return values_; }

    // Replicate-border access for gradient and neighborhood code.
    float at_clamped(int x, int y) const;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<float> values_;
};

/// Three-channel image, planes share dimensions, values in [0,1].
class ImageRgb {
public:
    ImageRgb() = default;
    ImageRgb(ImagePlane r, ImagePlane g, ImagePlane b);

    int width() const { return planes_[0].width(); }
    int height() const { return planes_[0].height(); }

    const ImagePlane& plane(int c) const { return planes_[c]; }
    ImagePlane& plane(int c) { return planes_[c]; }

    /// ITU-R BT.601 luminance.
    ImagePlane to_gray() const;

private:
    std::array<ImagePlane, 3> planes_;
};

}  // namespace texdesc
