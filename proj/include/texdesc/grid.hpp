#pragma once

#include <Eigen/Core>

#include <vector>

#include "texdesc/image.hpp"

namespace texdesc {

/// Unclamped single-channel raster used for intermediate filtering results
/// (values may leave [0,1], unlike ImagePlane).
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<float> v;

    Grid() = default;
    Grid(int w, int h) : width(w), height(h), v(static_cast<std::size_t>(w) * h, 0.0f) {}

    float at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
    float& at(int x, int y) { return v[static_cast<std::size_t>(y) * width + x]; }
};

Grid grid_from_plane(const ImagePlane& image);

/// Half-sample symmetric boundary index (…cba|abc…cba|abc…).
int sym_index(int i, int n);

/// True 2-D convolution (kernel flipped), symmetric padding, same-size output.
Grid convolve2d(const Grid& image, const Eigen::MatrixXf& kernel);

/// Separable Gaussian smoothing, symmetric padding. sigma <= 0 is a copy.
Grid gaussian_blur(const Grid& image, double sigma);

Grid bilinear_resize(const Grid& image, int new_width, int new_height);

}  // namespace texdesc
