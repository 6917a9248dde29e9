#include "texdesc/dense_sift.hpp"

#include <cmath>
#include <stdexcept>

#include "texdesc/grid.hpp"

namespace texdesc {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr int kSpatialBins = 4;
constexpr int kOrientationBins = 8;
constexpr int kSiftDim = kSpatialBins * kSpatialBins * kOrientationBins;
constexpr float kClampThreshold = 0.2f;

struct Gradients {
    Grid magnitude;
    Grid orientation;  // [0, 2pi)
};

Gradients compute_gradients(const Grid& img) {
    Gradients g{Grid(img.width, img.height), Grid(img.width, img.height)};
    const int w = img.width, h = img.height;
    auto clamped = [&](int x, int y) {
        x = x < 0 ? 0 : (x >= w ? w - 1 : x);
        y = y < 0 ? 0 : (y >= h ? h - 1 : y);
        return img.at(x, y);
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const float gx = 0.5f * (clamped(x + 1, y) - clamped(x - 1, y));
            const float gy = 0.5f * (clamped(x, y + 1) - clamped(x, y - 1));
            g.magnitude.at(x, y) = std::sqrt(gx * gx + gy * gy);
            double theta = std::atan2(static_cast<double>(gy), static_cast<double>(gx));
            if (theta < 0.0) theta += kTwoPi;
            if (theta >= kTwoPi) theta = 0.0;
            g.orientation.at(x, y) = static_cast<float>(theta);
        }
    }
    return g;
}

void extract_at_scale(const Grid& img, double scale, const DenseSiftParams& p, DescriptorSet& out) {
    const int window = kSpatialBins * p.bin_size;
    const Gradients grads = compute_gradients(img);
    const double window_sigma = 2.0 * p.bin_size;
    const double center = 2.0 * p.bin_size - 0.5;

    std::vector<float> hist(kSiftDim);
    for (int y0 = 0; y0 + window <= img.height; y0 += p.step) {
        for (int x0 = 0; x0 + window <= img.width; x0 += p.step) {
            std::fill(hist.begin(), hist.end(), 0.0f);
            for (int v = 0; v < window; ++v) {
                for (int u = 0; u < window; ++u) {
                    const float mag = grads.magnitude.at(x0 + u, y0 + v);
                    if (mag == 0.0f) continue;
                    const double du = u - center, dv = v - center;
                    const double wg =
                        std::exp(-(du * du + dv * dv) / (2.0 * window_sigma * window_sigma));

                    // Bilinear spatial interpolation over bin centers.
                    const double xb = (u + 0.5) / p.bin_size - 0.5;
                    const double yb = (v + 0.5) / p.bin_size - 0.5;
                    const int xi = static_cast<int>(std::floor(xb));
                    const int yi = static_cast<int>(std::floor(yb));
                    const double xf = xb - xi, yf = yb - yi;

                    // Linear orientation interpolation.
                    const double ob = grads.orientation.at(x0 + u, y0 + v) / kTwoPi * kOrientationBins;
                    int oi = static_cast<int>(std::floor(ob));
                    const double of = ob - oi;
                    oi %= kOrientationBins;

                    const double base = wg * mag;
                    for (int dy = 0; dy < 2; ++dy) {
                        const int by = yi + dy;
                        if (by < 0 || by >= kSpatialBins) continue;
                        const double wy = dy == 0 ? 1.0 - yf : yf;
                        for (int dx = 0; dx < 2; ++dx) {
                            const int bx = xi + dx;
                            if (bx < 0 || bx >= kSpatialBins) continue;
                            const double wx = dx == 0 ? 1.0 - xf : xf;
                            for (int dodo = 0; dodo < 2; ++dodo) {
                                const int bo = (oi + dodo) % kOrientationBins;
                                const double wo = dodo == 0 ? 1.0 - of : of;
                                hist[(by * kSpatialBins + bx) * kOrientationBins + bo] +=
                                    static_cast<float>(base * wx * wy * wo);
                            }
                        }
                    }
                }
            }

            // l2, clamp, renormalize; flat windows stay zero
            Eigen::Map<Eigen::VectorXf> h(hist.data(), kSiftDim);
            float norm = h.norm();
            if (norm > 1e-12f) {
                h /= norm;
                h = h.cwiseMin(kClampThreshold);
                norm = h.norm();
                if (norm > 1e-12f) h /= norm;
            } else {
                h.setZero();
            }

            const Eigen::Index row = out.descriptors.rows();
            out.descriptors.conservativeResize(row + 1, Eigen::NoChange);
            out.descriptors.row(row) = h.transpose();
            out.locations.push_back({static_cast<float>((x0 + center) * scale),
                                     static_cast<float>((y0 + center) * scale),
                                     static_cast<float>(scale)});
        }
    }
}

}  // namespace

DescriptorSet dense_sift(const ImagePlane& image, const DenseSiftParams& p) {
    if (p.step < 1 || p.bin_size < 1 || p.n_scales < 1) {
        throw std::invalid_argument("dense_sift: step, bin_size, n_scales must be >= 1");
    }
    DescriptorSet out = DescriptorSet::empty(DescriptorKind::DenseSift, kSiftDim);
    const Grid base = grid_from_plane(image);
    const int window = kSpatialBins * p.bin_size;

    // Count rows ahead of time so extraction appends into preallocated storage.
    std::vector<std::pair<Grid, double>> levels;
    for (int i = 0; i < p.n_scales; ++i) {
        const double scale = std::pow(2.0, i / 3.0);
        const int sw = std::max(1, static_cast<int>(std::lround(image.width() / scale)));
        const int sh = std::max(1, static_cast<int>(std::lround(image.height() / scale)));
        if (sw < window || sh < window) {
            out.warning = true;
            continue;
        }
        if (i == 0) {
            levels.emplace_back(base, 1.0);
        } else {
            // Anti-alias for the downsampling factor, assuming a nominal
            // sigma of 0.5 in the input.
            const double sigma = 0.5 * std::sqrt(scale * scale - 1.0);
            levels.emplace_back(bilinear_resize(gaussian_blur(base, sigma), sw, sh), scale);
        }
    }
    Eigen::Index total = 0;
    for (const auto& [img, scale] : levels) {
        const Eigen::Index nx = (img.width - window) / p.step + 1;
        const Eigen::Index ny = (img.height - window) / p.step + 1;
        total += nx * ny;
    }
    out.descriptors.resize(0, kSiftDim);
    out.descriptors.reserve(total * kSiftDim);
    out.locations.reserve(static_cast<std::size_t>(total));
    for (const auto& [img, scale] : levels) {
        extract_at_scale(img, scale, p, out);
    }
    return out;
}

}  // namespace texdesc
