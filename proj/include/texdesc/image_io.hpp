#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "texdesc/image.hpp"

namespace texdesc {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LoadMode { Gray, Rgb };

using LoadedImage = std::variant<ImagePlane, ImageRgb>;

/// Decodes a PNG or JPEG file (detected by magic bytes) and scales pixel
/// values into [0,1]. Gray mode converts color input with BT.601 weights.
LoadedImage load_image(const std::string& path, LoadMode mode);

ImagePlane load_image_gray(const std::string& path);
ImageRgb load_image_rgb(const std::string& path);

/// 8-bit grayscale / RGB PNG. Written atomically (temp file + rename).
void save_png(const ImagePlane& image, const std::string& path);
void save_png(const ImageRgb& image, const std::string& path);

/// 8-bit JPEG, quality in [1,100].
void save_jpeg(const ImagePlane& image, const std::string& path, int quality = 95);
void save_jpeg(const ImageRgb& image, const std::string& path, int quality = 95);

}  // namespace texdesc
