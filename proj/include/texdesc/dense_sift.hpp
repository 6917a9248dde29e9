#pragma once

#include "texdesc/descriptor_set.hpp"
#include "texdesc/image.hpp"

namespace texdesc {

struct DenseSiftParams {
    int step = 2;       // sampling stride in pixels
    int bin_size = 6;   // spatial bin extent; window covers 4x4 bins
    int n_scales = 4;   // scales 2^{i/3}, i = 0..n_scales-1
};

/// Dense 128-D SIFT (4x4 spatial bins x 8 orientations) sampled on a regular
/// grid at scales 2^{i/3}, implemented by smoothing + rescaling the image.
/// Descriptors are l2-normalized with clamping at 0.2 and renormalization;
/// windows with no gradient energy yield the zero vector. Only fully interior
/// windows are emitted. If a requested scale does not fit, the set's warning
/// flag is raised; if no scale fits the result is empty (never an error).
DescriptorSet dense_sift(const ImagePlane& image, const DenseSiftParams& params = {});

}  // namespace texdesc
