#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace texdesc {

enum class DescriptorKind : std::uint32_t {
    Unknown = 0,
    DenseSift = 1,
    FilterLm = 2,
    FilterMr8 = 3,
    Patch3 = 4,
    Patch7 = 5,
    Patch3Rgb = 6,
    LbpVq = 7,
    Attribute = 8,
};

std::string kind_name(DescriptorKind kind);
DescriptorKind kind_from_name(const std::string& name);

using MatrixRMf = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct DescriptorLocation {
    float x = 0.0f;
    float y = 0.0f;
    float scale = 1.0f;
};

/// n local descriptors of dimension d with per-descriptor location metadata.
/// `warning` marks degenerate extractions (image too small, zero variance).
struct DescriptorSet {
    DescriptorKind kind = DescriptorKind::Unknown;
    MatrixRMf descriptors;  // n x d
    std::vector<DescriptorLocation> locations;
    bool warning = false;

    Eigen::Index count() const { return descriptors.rows(); }
    Eigen::Index dim() const { return descriptors.cols(); }

    static DescriptorSet empty(DescriptorKind kind, Eigen::Index dim, bool warning = false);

    /// Appends another set's rows (dims and kind must match).
    void append(const DescriptorSet& other);

    /// Little-endian binary format: magic, kind tag, n, d, float32 rows, then
    /// (x, y, scale) float32 triples.
    void save(const std::string& path) const;
    static DescriptorSet load(const std::string& path);
};

}  // namespace texdesc
