#include "texdesc/descriptor_set.hpp"

#include <cstring>
#include <stdexcept>

#include "texdesc/image_io.hpp"
#include "texdesc/serialize.hpp"

namespace texdesc {

namespace {
constexpr char kDescMagic[4] = {'T', 'X', 'D', 'S'};

struct KindName {
    DescriptorKind kind;
    const char* name;
};
constexpr KindName kKindNames[] = {
    {DescriptorKind::Unknown, "unknown"},   {DescriptorKind::DenseSift, "dsift"},
    {DescriptorKind::FilterLm, "lm"},       {DescriptorKind::FilterMr8, "mr8"},
    {DescriptorKind::Patch3, "patch3"},     {DescriptorKind::Patch7, "patch7"},
    {DescriptorKind::Patch3Rgb, "patch3rgb"}, {DescriptorKind::LbpVq, "lbpvq"},
    {DescriptorKind::Attribute, "attribute"},
};
}  // namespace

std::string kind_name(DescriptorKind kind) {
    for (const auto& k : kKindNames) {
        if (k.kind == kind) return k.name;
    }
    return "unknown";
}

DescriptorKind kind_from_name(const std::string& name) {
    for (const auto& k : kKindNames) {
        if (name == k.name) return k.kind;
    }
    throw std::invalid_argument("unknown descriptor kind: " + name);
}

DescriptorSet DescriptorSet::empty(DescriptorKind kind, Eigen::Index dim, bool warning) {
    DescriptorSet s;
    s.kind = kind;
    s.descriptors.resize(0, dim);
    s.warning = warning;
    return s;
}

void DescriptorSet::append(const DescriptorSet& other) {
    if (other.count() == 0) {
        warning = warning || other.warning;
        return;
    }
    if (count() == 0) {
        const bool warned = warning || other.warning;
        *this = other;
        warning = warned;
        return;
    }
    if (other.dim() != dim()) throw std::invalid_argument("DescriptorSet::append: dim mismatch");
    const Eigen::Index old_rows = descriptors.rows();
    descriptors.conservativeResize(old_rows + other.descriptors.rows(), Eigen::NoChange);
    descriptors.bottomRows(other.descriptors.rows()) = other.descriptors;
    locations.insert(locations.end(), other.locations.begin(), other.locations.end());
    warning = warning || other.warning;
}

void DescriptorSet::save(const std::string& path) const {
    BinaryWriter w(path);
    w.bytes(kDescMagic, sizeof(kDescMagic));
    w.u32(static_cast<std::uint32_t>(kind));
    w.u32(warning ? 1u : 0u);
    w.u64(static_cast<std::uint64_t>(count()));
    w.u64(static_cast<std::uint64_t>(dim()));
    w.f32_array(descriptors.data(), static_cast<std::size_t>(descriptors.size()));
    for (const auto& loc : locations) {
        w.f32(loc.x);
        w.f32(loc.y);
        w.f32(loc.scale);
    }
    w.commit();
}

DescriptorSet DescriptorSet::load(const std::string& path) {
    BinaryReader r(path);
    char magic[4];
    r.bytes(magic, sizeof(magic));
    if (std::memcmp(magic, kDescMagic, sizeof(magic)) != 0) {
        throw FormatError("not a descriptor file: " + path);
    }
    DescriptorSet s;
    s.kind = static_cast<DescriptorKind>(r.u32());
    s.warning = r.u32() != 0;
    const std::uint64_t n = r.u64();
    const std::uint64_t d = r.u64();
    if (n > (1ULL << 32) || d > (1ULL << 24)) throw FormatError("corrupt descriptor dims: " + path);
    s.descriptors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    r.f32_array(s.descriptors.data(), static_cast<std::size_t>(s.descriptors.size()));
    s.locations.resize(n);
    for (auto& loc : s.locations) {
        loc.x = r.f32();
        loc.y = r.f32();
        loc.scale = r.f32();
    }
    return s;
}

}  // namespace texdesc
