#pragma once

#include <string>
#include <vector>

namespace texdesc {

struct ManifestEntry {
    std::string path;  // relative to the manifest root directory
    std::vector<std::string> labels;
};

/// Image list with labels. Serialized as JSON lines, one object per entry
/// with fields `path` and `labels`. The label vocabulary is the sorted set
/// of all labels appearing in the entries.
class Manifest {
public:
    Manifest() = default;
    explicit Manifest(std::vector<ManifestEntry> entries);

    const std::vector<ManifestEntry>& entries() const { return entries_; }
    const std::vector<std::string>& vocabulary() const { return vocabulary_; }

    std::size_t size() const { return entries_.size(); }

    int label_index(const std::string& label) const;  // -1 if absent

    /// Index of the first label of entry i in the vocabulary; -1 if unlabeled.
    int primary_label(std::size_t i) const;

    static Manifest load(const std::string& path);
    void save(const std::string& path) const;

private:
    std::vector<ManifestEntry> entries_;
    std::vector<std::string> vocabulary_;
};

}  // namespace texdesc
