#include "texdesc/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "texdesc/image_io.hpp"

namespace texdesc {

Manifest::Manifest(std::vector<ManifestEntry> entries) : entries_(std::move(entries)) {
    std::set<std::string> paths;
    std::set<std::string> vocab;
    for (const auto& e : entries_) {
        if (!paths.insert(e.path).second) {
            throw std::invalid_argument("Manifest: duplicate path " + e.path);
        }
        vocab.insert(e.labels.begin(), e.labels.end());
    }
    vocabulary_.assign(vocab.begin(), vocab.end());
}

int Manifest::label_index(const std::string& label) const {
    const auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), label);
    if (it == vocabulary_.end() || *it != label) return -1;
    return static_cast<int>(it - vocabulary_.begin());
}

int Manifest::primary_label(std::size_t i) const {
    const auto& labels = entries_[i].labels;
    return labels.empty() ? -1 : label_index(labels.front());
}

Manifest Manifest::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest: " + path);
    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception&) {
            throw FormatError("manifest " + path + ": bad JSON on line " + std::to_string(line_no));
        }
        if (!obj.contains("path") || !obj.contains("labels")) {
            throw FormatError("manifest " + path + ": missing fields on line " +
                              std::to_string(line_no));
        }
        ManifestEntry e;
        e.path = obj["path"].get<std::string>();
        e.labels = obj["labels"].get<std::vector<std::string>>();
        entries.push_back(std::move(e));
    }
    return Manifest(std::move(entries));
}

void Manifest::save(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write manifest: " + path);
        for (const auto& e : entries_) {
            nlohmann::ordered_json obj;
            obj["path"] = e.path;
            obj["labels"] = e.labels;
            out << obj.dump() << '\n';
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename manifest temp file to " + path);
}

}  // namespace texdesc
