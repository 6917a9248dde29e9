#include "texdesc/splits.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

#include "texdesc/image_io.hpp"
#include "texdesc/rng.hpp"

namespace texdesc {

SplitSet make_splits(int n_items, int n_splits, std::uint64_t seed) {
    if (n_items < 3) throw std::invalid_argument("make_splits: need at least 3 items");
    if (n_splits < 1) throw std::invalid_argument("make_splits: need at least 1 split");

    SplitSet out;
    out.seed = seed;
    out.n_items = n_items;
    out.splits.reserve(n_splits);

    const int base = n_items / 3;
    const int rem = n_items % 3;
    const int n_train = base + (rem > 0 ? 1 : 0);
    const int n_val = base + (rem > 1 ? 1 : 0);

    for (int s = 0; s < n_splits; ++s) {
        std::vector<int> ids(n_items);
        std::iota(ids.begin(), ids.end(), 0);
        Rng rng(derive_seed(seed, "splits", static_cast<std::uint64_t>(s)));
        rng.shuffle(ids);

        Split split;
        split.train.assign(ids.begin(), ids.begin() + n_train);
        split.val.assign(ids.begin() + n_train, ids.begin() + n_train + n_val);
        split.test.assign(ids.begin() + n_train + n_val, ids.end());
        out.splits.push_back(std::move(split));
    }
    return out;
}

namespace {

void write_one(const std::string& path, const std::vector<int>& ids, const Manifest& manifest) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write split file: " + path);
        for (int id : ids) out << manifest.entries()[id].path << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename split temp file to " + path);
}

std::vector<int> read_one(const std::string& path, const std::map<std::string, int>& index) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open split file: " + path);
    std::vector<int> ids;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto it = index.find(line);
        if (it == index.end()) throw FormatError("split file " + path + ": unknown path " + line);
        ids.push_back(it->second);
    }
    return ids;
}

}  // namespace

void write_split_files(const SplitSet& splits, const Manifest& manifest, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (std::size_t s = 0; s < splits.splits.size(); ++s) {
        const std::string n = std::to_string(s + 1);
        write_one(dir + "/train" + n + ".txt", splits.splits[s].train, manifest);
        write_one(dir + "/val" + n + ".txt", splits.splits[s].val, manifest);
        write_one(dir + "/test" + n + ".txt", splits.splits[s].test, manifest);
    }
}

SplitSet read_split_files(const Manifest& manifest, const std::string& dir, int n_splits) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < manifest.size(); ++i) {
        index[manifest.entries()[i].path] = static_cast<int>(i);
    }
    SplitSet out;
    out.n_items = static_cast<int>(manifest.size());
    for (int s = 0; s < n_splits; ++s) {
        const std::string n = std::to_string(s + 1);
        Split split;
        split.train = read_one(dir + "/train" + n + ".txt", index);
        split.val = read_one(dir + "/val" + n + ".txt", index);
        split.test = read_one(dir + "/test" + n + ".txt", index);
        out.splits.push_back(std::move(split));
    }
    return out;
}

}  // namespace texdesc
