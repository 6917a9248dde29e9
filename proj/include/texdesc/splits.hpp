#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "texdesc/manifest.hpp"

namespace texdesc {

struct Split {
    std::vector<int> train;
    std::vector<int> val;
    std::vector<int> test;
};

/// Preset train/val/test partitions of item ids 0..n_items-1. Within each
/// split the three subsets are disjoint, cover all ids, and their sizes
/// differ by at most one.
struct SplitSet {
    std::vector<Split> splits;
    std::uint64_t seed = 0;
    int n_items = 0;
};

SplitSet make_splits(int n_items, int n_splits, std::uint64_t seed);
inline SplitSet make_splits(int n_items, std::uint64_t seed) {
    return make_splits(n_items, 10, seed);
}

/// Writes train<N>.txt / val<N>.txt / test<N>.txt (N starting at 1) into
/// `dir`, one manifest path per line. Mirrors the usual benchmark layout so
/// externally provided split files can be dropped in unchanged.
void write_split_files(const SplitSet& splits, const Manifest& manifest, const std::string& dir);

/// Reads split files written by write_split_files, mapping paths back to
/// manifest indices.
SplitSet read_split_files(const Manifest& manifest, const std::string& dir, int n_splits = 10);

}  // namespace texdesc
