#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qops/poset.hpp"

// Exhaustive enumeration of bounded involutive lattices up to isomorphism.
// Strategy: generate labeled lattices whose index order is a linear
// extension (two states per pair), layer every antitone involution on top,
// and dedup by a canonical encoding minimized over relabelings of the middle
// elements. The canonicalization pass has serial and OpenMP variants.

namespace qops {

struct EnumerateOptions {
    // filter applied after canonical dedup; empty = keep everything
    std::function<bool(const Poset&)> keep;
    bool parallel = true;
};

std::vector<Poset> enumerate_models(int n, const EnumerateOptions& opts = {});

// Canonical encoding of an involutive lattice, isomorphism-invariant.
std::string canonical_encoding(const Poset& p);

// Census line per isomorphism class: n, canonical id, class flags (TSV).
std::string census_tsv(int max_n);

}  // namespace qops
