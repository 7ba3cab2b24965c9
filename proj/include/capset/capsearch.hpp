#pragma once

#include "capset/point_set.hpp"

#include <cstdint>
#include <optional>

namespace capset {

/// A subset of F_3^n; points are base-3 codes.
using CapSet = PointSet;

/// The unique c with a + b + c = 0 coordinatewise mod 3, on base-3 codes of F_3^n.
std::uint32_t complete_triple(std::uint32_t a, std::uint32_t b, int n);

/// True iff no three pairwise-distinct members sum to zero. Over F_3, a + a + c = 0
/// forces c = a, so excluding only the all-equal triple is the same condition.
bool is_progression_free(const CapSet& set);

struct SearchResult {
    int n = 0;
    int max_size = 0;
    CapSet witness{3, 0};
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
    /// The search only visits sets containing the origin (translation invariance).
    bool origin_fixed = true;
};

struct SearchOptions {
    std::optional<std::uint64_t> node_budget;
    unsigned threads = 1;
};

/// Depth-first branch and bound for a largest progression-free subset of F_3^n.
/// Without a budget the result is exact; the witness is the lexicographically least
/// maximum set (as a sorted code sequence) containing the origin, for any thread count.
SearchResult max_capset(int n, const SearchOptions& options = {});

}  // namespace capset
