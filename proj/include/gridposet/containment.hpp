#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gridposet/grid.hpp"
#include "gridposet/poset.hpp"

namespace gridposet {

/// An injection from a pattern poset into a host, certifying containment.
/// image[e] is the host point index (grid hosts) or host element id (poset
/// hosts) assigned to pattern element e.
struct Witness {
    std::vector<long long> image;
};

/// Search for a weak or strong copy of `pattern` among the members of F.
/// Backtracking over injections; pattern elements are assigned in order of
/// decreasing comparability degree. |pattern| <= 10, grid <= 2^20 points.
std::optional<Witness> containsCopy(const GridFamily& host, const Poset& pattern, Mode mode);

/// Same search with an abstract poset as host.
std::optional<Witness> containsCopy(const Poset& host, const Poset& pattern, Mode mode);

/// Copies whose image contains the given point. When F minus the point is
/// known to be pattern-free this is equivalent to (and much cheaper than)
/// the unrestricted search.
std::optional<Witness> containsCopyThrough(const GridFamily& host, const Poset& pattern,
                                           Mode mode, long long pointIndex);

bool isFree(const GridFamily& host, const Poset& pattern, Mode mode);
bool isFree(const GridFamily& host, std::span<const Poset> patterns, Mode mode);

/// True iff F is free of every pattern and adding any outside point creates
/// a copy of some pattern.
bool isSaturated(const GridFamily& host, const Poset& pattern, Mode mode);
bool isSaturated(const GridFamily& host, std::span<const Poset> patterns, Mode mode);

/// Pairwise re-check of a returned witness against the mode's definition.
bool witnessValid(const GridFamily& host, const Poset& pattern, Mode mode, const Witness& w);

/// All distinct strong-copy images of `pattern` inside the full grid,
/// as sorted index lists. |pattern| <= 6 and shape <= 64 points.
std::vector<std::vector<long long>> allStrongCopyImages(const GridShape& shape,
                                                        const Poset& pattern);

/// True iff no strong copy of `pattern` within the full two-dimensional grid
/// contains two points at L1 distance 1. |pattern| <= 6, shape <= 6x6.
bool strongCopiesNeighborFree(const Poset& pattern, const GridShape& shape);

}  // namespace gridposet
