#pragma once

#include <span>

#include "gridposet/containment.hpp"
#include "gridposet/grid.hpp"
#include "gridposet/matrix.hpp"
#include "gridposet/poset.hpp"

namespace gridposet {

struct SearchResult {
    long long value = 0;
    GridFamily witness;
    SearchStats stats;
};

struct EngineOptions {
    /// 0 keeps the per-operation default (42 for la, 25 for sat).
    int maxPoints = 0;
    /// Single-threaded search already yields the lexicographically least
    /// witness; the flag is accepted for interface stability.
    bool canonical = false;
};

/// Exact maximum size of a family of the grid free of every pattern, via
/// depth-first branch-and-bound over points in row-major order with
/// incremental freeness checks (a new copy must use the newly added point)
/// and a greedy initial lower bound. Witness is the lexicographically least
/// optimum. Grid <= 42 points.
SearchResult laExact(const GridShape& shape, std::span<const Poset> patterns, Mode mode,
                     EngineOptions opts = {});
SearchResult laExact(const GridShape& shape, const Poset& pattern, Mode mode,
                     EngineOptions opts = {});

/// Exact minimum size of a saturated family: enumerate by increasing target
/// size, searching free families of that size and testing saturation.
/// Grid <= 25 points.
SearchResult satExact(const GridShape& shape, std::span<const Poset> patterns, Mode mode,
                      EngineOptions opts = {});
SearchResult satExact(const GridShape& shape, const Poset& pattern, Mode mode,
                      EngineOptions opts = {});

/// Reduced fraction num/den with den > 0.
struct Fraction {
    long long num = 0;
    long long den = 1;

    bool operator==(const Fraction&) const = default;
};

/// (|P| + h(P))/2 - 1, the per-column coefficient of the double-chain bound.
Fraction doubleChainCoefficient(const Poset& p);

/// Concrete finite form of the double-chain upper bound on the largest weak
/// P-free family of [k]^2: groups of four consecutive increasing diagonals
/// carry at most |P|+h(P)-2 members each; the <= 3 leftover diagonals are
/// counted in full.
long long doubleChainBound(const Poset& p, int k);

/// All four quantities of the J_s / vee_s comparison at size n, computed
/// exactly. Observation only: equalityHolds reports whether the conjectured
/// chain holds; nothing asserts it.
struct ConjectureFiveData {
    int n = 0, s = 0;
    long long satMatrixValue = 0;
    long long exMatrixValue = 0;
    long long satStarGrid = 0;
    long long laStarGrid = 0;

    bool equalityHolds() const;
};

ConjectureFiveData conjectureFive(int n, int s);

}  // namespace gridposet
