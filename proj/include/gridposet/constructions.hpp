#pragma once

#include <vector>

#include "gridposet/containment.hpp"
#include "gridposet/grid.hpp"
#include "gridposet/poset.hpp"

namespace gridposet {

/// k_s: the maximum k with sum_{j=2}^{k} j < s; c_s = s - 1 - sum_{j=2}^{k_s} j.
/// The s=2 case (k_2 = c_2 = 1) follows from the same definition.
struct KsCs {
    int ks;
    int cs;
};

KsCs ksCs(int s);  // s >= 2

/// Staircase family on [k]^2 that is weak vee_s-free: in every row the
/// members form an interval starting at the antidiagonal point of that row,
/// of length k_s+1 on rows with index in 1..c_s mod (k_s+1) and k_s
/// otherwise, clipped at the grid boundary. Its minimal elements are the
/// antidiagonal points, each below at most s-1 other members.
GridFamily veeWeakFamily(int k, int s);

/// The boundary of [k]x[l]; size 2(k+l)-4; strong vee_3-free. k,l >= 2.
GridFamily veeThreeBorderFamily(int k, int l);

/// Union of the s-1 highest rows and s-1 rightmost columns of [k]^2;
/// size 2(s-1)k-(s-1)^2; strong vee_s-free. Requires k >= s-1 >= 1.
GridFamily veeRowsColsFamily(int k, int s);

enum class DiamondVariant { D2, D3 };

/// D2: ranks {k, k+2} plus the odd-x half of rank k+1 (weak D_2-free).
/// D3: all ranks in [k, k+2] (weak D_3-free).
GridFamily diamondFreeFamily(int k, DiamondVariant variant);

/// The maximal-antichain-plus-tail chain cover {(k,1),...,(1,k),(1,k+1),...,(1,l)}
/// (transposed when k > l); size max{k,l}; strong {vee_2,wedge_2}-saturated.
GridFamily veeWedgeSatChain(int k, int l);

enum class Enumeration { RankIncreasing, Mcl };

/// All points sorted by rank ascending, ties lexicographic.
std::vector<GridPoint> rankIncreasingEnumeration(const GridShape& shape);

/// Middle-comes-last order: decreasing |rank - d(k+1)/2|, ties by rank
/// ascending then lexicographic coordinates. Cubic shapes only.
std::vector<GridPoint> mclEnumeration(const GridShape& shape);

/// Scan the enumeration, keeping each point whose addition preserves
/// pattern-freeness. The result is always saturated for the pattern.
GridFamily greedySaturate(const GridShape& shape, const Poset& pattern, Mode mode,
                          Enumeration enumeration);

/// Same with an explicit enumeration; must list every grid point exactly once.
GridFamily greedySaturate(const GridShape& shape, const Poset& pattern, Mode mode,
                          const std::vector<GridPoint>& enumeration);

}  // namespace gridposet
