#pragma once

#include <vector>

#include "gridposet/common.hpp"
#include "gridposet/grid.hpp"
#include "gridposet/poset.hpp"

namespace gridposet {

/// A permutation pi of [n'] with n' = d(k-1), cut into d segments of length
/// k-1: segment j holds the elements at pi positions j(k-1) .. (j+1)(k-1)-1.
struct BlockStructure {
    int nPrime = 0;
    int d = 0;
    int k = 0;
    std::vector<int> pi;  // pi[pos] = element, 0-based

    BlockStructure(int d_, int k_, std::vector<int> pi_);
    static BlockStructure identity(int d, int k);
};

/// F (bitmask over 0..n'-1) meets every pi-segment in an initial segment.
bool isPiBlock(unsigned f, const BlockStructure& b);

/// Coordinate i = 1 + |F and segment i intersection|; a poset isomorphism from pi-blocks
/// onto [k]^d. Throws InputError when F is not a pi-block.
GridPoint blockToGridPoint(unsigned f, const BlockStructure& b);

/// Number of permutations pi of [n'] for which F is a pi-block, by the
/// closed formula s_{k,d,|F|+d} * |F|! * (n'-|F|)!.
long long countBlockPermutationsFormula(int nPrime, int d, int k, unsigned f);

/// Same count by enumerating all n'! permutations; n' <= 8.
long long countBlockPermutationsEnumerated(int nPrime, int d, int k, unsigned f);

/// The poset of all subsets of [n] with size in [loLevel, hiLevel], ordered
/// by inclusion; elements sorted by size then by mask value.
Poset levelsUnionPoset(int n, int loLevel, int hiLevel);

/// Largest m such that every m consecutive levels of 2^[n] are pattern-free
/// in the given mode (0 when a single level already contains a copy).
/// n <= 7, |pattern| <= 5.
int consecutiveLevelsFree(int n, const Poset& pattern, Mode mode);

}  // namespace gridposet
