#include "gridposet/boolean_bridge.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gridposet/containment.hpp"

namespace gridposet {

namespace {

long long factorial(int n) {
    if (n < 0 || n > 20) throw LimitError("factorial out of the 64-bit range");
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void checkMask(unsigned f, int nPrime) {
    if (nPrime < 32 && (f >> nPrime) != 0)
        throw InputError("subset mask has bits outside the ground set");
}

}  // namespace

BlockStructure::BlockStructure(int d_, int k_, std::vector<int> pi_)
    : nPrime(d_ * (k_ - 1)), d(d_), k(k_), pi(std::move(pi_)) {
    if (d < 1 || k < 1) throw InputError("block structure requires d,k >= 1");
    if (static_cast<int>(pi.size()) != nPrime)
        throw InputError("permutation length must equal d(k-1)");
    std::vector<bool> seen(nPrime, false);
    for (int e : pi) {
        if (e < 0 || e >= nPrime || seen[e]) throw InputError("pi is not a permutation");
        seen[e] = true;
    }
}

BlockStructure BlockStructure::identity(int d, int k) {
    std::vector<int> pi(static_cast<size_t>(d) * (k - 1));
    std::iota(pi.begin(), pi.end(), 0);
    return BlockStructure(d, k, std::move(pi));
}

bool isPiBlock(unsigned f, const BlockStructure& b) {
    checkMask(f, b.nPrime);
    int segLen = b.k - 1;
    for (int j = 0; j < b.d; ++j) {
        bool ended = false;
        for (int t = 0; t < segLen; ++t) {
            bool in = f >> b.pi[j * segLen + t] & 1u;
            if (in && ended) return false;
            if (!in) ended = true;
        }
    }
    return true;
}

GridPoint blockToGridPoint(unsigned f, const BlockStructure& b) {
    if (!isPiBlock(f, b)) throw InputError("subset is not a pi-block");
    int segLen = b.k - 1;
    GridPoint p;
    p.coords.assign(b.d, 1);
    for (int j = 0; j < b.d; ++j)
        for (int t = 0; t < segLen; ++t)
            if (f >> b.pi[j * segLen + t] & 1u) ++p.coords[j];
    return p;
}

long long countBlockPermutationsFormula(int nPrime, int d, int k, unsigned f) {
    if (nPrime != d * (k - 1)) throw InputError("n' must equal d(k-1)");
    checkMask(f, nPrime);
    int size = std::popcount(f);
    return levelSize(k, d, size + d) * factorial(size) * factorial(nPrime - size);
}

long long countBlockPermutationsEnumerated(int nPrime, int d, int k, unsigned f) {
    if (nPrime != d * (k - 1)) throw InputError("n' must equal d(k-1)");
    if (nPrime > 8) throw LimitError("permutation enumeration supports n' <= 8");
    checkMask(f, nPrime);
    std::vector<int> pi(nPrime);
    std::iota(pi.begin(), pi.end(), 0);
    long long count = 0;
    do {
        if (isPiBlock(f, BlockStructure(d, k, pi))) ++count;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return count;
}

Poset levelsUnionPoset(int n, int loLevel, int hiLevel) {
    if (n < 0 || n > 20) throw LimitError("boolean lattice supported for n <= 20");
    if (loLevel < 0 || hiLevel > n || loLevel > hiLevel)
        throw InputError("bad level range");
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m) {
        int size = std::popcount(m);
        if (loLevel <= size && size <= hiLevel) masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    int count = static_cast<int>(masks.size());
    std::vector<std::vector<bool>> less(count, std::vector<bool>(count, false));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            less[a][b] = masks[a] != masks[b] && (masks[a] & masks[b]) == masks[a];
    std::vector<std::string> labels(count);
    for (int a = 0; a < count; ++a) {
        std::string s = "{";
        for (int i = 0; i < n; ++i)
            if (masks[a] >> i & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
        labels[a] = s + "}";
    }
    return Poset::fromRelation(count, less, std::move(labels));
}

int consecutiveLevelsFree(int n, const Poset& pattern, Mode mode) {
    if (n > 7) throw LimitError("consecutiveLevelsFree supports n <= 7");
    if (pattern.size() > 5) throw LimitError("consecutiveLevelsFree supports |P| <= 5");
    // Freeness of every m-window is monotone decreasing in m: a smaller
    // window is a subset of some larger one.
    int best = 0;
    for (int m = 1; m <= n + 1; ++m) {
        bool allFree = true;
        for (int lo = 0; lo + m - 1 <= n && allFree; ++lo) {
            Poset window = levelsUnionPoset(n, lo, lo + m - 1);
            if (containsCopy(window, pattern, mode)) allFree = false;
        }
        if (!allFree) break;
        best = m;
    }
    return best;
}

}  // namespace gridposet
