#include "gridposet/constructions.hpp"

#include <algorithm>

namespace gridposet {

KsCs ksCs(int s) {
    if (s < 2) throw InputError("ksCs requires s >= 2");
    // maximum k with 2 + 3 + ... + k < s (empty sum for k = 1)
    int k = 1, sum = 0;
    while (sum + (k + 1) < s) {
        ++k;
        sum += k;
    }
    return KsCs{k, s - 1 - sum};
}

GridFamily veeWeakFamily(int k, int s) {
    if (k < 1) throw InputError("veeWeakFamily requires k >= 1");
    auto [ks, cs] = ksCs(s);
    GridFamily f(GridShape::cube(k, 2));
    for (int i = 1; i <= k; ++i) {
        int residue = i % (ks + 1);
        int len = (residue >= 1 && residue <= cs) ? ks + 1 : ks;
        // interval of the i-th row starting at its antidiagonal point
        int x0 = k + 1 - i;
        for (int t = 0; t < len && x0 + t <= k; ++t)
            f.insert(GridPoint{{x0 + t, i}});
    }
    return f;
}

GridFamily veeThreeBorderFamily(int k, int l) {
    if (k < 2 || l < 2) throw InputError("veeThreeBorderFamily requires k,l >= 2");
    GridFamily f(GridShape({k, l}));
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= l; ++b)
            if (a == 1 || a == k || b == 1 || b == l) f.insert(GridPoint{{a, b}});
    return f;
}

GridFamily veeRowsColsFamily(int k, int s) {
    if (s < 2) throw InputError("veeRowsColsFamily requires s >= 2");
    if (k < s - 1) throw InputError("veeRowsColsFamily requires k >= s-1");
    GridFamily f(GridShape::cube(k, 2));
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            if (a > k - (s - 1) || b > k - (s - 1)) f.insert(GridPoint{{a, b}});
    return f;
}

GridFamily diamondFreeFamily(int k, DiamondVariant variant) {
    if (k < 2) throw InputError("diamondFreeFamily requires k >= 2");
    GridFamily f(GridShape::cube(k, 2));
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y) {
            int r = x + y;
            bool in = false;
            if (variant == DiamondVariant::D3)
                in = k <= r && r <= k + 2;
            else
                in = r == k || r == k + 2 || (r == k + 1 && x % 2 == 1);
            if (in) f.insert(GridPoint{{x, y}});
        }
    return f;
}

GridFamily veeWedgeSatChain(int k, int l) {
    if (k < 1 || l < 1) throw InputError("veeWedgeSatChain requires k,l >= 1");
    GridFamily f(GridShape({k, l}));
    if (k <= l) {
        for (int i = 1; i <= k; ++i) f.insert(GridPoint{{k - i + 1, i}});
        for (int j = k + 1; j <= l; ++j) f.insert(GridPoint{{1, j}});
    } else {
        for (int i = 1; i <= l; ++i) f.insert(GridPoint{{i, l - i + 1}});
        for (int j = l + 1; j <= k; ++j) f.insert(GridPoint{{j, 1}});
    }
    return f;
}

std::vector<GridPoint> rankIncreasingEnumeration(const GridShape& shape) {
    std::vector<GridPoint> pts;
    long long n = shape.pointCount();
    pts.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) pts.push_back(shape.pointAt(i));
    std::stable_sort(pts.begin(), pts.end(),
                     [](const GridPoint& a, const GridPoint& b) { return a.rank() < b.rank(); });
    return pts;
}

std::vector<GridPoint> mclEnumeration(const GridShape& shape) {
    if (!shape.isCube())
        throw InputError("MCL enumeration is defined for cubic grids only, got " + shape.str());
    int k = shape.side(), d = shape.dimension();
    // distances compared as |2r - d(k+1)| to stay in integers
    int center2 = d * (k + 1);
    std::vector<GridPoint> pts;
    long long n = shape.pointCount();
    pts.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) pts.push_back(shape.pointAt(i));
    std::stable_sort(pts.begin(), pts.end(), [&](const GridPoint& a, const GridPoint& b) {
        int da = std::abs(2 * a.rank() - center2), db = std::abs(2 * b.rank() - center2);
        if (da != db) return da > db;
        return a.rank() < b.rank();  // lexicographic tie-break is the stable order
    });
    return pts;
}

GridFamily greedySaturate(const GridShape& shape, const Poset& pattern, Mode mode,
                          const std::vector<GridPoint>& enumeration) {
    long long n = shape.pointCount();
    if (static_cast<long long>(enumeration.size()) != n)
        throw InputError("greedy enumeration must list every grid point exactly once");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const GridPoint& p : enumeration) {
        long long i = shape.indexOf(p);
        if (seen[static_cast<size_t>(i)])
            throw InputError("greedy enumeration must list every grid point exactly once");
        seen[static_cast<size_t>(i)] = true;
    }
    GridFamily f(shape);
    for (const GridPoint& p : enumeration) {
        long long i = shape.indexOf(p);
        f.insertIndex(i);
        // f minus p is free by induction, so a new copy must go through p
        if (containsCopyThrough(f, pattern, mode, i)) f.eraseIndex(i);
    }
    return f;
}

GridFamily greedySaturate(const GridShape& shape, const Poset& pattern, Mode mode,
                          Enumeration enumeration) {
    auto order = enumeration == Enumeration::RankIncreasing ? rankIncreasingEnumeration(shape)
                                                            : mclEnumeration(shape);
    return greedySaturate(shape, pattern, mode, order);
}

}  // namespace gridposet
