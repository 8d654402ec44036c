// Test-only brute-force oracles, deliberately independent of the library's
// search paths: plain all-injections recursion, full subset enumeration, and
// direct definition checks. Slow and simple on purpose.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "gridposet/containment.hpp"
#include "gridposet/grid.hpp"
#include "gridposet/matrix.hpp"
#include "gridposet/poset.hpp"

namespace oracle {

using gridposet::BinaryMatrix;
using gridposet::GridFamily;
using gridposet::GridPoint;
using gridposet::GridShape;
using gridposet::Mode;
using gridposet::Ordering;
using gridposet::Poset;

// All-injections containment check over an abstract relate() host.
inline bool injectionContains(int hostSize, const std::function<Ordering(int, int)>& relate,
                              const Poset& pat, Mode mode,
                              const std::function<bool(const std::vector<int>&)>& accept = {}) {
    int p = pat.size();
    std::vector<int> img(p, -1);
    std::vector<bool> used(hostSize, false);
    std::function<bool(int)> rec = [&](int e) -> bool {
        if (e == p) return accept ? accept(img) : true;
        for (int m = 0; m < hostSize; ++m) {
            if (used[m]) continue;
            bool ok = true;
            for (int f = 0; f < e && ok; ++f) {
                Ordering o = relate(m, img[f]);
                if (pat.less(e, f)) {
                    if (o != Ordering::Below) ok = false;
                } else if (pat.less(f, e)) {
                    if (o != Ordering::Above) ok = false;
                } else if (mode == Mode::Strong && o != Ordering::Incomparable) {
                    ok = false;
                }
            }
            if (!ok) continue;
            img[e] = m;
            used[m] = true;
            if (rec(e + 1)) return true;
            used[m] = false;
            img[e] = -1;
        }
        return false;
    };
    return rec(0);
}

inline bool bruteContains(const GridFamily& f, const Poset& pat, Mode mode) {
    std::vector<GridPoint> pts = f.points();
    return injectionContains(
        static_cast<int>(pts.size()),
        [&](int a, int b) { return gridposet::compare(pts[a], pts[b]); }, pat, mode);
}

// Containment with a required host member in the image.
inline bool bruteContainsUsing(const GridFamily& f, const Poset& pat, Mode mode,
                               const GridPoint& mustUse) {
    std::vector<GridPoint> pts = f.points();
    int target = -1;
    for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == mustUse) target = static_cast<int>(i);
    if (target < 0) return false;
    return injectionContains(
        static_cast<int>(pts.size()),
        [&](int a, int b) { return gridposet::compare(pts[a], pts[b]); }, pat, mode,
        [&](const std::vector<int>& img) {
            return std::find(img.begin(), img.end(), target) != img.end();
        });
}

inline bool bruteContainsPoset(const Poset& host, const Poset& pat, Mode mode) {
    return injectionContains(
        host.size(),
        [&](int a, int b) {
            if (host.less(a, b)) return Ordering::Below;
            if (host.less(b, a)) return Ordering::Above;
            return Ordering::Incomparable;
        },
        pat, mode);
}

inline bool bruteIsFree(const GridFamily& f, const std::vector<Poset>& pats, Mode mode) {
    for (const Poset& p : pats)
        if (bruteContains(f, p, mode)) return false;
    return true;
}

inline bool bruteIsSaturated(const GridFamily& f, const std::vector<Poset>& pats, Mode mode) {
    if (!bruteIsFree(f, pats, mode)) return false;
    for (long long x = 0; x < f.universeSize(); ++x) {
        if (f.containsIndex(x)) continue;
        GridFamily g = f;
        g.insertIndex(x);
        if (bruteIsFree(g, pats, mode)) return false;
    }
    return true;
}

inline GridFamily familyFromMask(const GridShape& shape, unsigned long long mask) {
    GridFamily f(shape);
    for (long long i = 0; i < shape.pointCount(); ++i)
        if (mask >> i & 1ull) f.insertIndex(i);
    return f;
}

// Exact maximum by full subset enumeration; universe <= ~16 points.
inline long long bruteLa(const GridShape& shape, const std::vector<Poset>& pats, Mode mode) {
    long long n = shape.pointCount();
    long long best = 0;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        GridFamily f = familyFromMask(shape, mask);
        if (f.size() > best && bruteIsFree(f, pats, mode)) best = f.size();
    }
    return best;
}

inline long long bruteSat(const GridShape& shape, const std::vector<Poset>& pats, Mode mode) {
    long long n = shape.pointCount();
    long long best = -1;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        GridFamily f = familyFromMask(shape, mask);
        if ((best < 0 || f.size() < best) && bruteIsSaturated(f, pats, mode)) best = f.size();
    }
    return best;
}

// Maximum antichain by include/exclude recursion over points.
inline long long bruteMaxAntichain(const GridShape& shape) {
    long long n = shape.pointCount();
    std::vector<GridPoint> pts;
    for (long long i = 0; i < n; ++i) pts.push_back(shape.pointAt(i));
    std::vector<int> chosen;
    long long best = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            best = std::max(best, static_cast<long long>(chosen.size()));
            return;
        }
        bool ok = true;
        for (int c : chosen)
            if (gridposet::compare(pts[c], pts[i]) != Ordering::Incomparable) ok = false;
        if (ok) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
        rec(i + 1);
    };
    rec(0);
    return best;
}

// Direct submatrix enumeration: choose row and column subsets explicitly.
inline bool bruteMatrixContains(const BinaryMatrix& a, const BinaryMatrix& m) {
    std::vector<int> rows(m.rows()), cols(m.cols());
    std::function<bool(int, int)> pickRows = [&](int i, int from) -> bool {
        if (i == m.rows()) {
            std::function<bool(int, int)> pickCols = [&](int j, int cfrom) -> bool {
                if (j == m.cols()) {
                    for (int r = 0; r < m.rows(); ++r)
                        for (int c = 0; c < m.cols(); ++c)
                            if (m.get(r, c) && !a.get(rows[r], cols[c])) return false;
                    return true;
                }
                for (int c = cfrom; c < a.cols(); ++c) {
                    cols[j] = c;
                    if (pickCols(j + 1, c + 1)) return true;
                }
                return false;
            };
            return pickCols(0, 0);
        }
        for (int r = from; r < a.rows(); ++r) {
            rows[i] = r;
            if (pickRows(i + 1, r + 1)) return true;
        }
        return false;
    };
    if (m.rows() > a.rows() || m.cols() > a.cols()) return false;
    return pickRows(0, 0);
}

// All labeled posets on n elements, by filtering every relation matrix.
inline std::vector<Poset> allPosetsOn(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pairs.emplace_back(a, b);
    std::vector<Poset> out;
    for (unsigned long long mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1ull) less[pairs[i].first][pairs[i].second] = true;
        bool valid = true;
        for (int a = 0; a < n && valid; ++a)
            for (int b = 0; b < n && valid; ++b) {
                if (less[a][b] && less[b][a]) valid = false;
                if (!less[a][b]) continue;
                for (int c = 0; c < n; ++c)
                    if (less[b][c] && !less[a][c]) valid = false;
            }
        if (valid) out.push_back(Poset::fromRelation(n, less));
    }
    return out;
}

// Longest chain by exhaustive subset enumeration.
inline int bruteHeight(const Poset& p) {
    int n = p.size();
    int best = 0;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1ull) elems.push_back(i);
        bool chain = true;
        for (size_t i = 0; i < elems.size() && chain; ++i)
            for (size_t j = i + 1; j < elems.size(); ++j)
                if (!p.comparable(elems[i], elems[j])) chain = false;
        if (chain) best = std::max(best, static_cast<int>(elems.size()));
    }
    return best;
}

}  // namespace oracle
