#include "gridposet/engine.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>

namespace gridposet {

namespace {

constexpr int kLaDefaultLimit = 42;
constexpr int kSatDefaultLimit = 25;
constexpr int kMaskCapacity = 64;

uint64_t bit(int i) { return 1ULL << i; }

uint64_t bitsAbove(int i) { return i >= 63 ? 0 : ~0ULL << (i + 1); }
uint64_t bitsBelow(int i) { return i <= 0 ? 0 : ~0ULL >> (64 - i); }

// Pairwise order of all grid points as 64-bit masks.
struct GridMasks {
    GridShape shape;
    int n = 0;
    std::vector<uint64_t> below, above, incomp;  // strict relations per point

    explicit GridMasks(const GridShape& s) : shape(s) {
        n = static_cast<int>(shape.pointCount());
        below.assign(n, 0);
        above.assign(n, 0);
        incomp.assign(n, 0);
        std::vector<GridPoint> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) pts.push_back(shape.pointAt(i));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                switch (compare(pts[j], pts[i])) {
                    case Ordering::Below: below[i] |= bit(j); break;
                    case Ordering::Above: above[i] |= bit(j); break;
                    case Ordering::Incomparable: incomp[i] |= bit(j); break;
                    case Ordering::Equal: break;
                }
            }
    }
};

// Pattern prepared for mask search: relation table, assignment order by
// decreasing comparability degree, interchange-class neighbor links for
// symmetry breaking (class images are kept increasing).
struct MaskPattern {
    int p = 0;
    std::vector<int8_t> rel;
    std::vector<int> order, classPrev, classNext;

    int8_t relation(int a, int b) const { return rel[static_cast<size_t>(a) * p + b]; }

    explicit MaskPattern(const Poset& pat) : p(pat.size()) {
        rel.assign(static_cast<size_t>(p) * p, 0);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                if (pat.less(a, b)) {
                    rel[static_cast<size_t>(a) * p + b] = 1;
                    rel[static_cast<size_t>(b) * p + a] = -1;
                }
        std::vector<int> degree(p, 0);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                if (relation(a, b)) ++degree[a];
        order.resize(p);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return degree[a] > degree[b]; });
        auto interchangeable = [&](int e, int f) {
            if (relation(e, f) != 0) return false;
            for (int g = 0; g < p; ++g)
                if (g != e && g != f && relation(e, g) != relation(f, g)) return false;
            return true;
        };
        classPrev.assign(p, -1);
        classNext.assign(p, -1);
        std::vector<std::vector<int>> classes;
        for (int e : order) {
            bool joined = false;
            for (auto& cls : classes) {
                if (std::all_of(cls.begin(), cls.end(),
                                [&](int f) { return interchangeable(e, f); })) {
                    classPrev[e] = cls.back();
                    classNext[cls.back()] = e;
                    cls.push_back(e);
                    joined = true;
                    break;
                }
            }
            if (!joined) classes.push_back({e});
        }
    }
};

// Does the family contain a copy of the pattern whose image uses point x?
// Tries x in every role; assignments are normalized within interchange
// classes, which keeps the enumeration free of permutation blowup.
class MaskMatcher {
public:
    MaskMatcher(const GridMasks& g, const Poset& pattern, Mode mode)
        : g_(g), pat_(pattern), mode_(mode), assign_(pat_.p, -1) {}

    bool copyThrough(uint64_t family, int x) {
        if (pat_.p > std::popcount(family)) return false;
        for (int t = 0; t < pat_.p; ++t) {
            int role = pat_.order[t];
            std::fill(assign_.begin(), assign_.end(), -1);
            if (!feasible(role, x)) continue;
            assign_[role] = x;
            if (dfs(0, family, bit(x), t)) return true;
        }
        return false;
    }

private:
    const GridMasks& g_;
    MaskPattern pat_;
    Mode mode_;
    std::vector<int> assign_;

    bool feasible(int e, int m) const {
        for (int f = 0; f < pat_.p; ++f) {
            int mf = assign_[f];
            if (mf < 0 || f == e) continue;
            int8_t r = pat_.relation(e, f);
            if (r == 1) {
                if (!(g_.below[mf] & bit(m))) return false;
            } else if (r == -1) {
                if (!(g_.above[mf] & bit(m))) return false;
            } else if (mode_ == Mode::Strong) {
                if (!(g_.incomp[mf] & bit(m))) return false;
            }
        }
        int prev = pat_.classPrev[e];
        if (prev >= 0 && assign_[prev] >= 0 && m <= assign_[prev]) return false;
        int next = pat_.classNext[e];
        if (next >= 0 && assign_[next] >= 0 && m >= assign_[next]) return false;
        return true;
    }

    bool dfs(int t, uint64_t family, uint64_t used, int skip) {
        while (t < pat_.p && (t == skip || assign_[pat_.order[t]] >= 0)) ++t;
        if (t == pat_.p) return true;
        int e = pat_.order[t];
        uint64_t cand = family & ~used;
        for (int f = 0; f < pat_.p && cand; ++f) {
            int mf = assign_[f];
            if (mf < 0 || f == e) continue;
            int8_t r = pat_.relation(e, f);
            if (r == 1)
                cand &= g_.below[mf];
            else if (r == -1)
                cand &= g_.above[mf];
            else if (mode_ == Mode::Strong)
                cand &= g_.incomp[mf];
        }
        int prev = pat_.classPrev[e];
        if (prev >= 0 && assign_[prev] >= 0) cand &= bitsAbove(assign_[prev]);
        int next = pat_.classNext[e];
        if (next >= 0 && assign_[next] >= 0) cand &= bitsBelow(assign_[next]);
        while (cand) {
            int m = std::countr_zero(cand);
            cand &= cand - 1;
            assign_[e] = m;
            if (dfs(t + 1, family, used | bit(m), skip)) return true;
            assign_[e] = -1;
        }
        return false;
    }
};

struct PatternSet {
    std::vector<MaskMatcher> matchers;

    PatternSet(const GridMasks& g, std::span<const Poset> patterns, Mode mode) {
        if (patterns.empty()) throw InputError("at least one forbidden pattern is required");
        matchers.reserve(patterns.size());
        for (const Poset& p : patterns) {
            if (p.size() > 10) throw LimitError("engine supports patterns with |P| <= 10");
            if (p.size() == 0) throw InputError("empty forbidden pattern");
            matchers.emplace_back(g, p, mode);
        }
    }

    bool createsCopyThrough(uint64_t family, int x) {
        for (auto& m : matchers)
            if (m.copyThrough(family, x)) return true;
        return false;
    }
};

GridFamily maskToFamily(const GridShape& shape, uint64_t mask) {
    GridFamily f(shape);
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        f.insertIndex(i);
    }
    return f;
}

int checkedPointCount(const GridShape& shape, int defaultLimit, int optLimit, const char* op) {
    int limit = optLimit > 0 ? optLimit : defaultLimit;
    if (limit > kMaskCapacity)
        throw LimitError(std::string(op) + " supports at most 64 points");
    long long n = shape.pointCount();
    if (n > limit)
        throw LimitError(std::string(op) + " limit is " + std::to_string(limit) +
                         " points; grid " + shape.str() + " has " + std::to_string(n));
    return static_cast<int>(n);
}

double elapsedMs(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct LaSearcher {
    int n;
    PatternSet& pats;
    SearchStats stats;
    long long best = -1;
    uint64_t bestMask = 0;

    void dfs(int i, uint64_t family, long long count) {
        ++stats.nodes;
        if (count + (n - i) <= best) {
            ++stats.prunedBound;
            return;
        }
        uint64_t withPoint = family | bit(i);
        if (!pats.createsCopyThrough(withPoint, i)) {
            if (count + 1 > best) {
                best = count + 1;
                bestMask = withPoint;
            }
            dfs(i + 1, withPoint, count + 1);
        } else {
            ++stats.prunedInfeasible;
        }
        dfs(i + 1, family, count);
    }
};

struct SatSearcher {
    int n;
    PatternSet& pats;
    SearchStats stats;
    long long target = 0;
    uint64_t found = 0;
    bool done = false;

    bool saturated(uint64_t family) {
        for (int x = 0; x < n; ++x) {
            if (family & bit(x)) continue;
            // family is free, so a copy in family+x must use x
            if (!pats.createsCopyThrough(family | bit(x), x)) return false;
        }
        return true;
    }

    void dfs(int i, uint64_t family, long long count) {
        if (done) return;
        ++stats.nodes;
        if (count == target) {
            if (saturated(family)) {
                found = family;
                done = true;
            }
            return;
        }
        if (i == n || count + (n - i) < target) {
            ++stats.prunedBound;
            return;
        }
        uint64_t withPoint = family | bit(i);
        if (!pats.createsCopyThrough(withPoint, i))
            dfs(i + 1, withPoint, count + 1);
        else
            ++stats.prunedInfeasible;
        if (done) return;
        dfs(i + 1, family, count);
    }
};

}  // namespace

SearchResult laExact(const GridShape& shape, std::span<const Poset> patterns, Mode mode,
                     EngineOptions opts) {
    auto start = std::chrono::steady_clock::now();
    int n = checkedPointCount(shape, kLaDefaultLimit, opts.maxPoints, "laExact");
    GridMasks masks(shape);
    PatternSet pats(masks, patterns, mode);

    // Greedy feasible family seeds the bound; it equals the first leaf the
    // DFS would reach, so the final witness is still the lexicographically
    // least optimum.
    uint64_t greedy = 0;
    for (int i = 0; i < n; ++i)
        if (!pats.createsCopyThrough(greedy | bit(i), i)) greedy |= bit(i);

    LaSearcher s{n, pats, {}, static_cast<long long>(std::popcount(greedy)), greedy};
    s.dfs(0, 0, 0);

    SearchResult out{s.best, maskToFamily(shape, s.bestMask), s.stats};
    out.stats.wallMs = elapsedMs(start);
    return out;
}

SearchResult laExact(const GridShape& shape, const Poset& pattern, Mode mode, EngineOptions opts) {
    return laExact(shape, std::span<const Poset>(&pattern, 1), mode, opts);
}

SearchResult satExact(const GridShape& shape, std::span<const Poset> patterns, Mode mode,
                      EngineOptions opts) {
    auto start = std::chrono::steady_clock::now();
    int n = checkedPointCount(shape, kSatDefaultLimit, opts.maxPoints, "satExact");
    GridMasks masks(shape);
    PatternSet pats(masks, patterns, mode);

    SatSearcher s{n, pats, {}, 0, 0, false};
    for (long long target = 0; target <= n; ++target) {
        s.target = target;
        s.done = false;
        s.dfs(0, 0, 0);
        if (s.done) {
            SearchResult out{target, maskToFamily(shape, s.found), s.stats};
            out.stats.wallMs = elapsedMs(start);
            return out;
        }
    }
    // unreachable: every maximal free family is saturated
    throw std::logic_error("no saturated family found");
}

SearchResult satExact(const GridShape& shape, const Poset& pattern, Mode mode, EngineOptions opts) {
    return satExact(shape, std::span<const Poset>(&pattern, 1), mode, opts);
}

Fraction doubleChainCoefficient(const Poset& p) {
    long long num = p.size() + p.height() - 2;
    long long den = 2;
    long long g = std::gcd(num, den);
    return Fraction{num / g, den / g};
}

long long doubleChainBound(const Poset& p, int k) {
    if (k < 1) throw InputError("doubleChainBound requires k >= 1");
    long long cap = p.size() + p.height() - 2;
    long long groups = (k + 1) / 2 - 1;
    // Increasing diagonals x - y = c, c = -(k-1)..(k-1); groups of four taken
    // from the low end, the one or three leftover diagonals counted in full.
    long long leftover = 0;
    for (long long c = -(k - 1) + 4 * groups; c <= k - 1; ++c) leftover += k - std::abs(c);
    return groups * cap + leftover;
}

bool ConjectureFiveData::equalityHolds() const {
    return satMatrixValue == exMatrixValue && exMatrixValue == satStarGrid &&
           satStarGrid == laStarGrid;
}

ConjectureFiveData conjectureFive(int n, int s) {
    if (n > 5) throw LimitError("conjectureFive supports n <= 5");
    if (s < 2 || s > 9) throw LimitError("conjectureFive supports 2 <= s <= 9");
    PatternFamily js({jMatrix(s)});
    Poset vee = Poset::builtin("vee:" + std::to_string(s));
    GridShape square = GridShape::cube(n, 2);
    ConjectureFiveData out;
    out.n = n;
    out.s = s;
    out.satMatrixValue = satMatrix(n, n, js).value;
    out.exMatrixValue = exMatrix(n, n, js).value;
    out.satStarGrid = satExact(square, vee, Mode::Strong).value;
    out.laStarGrid = laExact(square, vee, Mode::Strong).value;
    return out;
}

}  // namespace gridposet
