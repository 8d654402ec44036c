#include "gridposet/containment.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gridposet {

namespace {

// Prepared pattern: relation table, assignment order (decreasing
// comparability degree), and interchange classes used for symmetry breaking.
// Two pattern elements are interchangeable when they are incomparable and
// relate identically to every other element; within a class, witnesses are
// normalized to increasing host positions along the assignment order.
struct PatternInfo {
    int p = 0;
    std::vector<int8_t> rel;  // p*p: 1 a<b, -1 b<a, 0 incomparable/equal
    std::vector<int> order;
    std::vector<int> classPrev;  // per element: previous class member in assignment order
    std::vector<int> classNext;

    int8_t relation(int a, int b) const { return rel[static_cast<size_t>(a) * p + b]; }

    explicit PatternInfo(const Poset& pat) : p(pat.size()) {
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
                if (relation(a, b) != 0) ++degree[a];
        order.resize(p);
        for (int i = 0; i < p; ++i) order[i] = i;
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
        std::vector<std::vector<int>> classes;  // members in assignment order
        for (int e : order) {
            bool joined = false;
            for (auto& cls : classes) {
                bool all = std::all_of(cls.begin(), cls.end(),
                                       [&](int f) { return interchangeable(e, f); });
                if (all) {
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

// Backtracking over injections pattern -> host members. Host requirements:
// memberCount(), relate(a, b) -> Ordering, memberId(a) -> long long.
template <class Host>
class CopySearch {
public:
    CopySearch(const Host& host, const Poset& pattern, Mode mode)
        : host_(host), pat_(pattern), mode_(mode), assign_(pat_.p, -1) {}

    // Find one witness; when forcedMember >= 0, the image must contain it.
    std::optional<Witness> findOne(int forcedMember = -1) {
        forced_ = forcedMember;
        Witness w;
        bool found = false;
        run([&](const std::vector<int>& assign) {
            w.image.resize(pat_.p);
            for (int e = 0; e < pat_.p; ++e) w.image[e] = host_.memberId(assign[e]);
            found = true;
            return false;  // stop
        });
        if (found) return w;
        return std::nullopt;
    }

    // Visit every normalized witness; cb returns false to stop early.
    void enumerateAll(const std::function<bool(const std::vector<int>&)>& cb) {
        forced_ = -1;
        run(cb);
    }

private:
    const Host& host_;
    PatternInfo pat_;
    Mode mode_;
    std::vector<int> assign_;
    int forced_ = -1;
    bool stop_ = false;
    const std::function<bool(const std::vector<int>&)>* cb_ = nullptr;

    void run(const std::function<bool(const std::vector<int>&)>& cb) {
        if (pat_.p > host_.memberCount()) return;
        cb_ = &cb;
        stop_ = false;
        std::fill(assign_.begin(), assign_.end(), -1);
        dfs(0);
    }

    bool feasible(int e, int m) const {
        for (int f = 0; f < pat_.p; ++f) {
            int mf = assign_[f];
            if (mf < 0 || f == e) continue;
            if (mf == m) return false;  // injectivity
            int8_t r = pat_.relation(e, f);
            Ordering o = host_.relate(m, mf);
            if (r == 1) {
                if (o != Ordering::Below) return false;
            } else if (r == -1) {
                if (o != Ordering::Above) return false;
            } else if (mode_ == Mode::Strong) {
                if (o != Ordering::Incomparable) return false;
            }
        }
        int prev = pat_.classPrev[e];
        if (prev >= 0 && assign_[prev] >= 0 && m <= assign_[prev]) return false;
        int next = pat_.classNext[e];
        if (next >= 0 && assign_[next] >= 0 && m >= assign_[next]) return false;
        return true;
    }

    void dfs(int t) {
        if (stop_) return;
        if (t == pat_.p) {
            if (!(*cb_)(assign_)) stop_ = true;
            return;
        }
        int e = pat_.order[t];
        bool lastChance = forced_ >= 0 && t == pat_.p - 1 &&
                          std::none_of(assign_.begin(), assign_.end(),
                                       [&](int m) { return m == forced_; });
        int n = host_.memberCount();
        for (int m = 0; m < n; ++m) {
            if (lastChance && m != forced_) continue;
            if (!feasible(e, m)) continue;
            assign_[e] = m;
            dfs(t + 1);
            assign_[e] = -1;
            if (stop_) return;
        }
    }
};

// Members of a grid family, related by coordinatewise comparison.
struct GridHost {
    const GridShape* shape;
    std::vector<long long> ids;
    std::vector<GridPoint> pts;

    explicit GridHost(const GridFamily& f) : shape(&f.shape()), ids(f.memberIndices()) {
        pts.reserve(ids.size());
        for (long long i : ids) pts.push_back(shape->pointAt(i));
    }

    int memberCount() const { return static_cast<int>(ids.size()); }
    Ordering relate(int a, int b) const { return compare(pts[a], pts[b]); }
    long long memberId(int a) const { return ids[a]; }
};

struct PosetHost {
    const Poset* q;

    int memberCount() const { return q->size(); }
    Ordering relate(int a, int b) const {
        if (q->less(a, b)) return Ordering::Below;
        if (q->less(b, a)) return Ordering::Above;
        return Ordering::Incomparable;
    }
    long long memberId(int a) const { return a; }
};

void checkPatternLimit(const Poset& pattern) {
    if (pattern.size() > 10) throw LimitError("containment search supports |P| <= 10");
}

}  // namespace

std::optional<Witness> containsCopy(const GridFamily& host, const Poset& pattern, Mode mode) {
    checkPatternLimit(pattern);
    GridHost h(host);
    return CopySearch<GridHost>(h, pattern, mode).findOne();
}

std::optional<Witness> containsCopy(const Poset& host, const Poset& pattern, Mode mode) {
    checkPatternLimit(pattern);
    PosetHost h{&host};
    return CopySearch<PosetHost>(h, pattern, mode).findOne();
}

std::optional<Witness> containsCopyThrough(const GridFamily& host, const Poset& pattern,
                                           Mode mode, long long pointIndex) {
    checkPatternLimit(pattern);
    if (!host.containsIndex(pointIndex))
        throw InputError("containsCopyThrough point is not a member of the family");
    GridHost h(host);
    int pos = static_cast<int>(std::lower_bound(h.ids.begin(), h.ids.end(), pointIndex) -
                               h.ids.begin());
    return CopySearch<GridHost>(h, pattern, mode).findOne(pos);
}

bool isFree(const GridFamily& host, const Poset& pattern, Mode mode) {
    return !containsCopy(host, pattern, mode).has_value();
}

bool isFree(const GridFamily& host, std::span<const Poset> patterns, Mode mode) {
    for (const Poset& p : patterns)
        if (!isFree(host, p, mode)) return false;
    return true;
}

bool isSaturated(const GridFamily& host, std::span<const Poset> patterns, Mode mode) {
    if (!isFree(host, patterns, mode)) return false;
    long long n = host.universeSize();
    for (long long x = 0; x < n; ++x) {
        if (host.containsIndex(x)) continue;
        GridFamily extended = host;
        extended.insertIndex(x);
        bool creates = false;
        for (const Poset& p : patterns) {
            // host is free, so any copy in host+x must use x
            if (containsCopyThrough(extended, p, mode, x)) {
                creates = true;
                break;
            }
        }
        if (!creates) return false;
    }
    return true;
}

bool isSaturated(const GridFamily& host, const Poset& pattern, Mode mode) {
    return isSaturated(host, std::span<const Poset>(&pattern, 1), mode);
}

bool witnessValid(const GridFamily& host, const Poset& pattern, Mode mode, const Witness& w) {
    int p = pattern.size();
    if (static_cast<int>(w.image.size()) != p) return false;
    for (int e = 0; e < p; ++e) {
        if (!host.containsIndex(w.image[e])) return false;
        for (int f = 0; f < p; ++f) {
            if (e == f) continue;
            if (w.image[e] == w.image[f]) return false;
        }
    }
    const GridShape& shape = host.shape();
    for (int e = 0; e < p; ++e)
        for (int f = 0; f < p; ++f) {
            if (e == f) continue;
            Ordering o = compare(shape.pointAt(w.image[e]), shape.pointAt(w.image[f]));
            if (pattern.less(e, f)) {
                if (o != Ordering::Below) return false;
            } else if (!pattern.less(f, e) && mode == Mode::Strong) {
                if (o != Ordering::Incomparable) return false;
            }
        }
    return true;
}

std::vector<std::vector<long long>> allStrongCopyImages(const GridShape& shape,
                                                        const Poset& pattern) {
    if (pattern.size() > 6) throw LimitError("strong-copy enumeration supports |P| <= 6");
    if (shape.pointCount() > 64) throw LimitError("strong-copy enumeration supports <= 64 points");
    GridFamily full = fullFamily(shape);
    GridHost h(full);
    std::set<std::vector<long long>> images;
    CopySearch<GridHost>(h, pattern, Mode::Strong).enumerateAll([&](const std::vector<int>& a) {
        std::vector<long long> ids;
        ids.reserve(a.size());
        for (int m : a) ids.push_back(h.memberId(m));
        std::sort(ids.begin(), ids.end());
        images.insert(std::move(ids));
        return true;
    });
    return {images.begin(), images.end()};
}

bool strongCopiesNeighborFree(const Poset& pattern, const GridShape& shape) {
    if (shape.dimension() != 2) throw LimitError("neighbor-freeness is defined on [k]x[l]");
    if (pattern.size() > 6 || shape.dims[0] > 6 || shape.dims[1] > 6)
        throw LimitError("neighbor-freeness check supports |P| <= 6 and shapes up to 6x6");
    auto neighbors = [](const GridPoint& a, const GridPoint& b) {
        int dist = std::abs(a.coords[0] - b.coords[0]) + std::abs(a.coords[1] - b.coords[1]);
        return dist == 1;
    };
    for (const auto& image : allStrongCopyImages(shape, pattern)) {
        for (size_t i = 0; i < image.size(); ++i)
            for (size_t j = i + 1; j < image.size(); ++j)
                if (neighbors(shape.pointAt(image[i]), shape.pointAt(image[j]))) return false;
    }
    return true;
}

}  // namespace gridposet
