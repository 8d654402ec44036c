#include "gridposet/grid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gridposet {

namespace {

constexpr long long kMaxFamilyPoints = 1LL << 20;

}  // namespace

GridShape::GridShape(std::vector<int> d) : dims(std::move(d)) {
    if (dims.empty()) throw InputError("grid shape needs at least one dimension");
    for (int k : dims)
        if (k < 1) throw InputError("grid side lengths must be >= 1");
    long long total = 1;
    for (int k : dims) {
        total *= k;
        if (total > (1LL << 40)) throw LimitError("grid point count overflows the engine range");
    }
}

GridShape GridShape::cube(int k, int d) {
    if (d < 1) throw InputError("cube dimension must be >= 1");
    return GridShape(std::vector<int>(static_cast<size_t>(d), k));
}

GridShape GridShape::parse(const std::string& s) {
    auto caret = s.find('^');
    try {
        if (caret != std::string::npos) {
            int k = std::stoi(s.substr(0, caret));
            int d = std::stoi(s.substr(caret + 1));
            return cube(k, d);
        }
        std::vector<int> dims;
        size_t start = 0;
        while (true) {
            size_t end = s.find('x', start);
            std::string part = s.substr(start, end == std::string::npos ? end : end - start);
            size_t used = 0;
            dims.push_back(std::stoi(part, &used));
            if (used != part.size()) throw InputError("cannot parse grid shape '" + s + "'");
            if (end == std::string::npos) break;
            start = end + 1;
        }
        return GridShape(std::move(dims));
    } catch (const std::invalid_argument&) {
        throw InputError("cannot parse grid shape '" + s + "' (expected KxL or K^D)");
    } catch (const std::out_of_range&) {
        throw InputError("grid shape number out of range in '" + s + "'");
    }
}

long long GridShape::pointCount() const {
    long long total = 1;
    for (int k : dims) total *= k;
    return total;
}

bool GridShape::isCube() const {
    return std::all_of(dims.begin(), dims.end(), [&](int k) { return k == dims[0]; });
}

int GridShape::side() const {
    if (!isCube()) throw InputError("operation requires a cubic grid [k]^d, got " + str());
    return dims[0];
}

bool GridShape::valid(const GridPoint& p) const {
    if (p.coords.size() != dims.size()) return false;
    for (size_t i = 0; i < dims.size(); ++i)
        if (p.coords[i] < 1 || p.coords[i] > dims[i]) return false;
    return true;
}

long long GridShape::indexOf(const GridPoint& p) const {
    if (!valid(p)) throw InputError("grid point outside shape " + str());
    long long idx = 0;
    for (size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + (p.coords[i] - 1);
    return idx;
}

GridPoint GridShape::pointAt(long long index) const {
    if (index < 0 || index >= pointCount()) throw InputError("grid index out of range");
    GridPoint p;
    p.coords.assign(dims.size(), 1);
    for (size_t i = dims.size(); i-- > 0;) {
        p.coords[i] = static_cast<int>(index % dims[i]) + 1;
        index /= dims[i];
    }
    return p;
}

std::string GridShape::str() const {
    std::string out;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) out += 'x';
        out += std::to_string(dims[i]);
    }
    return out;
}

int GridPoint::rank() const {
    return std::accumulate(coords.begin(), coords.end(), 0);
}

Ordering compare(const GridPoint& p, const GridPoint& q) {
    if (p.coords.size() != q.coords.size())
        throw InputError("comparing grid points of different dimension");
    bool le = true, ge = true;
    for (size_t i = 0; i < p.coords.size(); ++i) {
        if (p.coords[i] < q.coords[i]) ge = false;
        if (p.coords[i] > q.coords[i]) le = false;
    }
    if (le && ge) return Ordering::Equal;
    if (le) return Ordering::Below;
    if (ge) return Ordering::Above;
    return Ordering::Incomparable;
}

GridFamily::GridFamily(GridShape shape) : shape_(std::move(shape)) {
    long long n = shape_.pointCount();
    if (n > kMaxFamilyPoints)
        throw LimitError("grid " + shape_.str() + " exceeds the 2^20-point family limit");
    bits_.resize(static_cast<size_t>(n));
}

bool GridFamily::contains(const GridPoint& p) const { return containsIndex(shape_.indexOf(p)); }
void GridFamily::insert(const GridPoint& p) { insertIndex(shape_.indexOf(p)); }
void GridFamily::erase(const GridPoint& p) { eraseIndex(shape_.indexOf(p)); }

std::vector<long long> GridFamily::memberIndices() const {
    std::vector<long long> out;
    out.reserve(bits_.count());
    for (size_t i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        out.push_back(static_cast<long long>(i));
    return out;
}

std::vector<GridPoint> GridFamily::points() const {
    std::vector<GridPoint> out;
    out.reserve(bits_.count());
    for (long long i : memberIndices()) out.push_back(shape_.pointAt(i));
    return out;
}

bool GridFamily::isSubsetOf(const GridFamily& o) const {
    return shape_ == o.shape_ && bits_.is_subset_of(o.bits_);
}

long long levelSize(int k, int d, int r) {
    if (k < 1 || d < 1) throw InputError("levelSize requires k,d >= 1");
    if (r < d || r > static_cast<long long>(k) * d) return 0;
    // ways[j] = number of points of [k]^i with coordinate sum j
    std::vector<long long> ways(static_cast<size_t>(k) * d + 1, 0);
    ways[0] = 1;
    for (int i = 1; i <= d; ++i) {
        std::vector<long long> next(ways.size(), 0);
        for (size_t j = 0; j < ways.size(); ++j) {
            if (ways[j] == 0) continue;
            for (int c = 1; c <= k && j + c < next.size(); ++c) next[j + c] += ways[j];
        }
        ways.swap(next);
    }
    return ways[static_cast<size_t>(r)];
}

long long width(int k, int d) {
    if (k < 1 || d < 1) throw InputError("width requires k,d >= 1");
    return levelSize(k, d, (k + 1) * d / 2);
}

GridFamily levelSet(const GridShape& shape, int r) {
    GridFamily out(shape);
    long long n = shape.pointCount();
    for (long long i = 0; i < n; ++i)
        if (shape.pointAt(i).rank() == r) out.insertIndex(i);
    return out;
}

GridFamily fullFamily(const GridShape& shape) {
    GridFamily out(shape);
    long long n = shape.pointCount();
    for (long long i = 0; i < n; ++i) out.insertIndex(i);
    return out;
}

}  // namespace gridposet
