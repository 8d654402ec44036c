#pragma once

#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gridposet/common.hpp"

namespace gridposet {

struct GridPoint;

/// Shape of a grid poset [k_1] x ... x [k_d]. Coordinates are 1-based
/// throughout; row-major index = sum (coords[i]-1)*stride[i] with the first
/// coordinate most significant, so index order equals lexicographic order.
struct GridShape {
    std::vector<int> dims;

    GridShape() = default;
    explicit GridShape(std::vector<int> d);
    static GridShape cube(int k, int d);
    /// "3x4", "3^2" or a single integer ("5" == one-dimensional).
    static GridShape parse(const std::string& s);

    int dimension() const { return static_cast<int>(dims.size()); }
    long long pointCount() const;
    bool isCube() const;
    int side() const;  // throws InputError when not a cube

    bool valid(const GridPoint& p) const;
    long long indexOf(const GridPoint& p) const;
    GridPoint pointAt(long long index) const;

    std::string str() const;
    bool operator==(const GridShape&) const = default;
};

struct GridPoint {
    std::vector<int> coords;  // 1-based

    int rank() const;  // coordinate sum
    bool operator==(const GridPoint&) const = default;
};

enum class Ordering { Below, Above, Equal, Incomparable };

/// Coordinatewise comparison; throws InputError on dimension mismatch.
Ordering compare(const GridPoint& p, const GridPoint& q);

/// A subset of a grid, stored as a bitset over row-major point indices.
/// Value type: copies are independent; safe to hand to concurrent workers.
class GridFamily {
public:
    GridFamily() = default;
    explicit GridFamily(GridShape shape);

    const GridShape& shape() const { return shape_; }
    long long universeSize() const { return static_cast<long long>(bits_.size()); }
    long long size() const { return static_cast<long long>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    bool containsIndex(long long i) const { return bits_.test(static_cast<size_t>(i)); }
    bool contains(const GridPoint& p) const;
    void insertIndex(long long i) { bits_.set(static_cast<size_t>(i)); }
    void insert(const GridPoint& p);
    void eraseIndex(long long i) { bits_.reset(static_cast<size_t>(i)); }
    void erase(const GridPoint& p);

    /// Member indices in ascending (row-major == lexicographic) order.
    std::vector<long long> memberIndices() const;
    std::vector<GridPoint> points() const;

    bool isSubsetOf(const GridFamily& o) const;
    bool operator==(const GridFamily& o) const { return shape_ == o.shape_ && bits_ == o.bits_; }

private:
    GridShape shape_;
    boost::dynamic_bitset<> bits_;
};

/// s_{k,d,r}: number of points of [k]^d with coordinate sum r.
/// Zero outside [d, kd]; computed by dynamic programming.
long long levelSize(int k, int d, int r);

/// Largest antichain size of [k]^d: the middle level size
/// s_{k,d,floor((k+1)d/2)}.
long long width(int k, int d);

/// All points of the given rank (any rectangular shape).
GridFamily levelSet(const GridShape& shape, int r);

GridFamily fullFamily(const GridShape& shape);

}  // namespace gridposet
