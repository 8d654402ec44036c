#include <doctest.h>

#include "gridposet/grid.hpp"
#include "gridposet/json_io.hpp"
#include "oracles.hpp"

using namespace gridposet;

namespace {

// Count points of [k]^d with coordinate sum r by direct enumeration.
long long enumerateLevel(int k, int d, int r) {
    GridShape shape = GridShape::cube(k, d);
    long long count = 0;
    for (long long i = 0; i < shape.pointCount(); ++i)
        if (shape.pointAt(i).rank() == r) ++count;
    return count;
}

}  // namespace

TEST_CASE("rank") {
    CHECK(GridPoint{{1, 1, 1}}.rank() == 3);
    CHECK(GridPoint{{3, 3}}.rank() == 6);
    CHECK(GridPoint{{2, 3}}.rank() == 5);
}

TEST_CASE("comparable") {
    CHECK(compare(GridPoint{{1, 2}}, GridPoint{{2, 2}}) == Ordering::Below);
    CHECK(compare(GridPoint{{1, 3}}, GridPoint{{3, 1}}) == Ordering::Incomparable);
    CHECK(compare(GridPoint{{2, 2}}, GridPoint{{2, 2}}) == Ordering::Equal);
    CHECK(compare(GridPoint{{3, 1}}, GridPoint{{1, 1}}) == Ordering::Above);
    CHECK_THROWS_AS(compare(GridPoint{{1}}, GridPoint{{1, 1}}), InputError);
}

TEST_CASE("levelSize basics") {
    for (int k = 1; k <= 6; ++k)
        for (int d = 1; d <= 3; ++d) CHECK(levelSize(k, d, d) == 1);
    CHECK(levelSize(3, 2, 4) == enumerateLevel(3, 2, 4));
    CHECK(levelSize(3, 2, 4) == 3);
    CHECK(levelSize(2, 3, 4) == enumerateLevel(2, 3, 4));
    CHECK(levelSize(2, 3, 4) == 3);
    CHECK(levelSize(3, 2, 1) == 0);
    CHECK(levelSize(3, 2, 7) == 0);
}

TEST_CASE("level sizes sum to k^d") {
    for (int k = 1; k <= 6; ++k)
        for (int d = 1; d <= 6; ++d) {
            long long sum = 0, total = 1;
            for (int r = d; r <= k * d; ++r) sum += levelSize(k, d, r);
            for (int i = 0; i < d; ++i) total *= k;
            CHECK(sum == total);
        }
}

TEST_CASE("level size symmetry") {
    for (int k = 1; k <= 8; ++k)
        for (int d = 1; d <= 8; ++d)
            for (int r = d; r <= k * d; ++r)
                CHECK(levelSize(k, d, r) == levelSize(k, d, (k + 1) * d - r));
}

TEST_CASE("level size recurrence") {
    // terms with out-of-range indices read as 0; the d-1 = 0 base counts the
    // empty tuple at rank 0
    auto s = [](int k, int d, int r) -> long long {
        if (d == 0) return r == 0 ? 1 : 0;
        return levelSize(k, d, r);
    };
    for (int k = 1; k <= 8; ++k)
        for (int d = 1; d <= 8; ++d)
            for (int i = 1; i <= k * d + d; ++i)
                CHECK(s(k, d, i) == s(k, d, i - 1) + s(k, d - 1, i - 1) - s(k, d - 1, i - 1 - k));
}

TEST_CASE("width") {
    for (int k = 1; k <= 6; ++k) CHECK(width(k, 1) == 1);
    CHECK(width(3, 2) == 3);
    CHECK(width(3, 2) == oracle::bruteMaxAntichain(GridShape::cube(3, 2)));
    CHECK(width(2, 3) == 3);
    CHECK(width(2, 3) == oracle::bruteMaxAntichain(GridShape::cube(2, 3)));
    // every cube with at most 20 points
    for (int d = 1; d <= 4; ++d)
        for (int k = 1; k <= 20; ++k) {
            long long pts = 1;
            for (int i = 0; i < d; ++i) pts *= k;
            if (pts > 20) break;
            CHECK(width(k, d) == oracle::bruteMaxAntichain(GridShape::cube(k, d)));
        }
}

TEST_CASE("levelSet") {
    GridFamily f = levelSet(GridShape::cube(3, 2), 3);
    CHECK(f.size() == 2);
    CHECK(f.contains(GridPoint{{1, 2}}));
    CHECK(f.contains(GridPoint{{2, 1}}));

    for (int k = 2; k <= 4; ++k)
        for (int d = 1; d <= 2; ++d) {
            GridFamily bottom = levelSet(GridShape::cube(k, d), d);
            CHECK(bottom.size() == 1);
            CHECK(bottom.contains(GridShape::cube(k, d).pointAt(0)));
        }

    CHECK(levelSet(GridShape::cube(2, 3), 4).size() == 3);

    // the middle level is an antichain
    for (int k = 2; k <= 4; ++k) {
        int d = 2;
        GridFamily mid = levelSet(GridShape::cube(k, d), (k + 1) * d / 2);
        auto pts = mid.points();
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                CHECK(compare(pts[i], pts[j]) == Ordering::Incomparable);
    }
}

TEST_CASE("levelSet matches levelSize on rectangles too") {
    GridShape rect({3, 4});
    long long total = 0;
    for (int r = 2; r <= 7; ++r) total += levelSet(rect, r).size();
    CHECK(total == 12);
}

TEST_CASE("shape parsing and indexing") {
    CHECK(GridShape::parse("3x4").dims == std::vector<int>{3, 4});
    CHECK(GridShape::parse("3^2") == GridShape::cube(3, 2));
    CHECK(GridShape::parse("5").dims == std::vector<int>{5});
    CHECK_THROWS_AS(GridShape::parse("3x"), InputError);
    CHECK_THROWS_AS(GridShape::parse("axb"), InputError);
    CHECK_THROWS_AS(GridShape::parse("0x2"), InputError);

    for (const char* s : {"3x4", "2x3x2", "5"}) {
        GridShape shape = GridShape::parse(s);
        for (long long i = 0; i < shape.pointCount(); ++i)
            CHECK(shape.indexOf(shape.pointAt(i)) == i);
    }

    CHECK_THROWS_AS(GridShape({3, 4}).side(), InputError);
    CHECK(GridShape::cube(4, 2).side() == 4);
}

TEST_CASE("family membership and lexicographic point order") {
    GridShape shape({3, 3});
    GridFamily f(shape);
    f.insert(GridPoint{{3, 1}});
    f.insert(GridPoint{{1, 2}});
    f.insert(GridPoint{{2, 3}});
    CHECK(f.size() == 3);
    CHECK(f.contains(GridPoint{{1, 2}}));
    CHECK(!f.contains(GridPoint{{2, 2}}));
    auto pts = f.points();
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == GridPoint{{1, 2}});
    CHECK(pts[1] == GridPoint{{2, 3}});
    CHECK(pts[2] == GridPoint{{3, 1}});
    f.erase(GridPoint{{1, 2}});
    CHECK(f.size() == 2);
}

TEST_CASE("family JSON round trip") {
    GridFamily f(GridShape({2, 3}));
    f.insert(GridPoint{{2, 1}});
    f.insert(GridPoint{{1, 3}});
    nlohmann::json j = toJson(f);
    CHECK(j["dims"] == nlohmann::json({2, 3}));
    CHECK(j["points"][0] == nlohmann::json({1, 3}));  // sorted lexicographically
    GridFamily g = familyFromJson(j);
    CHECK(f == g);

    nlohmann::json bad = {{"dims", {2, 2}}, {"points", {{3, 1}}}};
    CHECK_THROWS_AS(familyFromJson(bad), InputError);
}

TEST_CASE("family point limit") {
    CHECK_NOTHROW(GridFamily(GridShape({1024, 1024})));
    CHECK_THROWS_AS(GridFamily(GridShape({1024, 1025})), LimitError);
}
