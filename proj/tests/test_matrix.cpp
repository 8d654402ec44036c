#include <doctest.h>

#include <random>
#include <set>

#include "gridposet/matrix.hpp"
#include "oracles.hpp"

using namespace gridposet;

namespace {

BinaryMatrix m(const std::string& text) { return BinaryMatrix::fromText(text); }

BinaryMatrix randomMatrix(int rows, int cols, std::mt19937& rng, double density = 0.5) {
    BinaryMatrix a(rows, cols);
    std::bernoulli_distribution coin(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng)) a.set(r, c);
    return a;
}

// Independent enumeration of the compressed strong-embedding matrices of a
// pattern poset: all injections into [n]^2 checked by definition.
std::set<BinaryMatrix> brutePatternFamily(const Poset& p) {
    int n = p.size();
    GridShape square = GridShape::cube(n, 2);
    std::set<BinaryMatrix> out;
    std::vector<long long> img(n);
    std::function<void(int)> rec = [&](int e) {
        if (e == n) {
            BinaryMatrix t(n, n);
            for (int i = 0; i < n; ++i) {
                GridPoint pt = square.pointAt(img[i]);
                t.set(pt.coords[0] - 1, pt.coords[1] - 1);
            }
            out.insert(t.compress());
            return;
        }
        for (long long v = 0; v < square.pointCount(); ++v) {
            bool ok = true;
            for (int f = 0; f < e && ok; ++f) {
                if (img[f] == v) ok = false;
                Ordering o = compare(square.pointAt(v), square.pointAt(img[f]));
                bool below = o == Ordering::Below, above = o == Ordering::Above;
                if (p.less(e, f) != below || p.less(f, e) != above) ok = false;
            }
            if (!ok) continue;
            img[e] = v;
            rec(e + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("matrix text format") {
    BinaryMatrix a = m("010\n001\n100\n");
    CHECK(a.rows() == 3);
    CHECK(a.cols() == 3);
    CHECK(a.get(0, 1));
    CHECK(a.toText() == "010\n001\n100\n");
    CHECK_THROWS_AS(m("01\n0\n"), InputError);
    CHECK_THROWS_AS(m("0a\n"), InputError);
    CHECK_THROWS_AS(m(""), InputError);
}

TEST_CASE("matrixContains basics") {
    BinaryMatrix id3 = m("100\n010\n001\n");
    CHECK(matrixContains(id3, id3));
    CHECK(matrixContains(m("11\n11\n"), m("10\n01\n")));
    CHECK(!matrixContains(id3, jMatrix(2)));
    CHECK(matrixContains(m("01\n10\n"), jMatrix(2)));
}

TEST_CASE("matrixContains agrees with direct submatrix enumeration") {
    std::mt19937 rng(555);
    for (int iter = 0; iter < 200; ++iter) {
        BinaryMatrix a = randomMatrix(1 + rng() % 4, 1 + rng() % 4, rng, 0.6);
        BinaryMatrix p = randomMatrix(1 + rng() % 2, 1 + rng() % 3, rng, 0.5);
        CHECK(matrixContains(a, p) == oracle::bruteMatrixContains(a, p));
    }
}

TEST_CASE("matrixContains is monotone in added ones") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 50; ++iter) {
        BinaryMatrix a = randomMatrix(3, 3, rng, 0.4);
        BinaryMatrix b = a;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (rng() % 3 == 0) b.set(r, c);
        BinaryMatrix p = randomMatrix(2, 2, rng, 0.6);
        if (matrixContains(a, p)) CHECK(matrixContains(b, p));
    }
}

TEST_CASE("jMatrix") {
    CHECK(jMatrix(2).toText() == "01\n10\n");
    BinaryMatrix j3 = jMatrix(3);
    CHECK(j3.toText() == "010\n001\n100\n");  // col 0 = (0,0,1)^T, then I3's first cols
    for (int s = 2; s <= 8; ++s) {
        BinaryMatrix j = jMatrix(s);
        CHECK(j.ones() == s);
        for (int r = 0; r < s; ++r) {
            int rowSum = 0, colSum = 0;
            for (int c = 0; c < s; ++c) {
                rowSum += j.get(r, c);
                colSum += j.get(c, r);
            }
            CHECK(rowSum == 1);
            CHECK(colSum == 1);
        }
    }
    CHECK_THROWS_AS(jMatrix(1), InputError);
}

TEST_CASE("familyToMatrix") {
    CHECK(familyToMatrix(GridFamily(GridShape({2, 2}))).toText() == "00\n00\n");
    CHECK(familyToMatrix(fullFamily(GridShape({2, 3}))).toText() == "111\n111\n");
    GridFamily diag(GridShape({2, 2}));
    diag.insert(GridPoint{{1, 1}});
    diag.insert(GridPoint{{2, 2}});
    CHECK(familyToMatrix(diag).toText() == "10\n01\n");
    CHECK_THROWS_AS(familyToMatrix(GridFamily(GridShape({2, 2, 2}))), InputError);

    std::mt19937 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        BinaryMatrix a = randomMatrix(3, 4, rng);
        CHECK(familyToMatrix(matrixToFamily(a)) == a);
    }
}

TEST_CASE("patternFamilyOf chain:2 is the exact embedding set") {
    PatternFamily fam = patternFamilyOf(Poset::builtin("chain:2"));
    std::set<BinaryMatrix> got(fam.matrices().begin(), fam.matrices().end());
    std::set<BinaryMatrix> expect{m("11\n"), m("1\n1\n"), m("10\n01\n")};
    CHECK(got == expect);
    CHECK(got == brutePatternFamily(Poset::builtin("chain:2")));
}

TEST_CASE("patternFamilyOf matches brute enumeration") {
    for (const char* spec : {"vee:2", "wedge:2", "chain:3", "diamond:2"}) {
        Poset p = Poset::builtin(spec);
        PatternFamily fam = patternFamilyOf(p);
        std::set<BinaryMatrix> got(fam.matrices().begin(), fam.matrices().end());
        CHECK(got == brutePatternFamily(p));
    }
}

TEST_CASE("patternFamilyOf members have no all-zero line") {
    for (const char* spec : {"chain:2", "vee:2", "diamond:2"}) {
        PatternFamily fam = patternFamilyOf(Poset::builtin(spec));
        for (const BinaryMatrix& mat : fam.matrices()) {
            for (int r = 0; r < mat.rows(); ++r) CHECK(!mat.rowAllZero(r));
            for (int c = 0; c < mat.cols(); ++c) CHECK(!mat.colAllZero(c));
        }
    }
}

TEST_CASE("patternFamilyOf rejects higher-dimensional posets") {
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) rels.emplace_back(i, 3 + j);
    CHECK_THROWS_AS(patternFamilyOf(Poset::fromCovers(6, rels)), InputError);
}

TEST_CASE("exMatrix") {
    PatternFamily one({m("1\n")});
    for (int n = 1; n <= 3; ++n)
        for (int mm = 1; mm <= 3; ++mm) CHECK(exMatrix(n, mm, one).value == 0);

    PatternFamily j2({jMatrix(2)});
    for (int n = 1; n <= 4; ++n) {
        MatrixSearchResult res = exMatrix(n, n, j2);
        CHECK(res.value == 2 * n - 1);
        CHECK(avoidsAll(res.witness, j2));
        CHECK(res.witness.ones() == res.value);
    }

    PatternFamily j3({jMatrix(3)});
    CHECK(exMatrix(2, 2, j3).value == 4);

    // brute-force oracle: maximum over all matrices on small boards
    std::mt19937 rng(1);
    for (auto [n, mm] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 4}}) {
        long long best = 0;
        for (unsigned mask = 0; mask < (1u << (n * mm)); ++mask) {
            BinaryMatrix a(n, mm);
            for (int i = 0; i < n * mm; ++i)
                if (mask >> i & 1u) a.set(i / mm, i % mm);
            if (oracle::bruteMatrixContains(a, jMatrix(2))) continue;
            best = std::max(best, a.ones());
        }
        CHECK(exMatrix(n, mm, j2).value == best);
    }
}

TEST_CASE("exMatrix is monotone in the board size") {
    PatternFamily j2({jMatrix(2)});
    long long prev = 0;
    for (int n = 1; n <= 4; ++n) {
        long long v = exMatrix(n, n, j2).value;
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(exMatrix(3, 4, j2).value >= exMatrix(3, 3, j2).value);
}

TEST_CASE("satMatrix") {
    PatternFamily one({m("1\n")});
    MatrixSearchResult res = satMatrix(3, 3, one);
    CHECK(res.value == 0);
    CHECK(res.witness.ones() == 0);
    CHECK(matrixIsSaturated(res.witness, one));

    PatternFamily j2({jMatrix(2)});
    PatternFamily j3({jMatrix(3)});
    for (int n = 2; n <= 3; ++n) {
        CHECK(satMatrix(n, n, j2).value <= exMatrix(n, n, j2).value);
        CHECK(satMatrix(n, n, j3).value <= exMatrix(n, n, j3).value);
    }

    // brute-force oracle for the minimum saturated 1-count, by definition
    auto bruteSaturated = [](const BinaryMatrix& a, const BinaryMatrix& pat) {
        if (oracle::bruteMatrixContains(a, pat)) return false;
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c) {
                if (a.get(r, c)) continue;
                BinaryMatrix flipped = a;
                flipped.set(r, c);
                if (!oracle::bruteMatrixContains(flipped, pat)) return false;
            }
        return true;
    };
    for (auto [n, mm] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 4}}) {
        long long best = -1;
        for (unsigned mask = 0; mask < (1u << (n * mm)); ++mask) {
            BinaryMatrix a(n, mm);
            for (int i = 0; i < n * mm; ++i)
                if (mask >> i & 1u) a.set(i / mm, i % mm);
            if (!bruteSaturated(a, jMatrix(2))) continue;
            if (best < 0 || a.ones() < best) best = a.ones();
        }
        CHECK(satMatrix(n, mm, j2).value == best);
    }

    MatrixSearchResult w = satMatrix(3, 3, j3);
    CHECK(matrixIsSaturated(w.witness, j3));
    CHECK(w.witness.ones() == w.value);
}

TEST_CASE("matrix search limits") {
    PatternFamily j2({jMatrix(2)});
    CHECK_THROWS_AS(exMatrix(7, 7, j2), LimitError);
    CHECK_THROWS_AS(satMatrix(7, 6, j2), LimitError);
}

TEST_CASE("extendSaturated") {
    PatternFamily one({m("1\n")});
    BinaryMatrix z(2, 2);
    BinaryMatrix bigger = extendSaturated(z, one, 5);
    CHECK(bigger.rows() == 5);
    CHECK(bigger.cols() == 5);
    CHECK(bigger.ones() == 0);
    CHECK(matrixIsSaturated(bigger, one));

    // a nontrivial saturated instance with all-zero runs: any two 1-entries
    // form one of these patterns, so a single 1 is saturated
    PatternFamily pair({m("11\n"), m("1\n1\n"), m("10\n01\n"), m("01\n10\n")});
    BinaryMatrix a(5, 5);
    a.set(0, 0);
    REQUIRE(matrixIsSaturated(a, pair));
    BinaryMatrix ext = extendSaturated(a, pair, 8);
    CHECK(ext.rows() == 8);
    CHECK(ext.ones() == a.ones());
    CHECK(matrixIsSaturated(ext, pair));

    // no qualifying runs: the cross matrix is saturated for the 2x2 all-ones
    // pattern but has no all-zero row
    PatternFamily box({m("11\n11\n")});
    BinaryMatrix cross(4, 4);
    for (int i = 0; i < 4; ++i) {
        cross.set(0, i);
        cross.set(i, 0);
    }
    REQUIRE(matrixIsSaturated(cross, box));
    CHECK_THROWS_AS(extendSaturated(cross, box, 6), InputError);
    CHECK_THROWS_AS(extendSaturated(a, pair, 3), InputError);
}

TEST_CASE("grid-to-matrix correspondence on [3]x[3]") {
    GridShape shape({3, 3});
    for (const char* spec : {"vee:2", "vee:3", "diamond:2"}) {
        Poset p = Poset::builtin(spec);
        PatternFamily pats = patternFamilyOf(p);
        for (unsigned mask = 0; mask < (1u << 9); ++mask) {
            GridFamily f = oracle::familyFromMask(shape, mask);
            CHECK(isFree(f, p, Mode::Strong) == avoidsAll(familyToMatrix(f), pats));
        }
    }
}
