#include <doctest.h>

#include <sstream>

#include "gridposet/poset.hpp"
#include "oracles.hpp"

using namespace gridposet;

namespace {

int relationPairCount(const Poset& p) {
    int count = 0;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.less(a, b)) ++count;
    return count;
}

// 3 minimal and 3 maximal elements, a_i < b_j iff i != j.
Poset standardExampleS3() {
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) rels.emplace_back(i, 3 + j);
    return Poset::fromCovers(6, rels);
}

}  // namespace

TEST_CASE("builtin posets") {
    Poset c1 = Poset::builtin("chain:1");
    CHECK(c1.size() == 1);
    CHECK(relationPairCount(c1) == 0);

    Poset v2 = Poset::builtin("vee:2");
    CHECK(v2.size() == 3);
    CHECK(relationPairCount(v2) == 2);
    CHECK(v2.less(0, 1));
    CHECK(v2.less(0, 2));
    CHECK(!v2.less(1, 2));

    Poset d2 = Poset::builtin("diamond:2");
    CHECK(d2.size() == 4);
    CHECK(d2.less(0, 1));
    CHECK(d2.less(0, 2));
    CHECK(d2.less(0, 3));
    CHECK(d2.less(1, 3));
    CHECK(d2.less(2, 3));
    CHECK(relationPairCount(d2) == 5);
    CHECK(d2.height() == 3);

    Poset w3 = Poset::builtin("wedge:3");
    CHECK(w3.size() == 4);
    for (int i = 1; i <= 3; ++i) CHECK(w3.less(i, 0));

    // vee:1 is admitted and coincides with chain:2
    Poset v1 = Poset::builtin("vee:1");
    CHECK(v1.size() == 2);
    CHECK(v1.less(0, 1));
}

TEST_CASE("builtin errors") {
    CHECK_THROWS_AS(Poset::builtin("star:3"), InputError);
    CHECK_THROWS_AS(Poset::builtin("chain:0"), InputError);
    CHECK_THROWS_AS(Poset::builtin("vee:13"), InputError);
    CHECK_THROWS_AS(Poset::builtin("vee"), InputError);
    CHECK_THROWS_AS(Poset::builtin("vee:2x"), InputError);
}

TEST_CASE("height") {
    CHECK(Poset::builtin("chain:4").height() == 4);
    CHECK(Poset::builtin("diamond:2").height() == 3);
    Poset v5 = Poset::builtin("vee:5");
    CHECK(v5.height() == 2);
    CHECK(v5.height() == oracle::bruteHeight(v5));
    for (const char* spec : {"chain:3", "vee:4", "wedge:2", "diamond:3"}) {
        Poset p = Poset::builtin(spec);
        CHECK(p.height() == oracle::bruteHeight(p));
    }
}

TEST_CASE("comparability components") {
    auto comps = Poset::builtin("vee:3").comparabilityComponents();
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 4);

    auto single = Poset::antichain(3).comparabilityComponents();
    CHECK(single.size() == 3);

    Poset u = Poset::disjointUnion(Poset::builtin("chain:2"), Poset::builtin("chain:3"));
    auto uc = u.comparabilityComponents();
    REQUIRE(uc.size() == 2);
    CHECK(uc[0].size() == 2);
    CHECK(uc[1].size() == 3);

    // single block for every builtin family
    for (const char* spec : {"chain:5", "vee:2", "wedge:4", "diamond:3"})
        CHECK(Poset::builtin(spec).comparabilityComponents().size() == 1);
}

TEST_CASE("dimensionAtMost2 finds realizers") {
    auto r = dimensionAtMost2(Poset::builtin("chain:3"));
    REQUIRE(r.has_value());
    CHECK(r->realizes(Poset::builtin("chain:3")));

    auto rv = dimensionAtMost2(Poset::builtin("vee:3"));
    REQUIRE(rv.has_value());
    CHECK(rv->realizes(Poset::builtin("vee:3")));

    for (const char* spec : {"chain:4", "vee:4", "wedge:3", "diamond:2", "diamond:4"}) {
        Poset p = Poset::builtin(spec);
        auto rr = dimensionAtMost2(p);
        REQUIRE_MESSAGE(rr.has_value(), spec);
        CHECK_MESSAGE(rr->realizes(p), spec);
    }
}

TEST_CASE("dimensionAtMost2 rejects the standard example") {
    CHECK(!dimensionAtMost2(standardExampleS3()).has_value());
}

TEST_CASE("dimensionAtMost2 size limit") {
    CHECK_THROWS_AS(dimensionAtMost2(Poset::antichain(10)), LimitError);
}

TEST_CASE("poset text format") {
    std::istringstream in(
        "# cover relations\n"
        "a < b\n"
        "b < c\n"
        "\n"
        "a < d  # inline comment\n");
    Poset p = Poset::fromStream(in);
    CHECK(p.size() == 4);
    CHECK(p.label(0) == "a");
    CHECK(p.less(0, 2));  // transitive closure a < c

    std::istringstream cyc("a < b\nb < a\n");
    CHECK_THROWS_AS(Poset::fromStream(cyc), InputError);

    std::istringstream bad("a > b\n");
    CHECK_THROWS_AS(Poset::fromStream(bad), InputError);
}

TEST_CASE("fromRelation validates axioms") {
    std::vector<std::vector<bool>> notTransitive{{false, true, false},
                                                 {false, false, true},
                                                 {false, false, false}};
    CHECK_THROWS_AS(Poset::fromRelation(3, notTransitive), InputError);

    std::vector<std::vector<bool>> reflexive{{true}};
    CHECK_THROWS_AS(Poset::fromRelation(1, reflexive), InputError);
}

TEST_CASE("cover pairs regenerate the closure") {
    Poset p = Poset::builtin("diamond:2");
    auto covers = p.coverPairs();
    // diamond covers: a<b1, a<b2, b1<c, b2<c (a<c is not a cover)
    CHECK(covers.size() == 4);
    Poset q = Poset::fromCovers(p.size(), covers, p.labels());
    CHECK(p == q);
}

TEST_CASE("height equals size iff chain") {
    for (const char* spec : {"chain:1", "chain:6", "vee:2", "diamond:2", "wedge:5"}) {
        Poset p = Poset::builtin(spec);
        CHECK(p.height() <= p.size());
        bool isChain = std::string(spec).rfind("chain", 0) == 0 || p.size() <= 1 ||
                       std::string(spec) == "vee:1";
        CHECK((p.height() == p.size()) == isChain);
    }
}

TEST_CASE("dual flips relations") {
    Poset v = Poset::builtin("vee:3");
    Poset w = v.dual();
    for (int a = 0; a < v.size(); ++a)
        for (int b = 0; b < v.size(); ++b) CHECK(v.less(a, b) == w.less(b, a));
}
