#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridposet/common.hpp"

namespace gridposet {

/// A finite strict partial order on elements 0..n-1, stored as the full
/// transitive relation matrix so containment search gets O(1) relation
/// queries. Immutable after construction; safe to share across workers.
class Poset {
public:
    Poset() = default;

    /// n isolated elements (empty relation).
    static Poset antichain(int n, std::vector<std::string> labels = {});

    /// Build from cover (or any generating) relations; the relation is
    /// transitively closed on load. Throws InputError on cycles.
    static Poset fromCovers(int n, const std::vector<std::pair<int, int>>& relations,
                            std::vector<std::string> labels = {});

    /// Build from a full relation matrix; validates the poset axioms.
    static Poset fromRelation(int n, const std::vector<std::vector<bool>>& less,
                              std::vector<std::string> labels = {});

    /// Text format: one relation per line, "a < b", '#' starts a comment.
    /// Element labels are registered in order of first appearance.
    static Poset fromStream(std::istream& in);
    static Poset fromFile(const std::string& path);

    /// Builtin specs: chain:p, vee:s, wedge:s, diamond:k (parameter 1..12).
    /// vee:1 is admitted and coincides with chain:2.
    static Poset builtin(const std::string& spec);

    int size() const { return n_; }
    bool less(int a, int b) const { return less_[static_cast<size_t>(a) * n_ + b]; }
    bool comparable(int a, int b) const { return a != b && (less(a, b) || less(b, a)); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Cover pairs (a,b): a < b with no c strictly between. Derived on demand.
    std::vector<std::pair<int, int>> coverPairs() const;

    /// Element count of a longest chain.
    int height() const;

    /// Connected components of the comparability graph, each sorted,
    /// ordered by smallest member.
    std::vector<std::vector<int>> comparabilityComponents() const;

    Poset dual() const;
    static Poset disjointUnion(const Poset& a, const Poset& b);

    bool operator==(const Poset& o) const { return n_ == o.n_ && less_ == o.less_; }

private:
    int n_ = 0;
    std::vector<bool> less_;  // n*n row-major; less_[a*n+b] == "a strictly below b"
    std::vector<std::string> labels_;

    void checkAxioms() const;
};

/// Two permutations of a poset's elements whose intersection realizes it:
/// a < b iff both orders rank a before b.
struct Realizer2 {
    std::vector<int> pi1, pi2;  // element ids in linear order

    bool realizes(const Poset& p) const;
};

/// Search for a 2-realizer; absent if dim(P) > 2. Exhaustive over linear
/// extensions (the second order is forced by the first). |P| <= 9.
std::optional<Realizer2> dimensionAtMost2(const Poset& p);

}  // namespace gridposet
