#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gridposet/common.hpp"
#include "gridposet/grid.hpp"
#include "gridposet/poset.hpp"

namespace gridposet {

/// 0-1 matrix. Text format: one row per line, characters '0'/'1',
/// no separators.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    static BinaryMatrix fromText(const std::string& text);
    static BinaryMatrix fromStream(std::istream& in);
    static BinaryMatrix fromFile(const std::string& path);
    std::string toText() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return bits_.test(static_cast<size_t>(r) * cols_ + c); }
    void set(int r, int c, bool v = true);
    long long ones() const { return static_cast<long long>(bits_.count()); }

    bool rowAllZero(int r) const;
    bool colAllZero(int c) const;

    /// Drop all-zero rows and columns.
    BinaryMatrix compress() const;
    BinaryMatrix transpose() const;

    bool operator==(const BinaryMatrix& o) const;
    bool operator<(const BinaryMatrix& o) const;  // rows, cols, then entries

private:
    int rows_ = 0, cols_ = 0;
    boost::dynamic_bitset<> bits_;  // row-major
};

/// True iff A has a submatrix (row subset x column subset, order preserved)
/// whose 1-entries cover M's 1-entries positionwise.
bool matrixContains(const BinaryMatrix& a, const BinaryMatrix& m);

/// The s x s permutation matrix obtained from the identity by moving its
/// last column to the front. s >= 2.
BinaryMatrix jMatrix(int s);

/// The k x l matrix of a two-dimensional family: entry (i,j) is 1 iff
/// (i,j) is a member.
BinaryMatrix familyToMatrix(const GridFamily& family);
GridFamily matrixToFamily(const BinaryMatrix& m);

/// A deduplicated, nonempty set of forbidden patterns.
class PatternFamily {
public:
    explicit PatternFamily(std::vector<BinaryMatrix> mats);

    const std::vector<BinaryMatrix>& matrices() const { return mats_; }
    /// max over members of max(rows, cols)
    int maxDimension() const;

private:
    std::vector<BinaryMatrix> mats_;
};

/// All compressed matrices M_f of strong embeddings of P into [|P|]^2,
/// deduplicated by exact entry equality (transposes kept distinct).
/// Requires dim(P) <= 2 and |P| <= 5.
PatternFamily patternFamilyOf(const Poset& p);

bool avoidsAll(const BinaryMatrix& a, const PatternFamily& pats);

/// Avoids every pattern, and flipping any 0 to 1 creates a containment.
bool matrixIsSaturated(const BinaryMatrix& a, const PatternFamily& pats);

struct MatrixSearchResult {
    long long value = 0;
    BinaryMatrix witness;
    SearchStats stats;
};

struct MatrixSearchOptions {
    int maxCells = 36;  // n*m limit for the branch-and-bound searches
};

/// Largest number of 1-entries of an n x m matrix avoiding every pattern.
MatrixSearchResult exMatrix(int n, int m, const PatternFamily& pats,
                            MatrixSearchOptions opts = {});

/// Minimum number of 1-entries of a saturated n x m matrix. Iterative
/// deepening on the 1-count (minimum saturation has no subset monotonicity).
MatrixSearchResult satMatrix(int n, int m, const PatternFamily& pats,
                             MatrixSearchOptions opts = {});

/// Insert all-zero rows/columns adjacent to existing all-zero runs of length
/// q = max pattern dimension, producing a targetN x targetN matrix with the
/// same 1-count that is still saturated. Throws InputError when A has no
/// qualifying runs or targetN < max(rows, cols).
BinaryMatrix extendSaturated(const BinaryMatrix& a, const PatternFamily& pats, int targetN);

}  // namespace gridposet
