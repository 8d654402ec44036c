#include "gridposet/matrix.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "gridposet/containment.hpp"

namespace gridposet {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    bits_.resize(static_cast<size_t>(rows) * cols);
}

BinaryMatrix BinaryMatrix::fromText(const std::string& text) {
    std::istringstream in(text);
    return fromStream(in);
}

BinaryMatrix BinaryMatrix::fromStream(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw InputError("empty matrix text");
    BinaryMatrix m(static_cast<int>(lines.size()), static_cast<int>(lines[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(lines[r].size()) != m.cols_)
            throw InputError("ragged matrix text at row " + std::to_string(r + 1));
        for (int c = 0; c < m.cols_; ++c) {
            char ch = lines[r][c];
            if (ch != '0' && ch != '1')
                throw InputError("matrix text must contain only '0'/'1'");
            if (ch == '1') m.set(r, c);
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::fromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file '" + path + "'");
    return fromStream(in);
}

std::string BinaryMatrix::toText() const {
    std::string out;
    out.reserve(static_cast<size_t>(rows_) * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

void BinaryMatrix::set(int r, int c, bool v) {
    bits_.set(static_cast<size_t>(r) * cols_ + c, v);
}

bool BinaryMatrix::rowAllZero(int r) const {
    for (int c = 0; c < cols_; ++c)
        if (get(r, c)) return false;
    return true;
}

bool BinaryMatrix::colAllZero(int c) const {
    for (int r = 0; r < rows_; ++r)
        if (get(r, c)) return false;
    return true;
}

BinaryMatrix BinaryMatrix::compress() const {
    std::vector<int> keepR, keepC;
    for (int r = 0; r < rows_; ++r)
        if (!rowAllZero(r)) keepR.push_back(r);
    for (int c = 0; c < cols_; ++c)
        if (!colAllZero(c)) keepC.push_back(c);
    BinaryMatrix out(static_cast<int>(keepR.size()), static_cast<int>(keepC.size()));
    for (size_t i = 0; i < keepR.size(); ++i)
        for (size_t j = 0; j < keepC.size(); ++j)
            if (get(keepR[i], keepC[j])) out.set(static_cast<int>(i), static_cast<int>(j));
    return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(c, r);
    return out;
}

bool BinaryMatrix::operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

bool BinaryMatrix::operator<(const BinaryMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return bits_ < o.bits_;
}

namespace {

// Greedy earliest-fit row matching for a fixed column selection: a host row
// whose selected entries cover a pattern row can always be exchanged for the
// earliest such row.
bool rowsMatchGreedy(const BinaryMatrix& a, const BinaryMatrix& m, const std::vector<int>& cols,
                     int patRowBegin, int patRowEnd, int hostRowBegin, int hostRowEnd) {
    int r = hostRowBegin;
    for (int i = patRowBegin; i < patRowEnd; ++i) {
        for (;; ++r) {
            if (r >= hostRowEnd || hostRowEnd - r < patRowEnd - i) return false;
            bool covers = true;
            for (int j = 0; j < m.cols() && covers; ++j)
                if (m.get(i, j) && !a.get(r, cols[j])) covers = false;
            if (covers) break;
        }
        ++r;
    }
    return true;
}

bool hostRowCovers(const BinaryMatrix& a, const BinaryMatrix& m, const std::vector<int>& cols,
                   int patRow, int hostRow) {
    for (int j = 0; j < m.cols(); ++j)
        if (m.get(patRow, j) && !a.get(hostRow, cols[j])) return false;
    return true;
}

template <class Fn>
bool forEachColumnCombo(int hostCols, int patCols, Fn&& fn) {
    std::vector<int> combo(patCols);
    std::function<bool(int, int)> rec = [&](int j, int from) -> bool {
        if (j == patCols) return fn(combo);
        for (int c = from; c <= hostCols - (patCols - j); ++c) {
            combo[j] = c;
            if (rec(j + 1, c + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

bool matrixContains(const BinaryMatrix& a, const BinaryMatrix& m) {
    if (m.rows() > a.rows() || m.cols() > a.cols()) return false;
    return forEachColumnCombo(a.cols(), m.cols(), [&](const std::vector<int>& cols) {
        return rowsMatchGreedy(a, m, cols, 0, m.rows(), 0, a.rows());
    });
}

namespace {

// Containment in which host cell (r,c) covers some 1-entry of the pattern.
// Used for incremental checks: a containment that appears when (r,c) flips
// to 1 must use (r,c) this way.
bool containsThroughCell(const BinaryMatrix& a, const BinaryMatrix& m, int r, int c) {
    if (m.rows() > a.rows() || m.cols() > a.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        if (i > r || m.rows() - 1 - i > a.rows() - 1 - r) continue;
        for (int j = 0; j < m.cols(); ++j) {
            if (!m.get(i, j)) continue;
            if (j > c || m.cols() - 1 - j > a.cols() - 1 - c) continue;
            // columns: j fixed at c, the rest chosen left and right of c
            bool ok = forEachColumnCombo(c, j, [&](const std::vector<int>& left) {
                std::vector<int> cols(m.cols());
                std::copy(left.begin(), left.end(), cols.begin());
                cols[j] = c;
                return forEachColumnCombo(a.cols() - c - 1, m.cols() - j - 1,
                                          [&](const std::vector<int>& right) {
                    for (size_t t = 0; t < right.size(); ++t)
                        cols[j + 1 + t] = c + 1 + right[t];
                    if (!hostRowCovers(a, m, cols, i, r)) return false;
                    return rowsMatchGreedy(a, m, cols, 0, i, 0, r) &&
                           rowsMatchGreedy(a, m, cols, i + 1, m.rows(), r + 1, a.rows());
                });
            });
            if (ok) return true;
        }
    }
    return false;
}

bool anyContainsThroughCell(const BinaryMatrix& a, const PatternFamily& pats, int r, int c) {
    for (const BinaryMatrix& m : pats.matrices())
        if (containsThroughCell(a, m, r, c)) return true;
    return false;
}

}  // namespace

BinaryMatrix jMatrix(int s) {
    if (s < 2) throw InputError("jMatrix requires s >= 2");
    BinaryMatrix j(s, s);
    j.set(s - 1, 0);
    for (int col = 1; col < s; ++col) j.set(col - 1, col);
    return j;
}

BinaryMatrix familyToMatrix(const GridFamily& family) {
    const GridShape& shape = family.shape();
    if (shape.dimension() != 2)
        throw InputError("familyToMatrix requires a two-dimensional family");
    BinaryMatrix m(shape.dims[0], shape.dims[1]);
    for (const GridPoint& p : family.points()) m.set(p.coords[0] - 1, p.coords[1] - 1);
    return m;
}

GridFamily matrixToFamily(const BinaryMatrix& m) {
    GridFamily f(GridShape({m.rows(), m.cols()}));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) f.insert(GridPoint{{r + 1, c + 1}});
    return f;
}

PatternFamily::PatternFamily(std::vector<BinaryMatrix> mats) : mats_(std::move(mats)) {
    if (mats_.empty()) throw InputError("pattern family must be nonempty");
    std::sort(mats_.begin(), mats_.end());
    mats_.erase(std::unique(mats_.begin(), mats_.end()), mats_.end());
}

int PatternFamily::maxDimension() const {
    int q = 0;
    for (const BinaryMatrix& m : mats_) q = std::max({q, m.rows(), m.cols()});
    return q;
}

PatternFamily patternFamilyOf(const Poset& p) {
    if (p.size() <= 9 && !dimensionAtMost2(p))
        throw InputError("patternFamilyOf requires a poset of dimension at most 2");
    if (p.size() > 5) throw LimitError("patternFamilyOf supports |P| <= 5");
    GridShape square = GridShape::cube(p.size(), 2);
    std::vector<BinaryMatrix> mats;
    for (const auto& image : allStrongCopyImages(square, p)) {
        BinaryMatrix t(p.size(), p.size());
        for (long long idx : image) {
            GridPoint pt = square.pointAt(idx);
            t.set(pt.coords[0] - 1, pt.coords[1] - 1);
        }
        mats.push_back(t.compress());
    }
    return PatternFamily(std::move(mats));
}

bool avoidsAll(const BinaryMatrix& a, const PatternFamily& pats) {
    for (const BinaryMatrix& m : pats.matrices())
        if (matrixContains(a, m)) return false;
    return true;
}

bool matrixIsSaturated(const BinaryMatrix& a, const PatternFamily& pats) {
    if (!avoidsAll(a, pats)) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            if (a.get(r, c)) continue;
            BinaryMatrix flipped = a;
            flipped.set(r, c);
            // a avoids everything, so a new containment must use (r,c)
            if (!anyContainsThroughCell(flipped, pats, r, c)) return false;
        }
    return true;
}

namespace {

struct MatrixSearcher {
    int n, m;
    const PatternFamily& pats;
    SearchStats stats;

    MatrixSearcher(int n_, int m_, const PatternFamily& p) : n(n_), m(m_), pats(p) {}

    int cellRow(int i) const { return i / m; }
    int cellCol(int i) const { return i % m; }
};

struct ExSearcher : MatrixSearcher {
    using MatrixSearcher::MatrixSearcher;
    long long best = -1;
    BinaryMatrix bestM, cur;

    void dfs(int i, long long count) {
        ++stats.nodes;
        int total = n * m;
        if (count + (total - i) <= best) {
            ++stats.prunedBound;
            return;
        }
        if (i == total) return;
        int r = cellRow(i), c = cellCol(i);
        cur.set(r, c);
        if (!anyContainsThroughCell(cur, pats, r, c)) {
            if (count + 1 > best) {
                best = count + 1;
                bestM = cur;
            }
            dfs(i + 1, count + 1);
        } else {
            ++stats.prunedInfeasible;
        }
        cur.set(r, c, false);
        dfs(i + 1, count);
    }
};

struct SatSearcher : MatrixSearcher {
    using MatrixSearcher::MatrixSearcher;
    long long target = 0;
    BinaryMatrix cur, found;
    bool done = false;

    bool saturated() {
        for (int r = 0; r < n && true; ++r)
            for (int c = 0; c < m; ++c) {
                if (cur.get(r, c)) continue;
                BinaryMatrix flipped = cur;
                flipped.set(r, c);
                if (!anyContainsThroughCell(flipped, pats, r, c)) return false;
            }
        return true;
    }

    void dfs(int i, long long count) {
        if (done) return;
        ++stats.nodes;
        if (count == target) {
            if (saturated()) {
                found = cur;
                done = true;
            }
            return;
        }
        int total = n * m;
        if (i == total || count + (total - i) < target) {
            ++stats.prunedBound;
            return;
        }
        int r = cellRow(i), c = cellCol(i);
        cur.set(r, c);
        if (!anyContainsThroughCell(cur, pats, r, c))
            dfs(i + 1, count + 1);
        else
            ++stats.prunedInfeasible;
        cur.set(r, c, false);
        if (done) return;
        dfs(i + 1, count);
    }
};

double elapsedMs(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void checkMatrixLimits(int n, int m, const MatrixSearchOptions& opts) {
    if (n < 1 || m < 1) throw InputError("matrix dimensions must be >= 1");
    if (static_cast<long long>(n) * m > opts.maxCells)
        throw LimitError("matrix search limit is " + std::to_string(opts.maxCells) +
                         " cells; got " + std::to_string(n) + "x" + std::to_string(m));
}

}  // namespace

MatrixSearchResult exMatrix(int n, int m, const PatternFamily& pats, MatrixSearchOptions opts) {
    checkMatrixLimits(n, m, opts);
    auto start = std::chrono::steady_clock::now();
    BinaryMatrix zero(n, m);
    if (!avoidsAll(zero, pats))
        throw InputError("pattern family admits no avoiding matrix of this size");
    ExSearcher s(n, m, pats);
    s.cur = zero;
    s.bestM = zero;
    s.best = 0;
    s.dfs(0, 0);
    MatrixSearchResult out{s.best, s.bestM, s.stats};
    out.stats.wallMs = elapsedMs(start);
    return out;
}

MatrixSearchResult satMatrix(int n, int m, const PatternFamily& pats, MatrixSearchOptions opts) {
    checkMatrixLimits(n, m, opts);
    auto start = std::chrono::steady_clock::now();
    BinaryMatrix zero(n, m);
    if (!avoidsAll(zero, pats))
        throw InputError("pattern family admits no avoiding matrix of this size");
    SatSearcher s(n, m, pats);
    for (long long target = 0; target <= static_cast<long long>(n) * m; ++target) {
        s.cur = zero;
        s.target = target;
        s.done = false;
        s.dfs(0, 0);
        if (s.done) {
            MatrixSearchResult out{target, s.found, s.stats};
            out.stats.wallMs = elapsedMs(start);
            return out;
        }
    }
    // unreachable: a maximum avoiding matrix is always saturated
    throw std::logic_error("no saturated matrix found");
}

BinaryMatrix extendSaturated(const BinaryMatrix& a, const PatternFamily& pats, int targetN) {
    int q = pats.maxDimension();
    auto findRun = [q](int count, auto&& allZero) {
        for (int start = 0; start + q <= count; ++start) {
            bool ok = true;
            for (int i = 0; i < q && ok; ++i)
                if (!allZero(start + i)) ok = false;
            if (ok) return start;
        }
        return -1;
    };
    int rowRun = findRun(a.rows(), [&](int r) { return a.rowAllZero(r); });
    int colRun = findRun(a.cols(), [&](int c) { return a.colAllZero(c); });
    if (rowRun < 0 || colRun < 0)
        throw InputError("extendSaturated requires " + std::to_string(q) +
                         " consecutive all-zero rows and columns");
    if (targetN < a.rows() || targetN < a.cols())
        throw InputError("extendSaturated target size must not shrink the matrix");
    int addR = targetN - a.rows(), addC = targetN - a.cols();
    BinaryMatrix out(targetN, targetN);
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) out.set(r < rowRun ? r : r + addR, c < colRun ? c : c + addC);
    return out;
}

}  // namespace gridposet
