#include "gridposet/poset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace gridposet {

const char* modeName(Mode m) { return m == Mode::Weak ? "weak" : "strong"; }

Mode parseMode(const std::string& s) {
    if (s == "weak") return Mode::Weak;
    if (s == "strong") return Mode::Strong;
    throw InputError("unknown mode '" + s + "' (expected weak|strong)");
}

namespace {

std::vector<std::string> defaultLabels(int n) {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = "e" + std::to_string(i);
    return out;
}

}  // namespace

Poset Poset::antichain(int n, std::vector<std::string> labels) {
    if (n < 0) throw InputError("negative element count");
    Poset p;
    p.n_ = n;
    p.less_.assign(static_cast<size_t>(n) * n, false);
    p.labels_ = labels.empty() ? defaultLabels(n) : std::move(labels);
    if (static_cast<int>(p.labels_.size()) != n) throw InputError("label count mismatch");
    return p;
}

Poset Poset::fromCovers(int n, const std::vector<std::pair<int, int>>& relations,
                        std::vector<std::string> labels) {
    Poset p = antichain(n, std::move(labels));
    for (auto [a, b] : relations) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("relation index out of range");
        if (a == b) throw InputError("reflexive relation in input");
        p.less_[static_cast<size_t>(a) * n + b] = true;
    }
    // Floyd-Warshall transitive closure.
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            if (p.less(a, m))
                for (int b = 0; b < n; ++b)
                    if (p.less(m, b)) p.less_[static_cast<size_t>(a) * n + b] = true;
    for (int a = 0; a < n; ++a)
        if (p.less(a, a)) throw InputError("relation contains a cycle through '" + p.label(a) + "'");
    p.checkAxioms();
    return p;
}

Poset Poset::fromRelation(int n, const std::vector<std::vector<bool>>& less,
                          std::vector<std::string> labels) {
    Poset p = antichain(n, std::move(labels));
    if (static_cast<int>(less.size()) != n) throw InputError("relation matrix size mismatch");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(less[a].size()) != n) throw InputError("relation matrix size mismatch");
        for (int b = 0; b < n; ++b) p.less_[static_cast<size_t>(a) * n + b] = less[a][b];
    }
    p.checkAxioms();
    return p;
}

void Poset::checkAxioms() const {
    for (int a = 0; a < n_; ++a) {
        if (less(a, a)) throw InputError("relation is not irreflexive");
        for (int b = 0; b < n_; ++b) {
            if (less(a, b) && less(b, a)) throw InputError("relation is not antisymmetric");
            if (!less(a, b)) continue;
            for (int c = 0; c < n_; ++c)
                if (less(b, c) && !less(a, c)) throw InputError("relation is not transitive");
        }
    }
}

Poset Poset::fromStream(std::istream& in) {
    std::map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rels;
    std::string line;
    int lineNo = 0;
    auto idOf = [&](const std::string& tok) {
        auto it = ids.find(tok);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(labels.size());
        ids.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };
    while (std::getline(in, line)) {
        ++lineNo;
        std::string_view sv(line);
        auto hash = sv.find('#');
        if (hash != std::string_view::npos) sv = sv.substr(0, hash);
        std::istringstream ls{std::string(sv)};
        std::string a, op, b, extra;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> op >> b) || op != "<" || (ls >> extra))
            throw InputError("line " + std::to_string(lineNo) + ": expected 'a < b'");
        int ia = idOf(a);
        int ib = idOf(b);
        rels.emplace_back(ia, ib);
    }
    int n = static_cast<int>(labels.size());
    return fromCovers(n, rels, std::move(labels));
}

Poset Poset::fromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open poset file '" + path + "'");
    return fromStream(in);
}

Poset Poset::builtin(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("builtin spec must be name:parameter");
    std::string name = spec.substr(0, colon);
    int param = 0;
    try {
        size_t used = 0;
        param = std::stoi(spec.substr(colon + 1), &used);
        if (colon + 1 + used != spec.size()) throw InputError("");
    } catch (...) {
        throw InputError("bad builtin parameter in '" + spec + "'");
    }
    if (param < 1 || param > 12)
        throw InputError("builtin parameter out of range 1..12 in '" + spec + "'");

    std::vector<std::pair<int, int>> rels;
    std::vector<std::string> labels;
    int n = 0;
    if (name == "chain") {
        n = param;
        for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i + 1));
        for (int i = 0; i + 1 < n; ++i) rels.emplace_back(i, i + 1);
    } else if (name == "vee" || name == "wedge") {
        int s = param;
        n = s + 1;
        labels.push_back("a");
        for (int i = 1; i <= s; ++i) labels.push_back("b" + std::to_string(i));
        for (int i = 1; i <= s; ++i) {
            if (name == "vee")
                rels.emplace_back(0, i);
            else
                rels.emplace_back(i, 0);
        }
    } else if (name == "diamond") {
        int k = param;
        n = k + 2;
        labels.push_back("a");
        for (int i = 1; i <= k; ++i) labels.push_back("b" + std::to_string(i));
        labels.push_back("c");
        for (int i = 1; i <= k; ++i) {
            rels.emplace_back(0, i);
            rels.emplace_back(i, k + 1);
        }
        rels.emplace_back(0, k + 1);
    } else {
        throw InputError("unknown builtin poset '" + name + "'");
    }
    return fromCovers(n, rels, std::move(labels));
}

std::vector<std::pair<int, int>> Poset::coverPairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n_ && cover; ++c)
                if (less(a, c) && less(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

int Poset::height() const {
    // Longest chain by DP over the relation (already transitive).
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = 0, db = 0;
        for (int c = 0; c < n_; ++c) {
            da += less(c, a);
            db += less(c, b);
        }
        return da < db;  // number of elements below is a topological key
    });
    std::vector<int> best(n_, 1);
    int h = n_ > 0 ? 1 : 0;
    for (int idx = 0; idx < n_; ++idx) {
        int b = order[idx];
        for (int jdx = 0; jdx < idx; ++jdx) {
            int a = order[jdx];
            if (less(a, b)) best[b] = std::max(best[b], best[a] + 1);
        }
        h = std::max(h, best[b]);
    }
    return h;
}

std::vector<std::vector<int>> Poset::comparabilityComponents() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n_; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{start}, members;
        comp[start] = id;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (int b = 0; b < n_; ++b)
                if (comp[b] < 0 && comparable(a, b)) {
                    comp[b] = id;
                    stack.push_back(b);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Poset Poset::dual() const {
    Poset p;
    p.n_ = n_;
    p.labels_ = labels_;
    p.less_.assign(static_cast<size_t>(n_) * n_, false);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (less(a, b)) p.less_[static_cast<size_t>(b) * n_ + a] = true;
    return p;
}

Poset Poset::disjointUnion(const Poset& x, const Poset& y) {
    int n = x.n_ + y.n_;
    std::vector<std::pair<int, int>> rels;
    std::vector<std::string> labels;
    for (int a = 0; a < x.n_; ++a) labels.push_back("l." + x.label(a));
    for (int a = 0; a < y.n_; ++a) labels.push_back("r." + y.label(a));
    for (int a = 0; a < x.n_; ++a)
        for (int b = 0; b < x.n_; ++b)
            if (x.less(a, b)) rels.emplace_back(a, b);
    for (int a = 0; a < y.n_; ++a)
        for (int b = 0; b < y.n_; ++b)
            if (y.less(a, b)) rels.emplace_back(x.n_ + a, x.n_ + b);
    return fromCovers(n, rels, std::move(labels));
}

bool Realizer2::realizes(const Poset& p) const {
    int n = p.size();
    if (static_cast<int>(pi1.size()) != n || static_cast<int>(pi2.size()) != n) return false;
    std::vector<int> pos1(n, -1), pos2(n, -1);
    for (int i = 0; i < n; ++i) {
        if (pi1[i] < 0 || pi1[i] >= n || pi2[i] < 0 || pi2[i] >= n) return false;
        pos1[pi1[i]] = i;
        pos2[pi2[i]] = i;
    }
    for (int i = 0; i < n; ++i)
        if (pos1[i] < 0 || pos2[i] < 0) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            bool both = pos1[a] < pos1[b] && pos2[a] < pos2[b];
            if (p.less(a, b) != both) return false;
        }
    return true;
}

namespace {

// Enumerate linear extensions of p; for each, the second order of a
// candidate realizer is forced (comparable pairs follow p, incomparable
// pairs must be reversed), so it only remains to test acyclicity.
bool searchExtension(const Poset& p, std::vector<int>& prefix, std::vector<bool>& placed,
                     Realizer2& out) {
    int n = p.size();
    if (static_cast<int>(prefix.size()) == n) {
        std::vector<int> pos1(n);
        for (int i = 0; i < n; ++i) pos1[prefix[i]] = i;
        // forced[a][b]: a must come before b in the second order
        std::vector<int> indeg(n, 0);
        std::vector<std::vector<bool>> forced(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                bool before;
                if (p.less(a, b))
                    before = true;
                else if (p.less(b, a))
                    before = false;
                else
                    before = pos1[a] > pos1[b];  // disagree with the first order
                forced[a][b] = before;
            }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (forced[a][b]) ++indeg[b];
        // Kahn's algorithm; the tournament is a total order iff acyclic.
        std::vector<int> order;
        std::vector<bool> used(n, false);
        for (int step = 0; step < n; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!used[v] && indeg[v] == 0) {
                    pick = v;
                    break;
                }
            if (pick < 0) return false;
            used[pick] = true;
            order.push_back(pick);
            for (int b = 0; b < n; ++b)
                if (forced[pick][b]) --indeg[b];
        }
        out.pi1 = prefix;
        out.pi2 = order;
        return true;
    }
    for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        bool ready = true;
        for (int u = 0; u < n && ready; ++u)
            if (p.less(u, v) && !placed[u]) ready = false;
        if (!ready) continue;
        placed[v] = true;
        prefix.push_back(v);
        if (searchExtension(p, prefix, placed, out)) return true;
        prefix.pop_back();
        placed[v] = false;
    }
    return false;
}

}  // namespace

std::optional<Realizer2> dimensionAtMost2(const Poset& p) {
    if (p.size() > 9) throw LimitError("dimensionAtMost2 supports |P| <= 9");
    std::vector<int> prefix;
    std::vector<bool> placed(p.size(), false);
    Realizer2 out;
    if (searchExtension(p, prefix, placed, out)) return out;
    return std::nullopt;
}

}  // namespace gridposet
