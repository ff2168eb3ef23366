#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrad/z2.hpp"

namespace matrad {

// A face of the permutahedron P_n: an ordered partition of {1..n} into
// nonempty blocks. Blocks are kept element-sorted; the block order is the
// combinatorial data. Vertices are the partitions with singleton blocks.
class OrderedPartition {
public:
    OrderedPartition() : n_(0) {}

    OrderedPartition(int n, std::vector<std::vector<int>> blocks)
        : n_(n), blocks_(std::move(blocks)) {
        for (auto& b : blocks_) std::sort(b.begin(), b.end());
        validate();
    }

    // Parses the text form "13|24".  Only single-digit ground sets (n <= 9)
    // are expressible this way; larger inputs use comma-separated blocks
    // "1,13|2" style via parse().
    static OrderedPartition from_text(const std::string& text, int n) {
        std::vector<std::vector<int>> blocks(1);
        bool commas = text.find(',') != std::string::npos;
        for (char ch : text) {
            if (ch == '|') {
                blocks.emplace_back();
            } else if (ch == ',') {
                continue;
            } else if (ch >= '0' && ch <= '9' && !commas) {
                blocks.back().push_back(ch - '0');
            } else if (commas) {
                throw std::invalid_argument("comma form needs parse()");
            } else {
                throw std::invalid_argument("bad partition text: " + text);
            }
        }
        return OrderedPartition(n, std::move(blocks));
    }

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int dimension() const { return n_ - block_count(); }

    bool is_vertex() const { return block_count() == n_; }

    // Vertex word a1|...|an.
    std::vector<int> word() const {
        std::vector<int> w;
        for (const auto& b : blocks_)
            for (int e : b) w.push_back(e);
        return w;
    }

    std::string text() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) os << '|';
            for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
                if (n_ > 9 && j) os << ',';
                os << blocks_[i][j];
            }
        }
        return os.str();
    }

    auto operator<=>(const OrderedPartition& o) const = default;

private:
    void validate() const {
        std::set<int> seen;
        for (const auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("empty block");
            for (int e : b) {
                if (e < 1 || e > n_ || !seen.insert(e).second)
                    throw std::invalid_argument("bad block element");
            }
        }
        if (static_cast<int>(seen.size()) != n_)
            throw std::invalid_argument("blocks do not cover ground set");
    }

    int n_;
    std::vector<std::vector<int>> blocks_;
};

using Permutation = OrderedPartition;

inline OrderedPartition top_cell(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return OrderedPartition(n, {all});
}

inline OrderedPartition vertex_from_word(const std::vector<int>& w) {
    std::vector<std::vector<int>> blocks;
    for (int a : w) blocks.push_back({a});
    return OrderedPartition(static_cast<int>(w.size()), std::move(blocks));
}

// All ordered partitions of {1..n}, optionally a single dimension slice.
// Deterministic order: by block count, then lexicographic.
inline std::vector<OrderedPartition> enumerate_faces(int n,
                                                     std::optional<int> dim = {}) {
    if (n < 1) throw std::invalid_argument("enumerate_faces: n must be >= 1");
    std::vector<std::vector<std::vector<int>>> partial = {{}};
    std::vector<OrderedPartition> out;
    // Insert elements 1..n one at a time, into an existing block or as a new
    // block in any position.
    for (int e = 1; e <= n; ++e) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& p : partial) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                auto q = p;
                q[i].push_back(e);
                next.push_back(std::move(q));
            }
            for (std::size_t i = 0; i <= p.size(); ++i) {
                auto q = p;
                q.insert(q.begin() + i, {e});
                next.push_back(std::move(q));
            }
        }
        partial = std::move(next);
    }
    for (auto& p : partial) {
        OrderedPartition f(n, p);
        if (!dim || f.dimension() == *dim) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.block_count() != b.block_count())
            return a.block_count() < b.block_count();
        return a.blocks() < b.blocks();
    });
    return out;
}

// Cellular boundary over GF(2): all ways of splitting one block into two
// consecutive nonempty sub-blocks.
inline Z2Chain<OrderedPartition> boundary(const OrderedPartition& face) {
    Z2Chain<OrderedPartition> out;
    const auto& blocks = face.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        int k = static_cast<int>(b.size());
        if (k < 2) continue;
        // every ordered 2-split (S, b\S) with S a proper nonempty subset
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            std::vector<int> left, right;
            for (int j = 0; j < k; ++j)
                ((mask >> j) & 1 ? left : right).push_back(b[j]);
            auto nb = blocks;
            nb[i] = left;
            nb.insert(nb.begin() + i + 1, right);
            out.add(OrderedPartition(face.n(), std::move(nb)));
        }
    }
    return out;
}

// Is `f` a face of `g`?  True when g is obtained from f by merging runs of
// consecutive blocks.
inline bool is_face_of(const OrderedPartition& f, const OrderedPartition& g) {
    if (f.n() != g.n()) return false;
    std::size_t i = 0;
    for (const auto& gb : g.blocks()) {
        std::set<int> want(gb.begin(), gb.end()), got;
        while (got.size() < want.size()) {
            if (i >= f.blocks().size()) return false;
            for (int e : f.blocks()[i]) {
                if (!want.count(e)) return false;
                got.insert(e);
            }
            ++i;
        }
    }
    return i == f.blocks().size();
}

// All faces of `g` (ordered partitions refining g blockwise, in order).
inline std::vector<OrderedPartition> faces_of(const OrderedPartition& g) {
    std::vector<std::vector<std::vector<int>>> acc = {{}};
    for (const auto& gb : g.blocks()) {
        // ordered partitions of the block gb
        std::vector<std::vector<std::vector<int>>> locals = {{}};
        for (int e : gb) {
            std::vector<std::vector<std::vector<int>>> next;
            for (const auto& p : locals) {
                for (std::size_t i = 0; i < p.size(); ++i) {
                    auto q = p;
                    q[i].push_back(e);
                    next.push_back(std::move(q));
                }
                for (std::size_t i = 0; i <= p.size(); ++i) {
                    auto q = p;
                    q.insert(q.begin() + i, {e});
                    next.push_back(std::move(q));
                }
            }
            locals = std::move(next);
        }
        std::vector<std::vector<std::vector<int>>> merged;
        for (const auto& a : acc)
            for (const auto& l : locals) {
                auto c = a;
                c.insert(c.end(), l.begin(), l.end());
                merged.push_back(std::move(c));
            }
        acc = std::move(merged);
    }
    std::vector<OrderedPartition> out;
    out.reserve(acc.size());
    for (auto& p : acc) out.emplace_back(g.n(), std::move(p));
    std::sort(out.begin(), out.end());
    return out;
}

// chi(a1|...|am) reverses the blocks and replaces e by m+1-e.
inline OrderedPartition chi(const OrderedPartition& face) {
    std::vector<std::vector<int>> nb;
    const auto& blocks = face.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        std::vector<int> b;
        for (int e : *it) b.push_back(face.n() + 1 - e);
        nb.push_back(std::move(b));
    }
    return OrderedPartition(face.n(), std::move(nb));
}

// Index pair (i;j) for the combinatorial join: strictly increasing sequences
// covering {1..s} jointly.
struct JoinIndex {
    std::vector<int> i, j;

    int s() const {
        int m = 0;
        for (int v : i) m = std::max(m, v);
        for (int v : j) m = std::max(m, v);
        return m;
    }

    auto operator<=>(const JoinIndex&) const = default;
};

// A1|..|Ak *_(i;j) B1|..|Bl: the codimension s-1 face of P_{m+n} whose r-th
// block is A'_r u (B'_r + m).
inline OrderedPartition comb_join(const OrderedPartition& a,
                                  const OrderedPartition& b,
                                  const JoinIndex& ij) {
    int k = a.block_count(), l = b.block_count(), m = a.n();
    if (static_cast<int>(ij.i.size()) != k || static_cast<int>(ij.j.size()) != l)
        throw std::invalid_argument("comb_join: index lengths mismatch");
    int s = ij.s();
    if (s < std::max(k, l) || s > k + l)
        throw std::invalid_argument("comb_join: bad s");
    std::vector<char> covered(s + 1, 0);
    for (std::size_t t = 0; t + 1 < ij.i.size(); ++t)
        if (ij.i[t] >= ij.i[t + 1]) throw std::invalid_argument("i not increasing");
    for (std::size_t t = 0; t + 1 < ij.j.size(); ++t)
        if (ij.j[t] >= ij.j[t + 1]) throw std::invalid_argument("j not increasing");
    for (int v : ij.i) covered.at(v) = 1;
    for (int v : ij.j) covered.at(v) = 1;
    for (int r = 1; r <= s; ++r)
        if (!covered[r]) throw std::invalid_argument("comb_join: i u j != {1..s}");

    std::vector<std::vector<int>> blocks(s);
    for (int t = 0; t < k; ++t)
        for (int e : a.blocks()[t]) blocks[ij.i[t] - 1].push_back(e);
    for (int t = 0; t < l; ++t)
        for (int e : b.blocks()[t]) blocks[ij.j[t] - 1].push_back(e + m);
    return OrderedPartition(m + b.n(), std::move(blocks));
}

struct JoinDecomposition {
    OrderedPartition a, b;
    JoinIndex ij;
};

// The unique decomposition of a face of P_{m+n} over the split {1..m} vs
// {m+1..m+n}.
inline JoinDecomposition join_decompose(const OrderedPartition& e, int m, int n) {
    if (e.n() != m + n) throw std::invalid_argument("join_decompose: bad sizes");
    std::vector<std::vector<int>> ab, bb;
    JoinIndex ij;
    int r = 0;
    for (const auto& blk : e.blocks()) {
        ++r;
        std::vector<int> lo, hi;
        for (int x : blk) (x <= m ? lo : hi).push_back(x);
        if (!lo.empty()) {
            ab.push_back(lo);
            ij.i.push_back(r);
        }
        if (!hi.empty()) {
            for (int& x : hi) x -= m;
            bb.push_back(hi);
            ij.j.push_back(r);
        }
    }
    return {OrderedPartition(m, std::move(ab)), OrderedPartition(n, std::move(bb)),
            std::move(ij)};
}

namespace detail {
// {v1, v1+v2, ..., v1+..+v_{p-1}} for a length-p composition.
inline std::set<int> partial_sums(const std::vector<int>& v) {
    std::set<int> out;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        acc += v[i];
        out.insert(acc);
    }
    return out;
}
}  // namespace detail

// The distinguished codimension-1 face e_{(y,x)} of P_{m+n-2} attached to an
// output column vector y and an input row vector x, |x|+|y| >= 3.  The four
// cases follow the construction used to locate boundary components of the
// bigraded generators inside permutahedra.
inline OrderedPartition special_cell(const std::vector<int>& y,
                                     const std::vector<int>& x) {
    int m = 0, n = 0;
    for (int v : x) {
        if (v < 1) throw std::invalid_argument("special_cell: zero entry");
        m += v;
    }
    for (int v : y) {
        if (v < 1) throw std::invalid_argument("special_cell: zero entry");
        n += v;
    }
    if (m + n < 3) throw std::invalid_argument("special_cell: |x|+|y| < 3");

    auto range = [](int lo, int hi) {  // {lo..hi}
        std::set<int> s;
        for (int v = lo; v <= hi; ++v) s.insert(v);
        return s;
    };

    std::set<int> a1, b1, a2, b2;
    int p = static_cast<int>(x.size()), q = static_cast<int>(y.size());
    if (p == m) {  // x = 1^m
        a1 = range(1, m - 1);
    } else if (p == 1) {  // x = (m), m >= 2
        b1 = range(1, m - 1);
    } else {
        b1 = detail::partial_sums(x);
        for (int v = 1; v <= m - 1; ++v)
            if (!b1.count(v)) a1.insert(v);
    }
    if (q == n) {  // y = 1^n
        b2 = range(1, n - 1);
    } else if (q == 1) {  // y = (n), n >= 2
        a2 = range(1, n - 1);
    } else {
        b2 = detail::partial_sums(y);
        for (int v = 1; v <= n - 1; ++v)
            if (!b2.count(v)) a2.insert(v);
    }

    std::vector<int> first(a1.begin(), a1.end()), second(b1.begin(), b1.end());
    for (int v : a2) first.push_back(v + m - 1);
    for (int v : b2) second.push_back(v + m - 1);
    if (first.empty() || second.empty())
        throw std::invalid_argument("special_cell: degenerate pair (y,x)");
    return OrderedPartition(m + n - 2, {first, second});
}

}  // namespace matrad
