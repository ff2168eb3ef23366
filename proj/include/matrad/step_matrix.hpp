#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "matrad/partition.hpp"

namespace matrad {

// q x p matrix over {0} u {1..n}, each of 1..n appearing exactly once.
// Step matrices additionally satisfy the staircase conditions; derived
// matrices are their images under guarded down/right shifts.
class ShiftMatrix {
public:
    ShiftMatrix(int q, int p) : q_(q), p_(p), m_(q, std::vector<int>(p, 0)) {}

    int rows() const { return q_; }
    int cols() const { return p_; }
    int& at(int r, int c) { return m_[r][c]; }
    int at(int r, int c) const { return m_[r][c]; }

    std::vector<int> row_entries(int r) const {
        std::vector<int> out;
        for (int c = 0; c < p_; ++c)
            if (m_[r][c]) out.push_back(m_[r][c]);
        return out;
    }
    std::vector<int> col_entries(int c) const {
        std::vector<int> out;
        for (int r = 0; r < q_; ++r)
            if (m_[r][c]) out.push_back(m_[r][c]);
        return out;
    }

    auto operator<=>(const ShiftMatrix& o) const = default;

private:
    int q_, p_;
    std::vector<std::vector<int>> m_;
};

enum class ShiftKind { Down, Right };

// D_S / R_T with the guard conditions; returns the matrix unchanged when the
// guard fails.  `target` is a 0-based row (Down) or column (Right) index.
inline ShiftMatrix shift(const ShiftMatrix& m, ShiftKind kind, int target,
                         const std::set<int>& subset) {
    if (subset.empty()) return m;
    if (kind == ShiftKind::Down) {
        if (target < 0 || target >= m.rows()) throw std::out_of_range("row");
        if (target + 1 >= m.rows()) return m;
        int mn = *subset.begin();
        int j = -1;
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(target, c) == mn) j = c;
        if (j < 0) return m;  // subset not inside the row
        for (int v : subset) {
            bool found = false;
            for (int c = 0; c < m.cols(); ++c)
                if (m.at(target, c) == v) found = true;
            if (!found) return m;
        }
        auto below = m.row_entries(target + 1);
        if (static_cast<int>(subset.size()) >= static_cast<int>(m.row_entries(target).size()))
            return m;  // proper subsets only
        if (!below.empty() && *std::max_element(below.begin(), below.end()) >= mn)
            return m;
        for (int c = j; c < m.cols(); ++c)
            if (m.at(target + 1, c) != 0) return m;
        ShiftMatrix out = m;
        for (int c = 0; c < m.cols(); ++c)
            if (subset.count(m.at(target, c)))
                std::swap(out.at(target, c), out.at(target + 1, c));
        return out;
    }
    // Right shift, the column-dual.
    if (target < 0 || target >= m.cols()) throw std::out_of_range("col");
    if (target + 1 >= m.cols()) return m;
    int mn = *subset.begin();
    int i = -1;
    for (int r = 0; r < m.rows(); ++r)
        if (m.at(r, target) == mn) i = r;
    if (i < 0) return m;
    for (int v : subset) {
        bool found = false;
        for (int r = 0; r < m.rows(); ++r)
            if (m.at(r, target) == v) found = true;
        if (!found) return m;
    }
    if (static_cast<int>(subset.size()) >= static_cast<int>(m.col_entries(target).size()))
        return m;
    auto rightcol = m.col_entries(target + 1);
    if (!rightcol.empty() && *std::max_element(rightcol.begin(), rightcol.end()) >= mn)
        return m;
    for (int r = i; r < m.rows(); ++r)
        if (m.at(r, target + 1) != 0) return m;
    ShiftMatrix out = m;
    for (int r = 0; r < m.rows(); ++r)
        if (subset.count(m.at(r, target)))
            std::swap(out.at(r, target), out.at(r, target + 1));
    return out;
}

// Staircase encoding: walk cells from the bottom-left corner, stepping right
// on ascents of the word and up on descents.
inline ShiftMatrix step_matrix_of(const Permutation& perm) {
    if (!perm.is_vertex()) throw std::invalid_argument("not a permutation");
    auto w = perm.word();
    int n = perm.n();
    int p = 1, q = 1;
    for (int k = 0; k + 1 < n; ++k) (w[k] < w[k + 1] ? p : q) += 1;
    ShiftMatrix m(q, p);
    int r = q - 1, c = 0;
    m.at(r, c) = w[0];
    for (int k = 1; k < n; ++k) {
        if (w[k - 1] < w[k])
            ++c;
        else
            --r;
        m.at(r, c) = w[k];
    }
    return m;
}

// Inverse of step_matrix_of: read the staircase from the bottom-left cell.
inline Permutation staircase_permutation(const ShiftMatrix& m) {
    int r = m.rows() - 1, c = 0;
    if (m.at(r, c) == 0) throw std::invalid_argument("not a step matrix");
    std::vector<int> w = {m.at(r, c)};
    while (r > 0 || c + 1 < m.cols()) {
        if (c + 1 < m.cols() && m.at(r, c + 1) != 0)
            ++c;
        else if (r > 0 && m.at(r - 1, c) != 0)
            --r;
        else
            throw std::invalid_argument("broken staircase");
        w.push_back(m.at(r, c));
    }
    return vertex_from_word(w);
}

inline bool is_step_matrix(const ShiftMatrix& m) {
    int n = 0;
    std::set<int> seen;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (int v = m.at(r, c); v) {
                if (!seen.insert(v).second) return false;
                n = std::max(n, v);
            }
    if (static_cast<int>(seen.size()) != n) return false;
    // rows and columns: increasing contiguous blocks
    for (int r = 0; r < m.rows(); ++r) {
        int first = -1, last = -1, prev = 0;
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c)) {
                if (first < 0) first = c;
                if (last >= 0 && c != last + 1) return false;
                if (m.at(r, c) <= prev) return false;
                prev = m.at(r, c);
                last = c;
            }
        if (first < 0) return false;
    }
    for (int c = 0; c < m.cols(); ++c) {
        int first = -1, last = -1, prev = 0;
        for (int r = 0; r < m.rows(); ++r)
            if (m.at(r, c)) {
                if (first < 0) first = r;
                if (last >= 0 && r != last + 1) return false;
                if (m.at(r, c) <= prev) return false;
                prev = m.at(r, c);
                last = r;
            }
        if (first < 0) return false;
    }
    // one element per diagonal parallel to the main diagonal
    std::set<int> diag;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) && !diag.insert(c - r).second) return false;
    return static_cast<int>(diag.size()) == m.rows() + m.cols() - 1;
}

namespace detail {

inline void subsets_of(const std::vector<int>& v, std::vector<std::set<int>>& out) {
    int k = static_cast<int>(v.size());
    out.clear();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (mask + 1 == (1u << k)) continue;  // proper subsets only
        std::set<int> s;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) s.insert(v[i]);
        out.push_back(std::move(s));
    }
}

}  // namespace detail

// All matrices R_{T_p}..R_{T_1} D_{S_q}..D_{S_1} E over admissible subset
// choices, including E itself.
inline std::set<ShiftMatrix> derived_matrices(const ShiftMatrix& e) {
    std::set<ShiftMatrix> cur = {e};
    std::vector<std::set<int>> subsets;
    for (int r = 0; r < e.rows(); ++r) {
        std::set<ShiftMatrix> next;
        for (const auto& m : cur) {
            detail::subsets_of(m.row_entries(r), subsets);
            for (const auto& s : subsets) next.insert(shift(m, ShiftKind::Down, r, s));
        }
        cur = std::move(next);
    }
    for (int c = 0; c < e.cols(); ++c) {
        std::set<ShiftMatrix> next;
        for (const auto& m : cur) {
            detail::subsets_of(m.col_entries(c), subsets);
            for (const auto& s : subsets) next.insert(shift(m, ShiftKind::Right, c, s));
        }
        cur = std::move(next);
    }
    return cur;
}

struct ComplementaryPair {
    OrderedPartition a, b;

    auto operator<=>(const ComplementaryPair&) const = default;
};

// a = A_1|..|A_p from columns, b = B_q|..|B_1 from rows (top row last).
inline ComplementaryPair complementary_pair(const ShiftMatrix& m) {
    std::vector<std::vector<int>> ab, bb;
    for (int c = 0; c < m.cols(); ++c) ab.push_back(m.col_entries(c));
    for (int r = m.rows() - 1; r >= 0; --r) bb.push_back(m.row_entries(r));
    int n = 0;
    for (const auto& blk : ab)
        for (int v : blk) n = std::max(n, v);
    return {OrderedPartition(n, std::move(ab)), OrderedPartition(n, std::move(bb))};
}

// All (p,q)-complementary pairs for the top cell of P_n.
inline std::set<ComplementaryPair> complementary_pairs(int n) {
    std::set<ComplementaryPair> out;
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
        auto e = step_matrix_of(vertex_from_word(w));
        for (const auto& d : derived_matrices(e)) out.insert(complementary_pair(d));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace matrad
