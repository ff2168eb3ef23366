#pragma once

#include <map>
#include <vector>

#include "matrad/step_matrix.hpp"

namespace matrad {

// A cell of P_n^{x k}: an ordered tuple of faces on the same ground set.
struct TensorCell {
    std::vector<OrderedPartition> factors;

    int total_dimension() const {
        int d = 0;
        for (const auto& f : factors) d += f.dimension();
        return d;
    }

    auto operator<=>(const TensorCell&) const = default;
};

namespace detail {

// Renumber a partition of {1..k} into the sorted ground set `elems`.
inline OrderedPartition relabel_into(const OrderedPartition& p,
                                     const std::vector<int>& elems, int n) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        for (int e : b) nb.push_back(elems[e - 1]);
        blocks.push_back(std::move(nb));
    }
    return OrderedPartition(n, std::move(blocks));
}

// Restrict a partition of {1..n} to a sorted subset, renumbered to {1..k}.
inline OrderedPartition restrict_from(const OrderedPartition& p,
                                      const std::vector<int>& elems) {
    std::map<int, int> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i + 1);
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        for (int e : b)
            if (auto it = idx.find(e); it != idx.end()) nb.push_back(it->second);
        if (!nb.empty()) blocks.push_back(std::move(nb));
    }
    return OrderedPartition(static_cast<int>(elems.size()), std::move(blocks));
}

inline const std::set<ComplementaryPair>& top_cell_pairs(int n) {
    static std::map<int, std::set<ComplementaryPair>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, complementary_pairs(n)).first;
    return it->second;
}

}  // namespace detail

// The diagonal on C_*(P_n): complementary-pair sum on top cells, extended
// multiplicatively over the blocks of a product face.
inline Z2Chain<TensorCell> delta_p(const OrderedPartition& face) {
    std::vector<std::vector<TensorCell>> blockwise;
    for (const auto& blk : face.blocks()) {
        int k = static_cast<int>(blk.size());
        std::vector<TensorCell> terms;
        if (k == 1) {
            auto pt = detail::relabel_into(top_cell(1), blk, face.n());
            terms.push_back({{pt, pt}});
        } else {
            for (const auto& cp : detail::top_cell_pairs(k)) {
                terms.push_back({{detail::relabel_into(cp.a, blk, face.n()),
                                  detail::relabel_into(cp.b, blk, face.n())}});
            }
        }
        blockwise.push_back(std::move(terms));
    }
    // Componentwise tensor across blocks: concatenate the block partitions of
    // each side in block order.
    std::vector<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>>
        acc = {{{}, {}}};
    for (const auto& terms : blockwise) {
        decltype(acc) next;
        for (const auto& base : acc)
            for (const auto& t : terms) {
                auto c = base;
                for (const auto& blk : t.factors[0].blocks()) c.first.push_back(blk);
                for (const auto& blk : t.factors[1].blocks()) c.second.push_back(blk);
                next.push_back(std::move(c));
            }
        acc = std::move(next);
    }
    Z2Chain<TensorCell> out;
    for (auto& [ab, bb] : acc)
        out.add({{OrderedPartition(face.n(), std::move(ab)),
                  OrderedPartition(face.n(), std::move(bb))}});
    return out;
}

// Left k-fold iterate: delta applied repeatedly to the leftmost factor.
inline Z2Chain<TensorCell> iterated_delta(const OrderedPartition& face, int k) {
    Z2Chain<TensorCell> cur;
    cur.add({{face}});
    for (int step = 0; step < k; ++step) {
        Z2Chain<TensorCell> next;
        for (const auto& cell : cur.support()) {
            for (const auto& split : delta_p(cell.factors[0]).support()) {
                TensorCell t;
                t.factors = split.factors;
                for (std::size_t i = 1; i < cell.factors.size(); ++i)
                    t.factors.push_back(cell.factors[i]);
                next.add(t);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Cells of the k-subdivision P_n^{(k)}: the product-face closure of the top
// components of the iterated diagonal.  Returned grouped by dimension.
inline std::set<TensorCell> subdivision_cells(int n, int k) {
    std::set<TensorCell> out;
    auto tops = iterated_delta(top_cell(n), k);
    for (const auto& comp : tops.support()) {
        std::vector<std::vector<OrderedPartition>> facelists;
        for (const auto& f : comp.factors) facelists.push_back(faces_of(f));
        std::vector<std::size_t> idx(facelists.size(), 0);
        for (;;) {
            TensorCell t;
            for (std::size_t i = 0; i < facelists.size(); ++i)
                t.factors.push_back(facelists[i][idx[i]]);
            out.insert(std::move(t));
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == facelists[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }
    return out;
}

// f-vector of P_n^{(k)} indexed by dimension.
inline std::vector<long long> subdivision_complex(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("subdivision_complex");
    auto cells = subdivision_cells(n, k);
    std::vector<long long> f(std::max(n - 1, 1), 0);
    if (n == 1) {
        f.assign(1, 1);
        return f;
    }
    f.assign(n, 0);
    for (const auto& c : cells) f[c.total_dimension()] += 1;
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    return f;
}

}  // namespace matrad
