#pragma once

#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matrad/diagonal.hpp"

namespace matrad {

enum class Orientation { Up, Down };

// Planar rooted tree with levels.  Levels are stored root-first: levels[0]
// is the root corolla row, the last row sits next to the leaves.  Row i+1
// has one entry per input of row i, so sum(levels[i]) == levels[i+1].size().
struct LevelTree {
    Orientation orientation = Orientation::Up;
    std::vector<std::vector<int>> levels;

    int level_count() const { return static_cast<int>(levels.size()); }

    int leaf_count() const {
        if (levels.empty()) return 1;
        int s = 0;
        for (int v : levels.back()) s += v;
        return s;
    }

    auto operator<=>(const LevelTree&) const = default;
};

// Planar rooted tree without levels; no unary vertices.  A leaf is a node
// with no children.  Faces of K_n are the PRTs with n leaves.
struct PlanarTree {
    std::vector<PlanarTree> children;

    bool is_leaf() const { return children.empty(); }

    int leaf_count() const {
        if (is_leaf()) return 1;
        int s = 0;
        for (const auto& c : children) s += c.leaf_count();
        return s;
    }

    std::string text() const {
        if (is_leaf()) return ".";
        std::string s = "(";
        for (const auto& c : children) s += c.text();
        return s + ")";
    }

    std::strong_ordering operator<=>(const PlanarTree& o) const {
        if (auto c = children.size() <=> o.children.size(); c != 0) return c;
        for (std::size_t i = 0; i < children.size(); ++i)
            if (auto c = children[i] <=> o.children[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    bool operator==(const PlanarTree& o) const { return (*this <=> o) == 0; }
};

inline PlanarTree corolla(int leaves) {
    PlanarTree t;
    t.children.resize(leaves);
    return t;
}

// Face of P_n with k blocks <-> PLT with n+1 leaves and k levels.  Gaps of
// block j sit at level k+1-j (the last block fills the root corolla), so the
// top cell maps to the corolla and vertices map to binary leveled trees.
inline LevelTree partition_to_plt(const OrderedPartition& face,
                                  Orientation orientation = Orientation::Up) {
    int n = face.n(), k = face.block_count();
    std::vector<int> gap_level(n + 1, 0);  // 1-based gaps
    for (int j = 0; j < k; ++j)
        for (int g : face.blocks()[j]) gap_level[g] = k - j;

    LevelTree t;
    t.orientation = orientation;
    for (int lvl = 1; lvl <= k; ++lvl) {
        // branches entering this level: leaf intervals cut by shallower gaps
        std::vector<int> row;
        int count = 0;
        for (int g = 1; g <= n + 1; ++g) {
            if (g <= n && gap_level[g] == lvl) ++count;
            bool boundary = (g == n + 1) || (g <= n && gap_level[g] > 0 && gap_level[g] < lvl);
            if (boundary) {
                row.push_back(count + 1);
                count = 0;
            }
        }
        t.levels.push_back(std::move(row));
    }
    return t;
}

// Inverse of partition_to_plt.
inline OrderedPartition plt_to_partition(const LevelTree& t) {
    int k = t.level_count();
    int n = t.leaf_count() - 1;
    // Walk levels leaf-side first, tracking the leaf interval of each branch.
    std::vector<std::pair<int, int>> branches;  // [lo, hi] leaf intervals
    std::vector<std::vector<int>> level_gaps(k + 1);
    {
        const auto& row = t.levels.back();
        int leaf = 1;
        for (int arity : row) {
            for (int g = leaf; g < leaf + arity - 1; ++g) level_gaps[k].push_back(g);
            branches.push_back({leaf, leaf + arity - 1});
            leaf += arity;
        }
    }
    for (int lvl = k - 1; lvl >= 1; --lvl) {
        const auto& row = t.levels[lvl - 1];
        std::vector<std::pair<int, int>> merged;
        std::size_t pos = 0;
        for (int arity : row) {
            int lo = branches[pos].first, hi = branches[pos].second;
            for (int c = 1; c < arity; ++c) {
                level_gaps[lvl].push_back(branches[pos].second);
                ++pos;
                hi = branches[pos].second;
            }
            ++pos;
            merged.push_back({lo, hi});
        }
        branches = std::move(merged);
    }
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= k; ++j) blocks.push_back(level_gaps[k + 1 - j]);
    return OrderedPartition(n, std::move(blocks));
}

// Level-by-level leaf sequences: row form (root level first) for up-rooted
// trees, column form (leaf-adjacent level first) for down-rooted ones.
inline std::vector<std::vector<int>> descent_sequences(const LevelTree& t) {
    if (t.orientation == Orientation::Up) return t.levels;
    std::vector<std::vector<int>> out(t.levels.rbegin(), t.levels.rend());
    return out;
}

namespace detail {

inline PlanarTree build_leveled(const LevelTree& t) {
    std::vector<PlanarTree> nodes;
    int leaves = t.leaf_count();
    nodes.assign(leaves, PlanarTree{});
    for (int lvl = t.level_count(); lvl >= 1; --lvl) {
        std::vector<PlanarTree> parents;
        std::size_t pos = 0;
        for (int arity : t.levels[lvl - 1]) {
            if (arity == 1) {
                parents.push_back(std::move(nodes[pos++]));
            } else {
                PlanarTree p;
                for (int c = 0; c < arity; ++c) p.children.push_back(std::move(nodes[pos++]));
                parents.push_back(std::move(p));
            }
        }
        nodes = std::move(parents);
    }
    return nodes[0];
}

}  // namespace detail

// Level-forgetting projection P_n -> K_{n+1}.  Returns nothing when the face
// is degenerate (two or more nontrivial corollas share a level), in which
// case the image has strictly lower dimension.
inline std::optional<PlanarTree> tonks_project(const OrderedPartition& face) {
    auto t = partition_to_plt(face);
    for (const auto& row : t.levels) {
        int nontrivial = 0;
        for (int v : row)
            if (v >= 2) ++nontrivial;
        if (nontrivial >= 2) return std::nullopt;
    }
    return detail::build_leveled(t);
}

// Some non-degenerate PLT preimage of a PRT face of K_n inside P_{n-1}:
// internal vertices are assigned distinct levels in depth order, leftmost
// first within a depth.
inline OrderedPartition prt_preimage(const PlanarTree& prt) {
    struct Item {
        const PlanarTree* node;
        int depth;
    };
    std::vector<Item> order;
    std::vector<Item> queue = {{&prt, 0}};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [node, depth] = queue[i];
        if (node->is_leaf()) continue;
        order.push_back({node, depth});
        for (const auto& c : node->children) queue.push_back({&c, depth + 1});
    }
    // one vertex per level in BFS order; build the leveled tree by expanding
    // to a LevelTree row by row
    int k = static_cast<int>(order.size());
    int n = prt.leaf_count() - 1;
    if (k == 0) return top_cell(std::max(n, 1));
    // Assign level numbers 1..k following BFS, then recover the partition by
    // collecting gap levels directly from the tree structure.
    std::vector<std::vector<int>> blocks(k);
    // gap between consecutive leaves g and g+1 belongs to their lowest common
    // ancestor; that vertex's level index gives the block
    std::vector<const PlanarTree*> leaf_parent_chain;
    // map each internal node to its BFS level
    std::vector<std::pair<const PlanarTree*, int>> levels;
    for (int i = 0; i < k; ++i) levels.push_back({order[i].node, i + 1});
    auto level_of = [&](const PlanarTree* v) {
        for (auto& [node, lvl] : levels)
            if (node == v) return lvl;
        return 0;
    };
    // enumerate gaps: walk leaves left to right and find the join vertex
    struct Walk {
        std::vector<const PlanarTree*> stack_of(const PlanarTree* root, int leaf_index) {
            std::vector<const PlanarTree*> path;
            find(root, leaf_index, path);
            return path;
        }
        int seen = 0;
        bool find(const PlanarTree* v, int target, std::vector<const PlanarTree*>& path) {
            path.push_back(v);
            if (v->is_leaf()) {
                if (seen == target) return true;
                ++seen;
                path.pop_back();
                return false;
            }
            for (const auto& c : v->children)
                if (find(&c, target, path)) return true;
            path.pop_back();
            return false;
        }
    };
    for (int g = 1; g <= n; ++g) {
        Walk w1, w2;
        auto p1 = w1.stack_of(&prt, g - 1);
        auto p2 = w2.stack_of(&prt, g);
        const PlanarTree* join = &prt;
        for (std::size_t i = 0; i < std::min(p1.size(), p2.size()); ++i) {
            if (p1[i] != p2[i]) break;
            join = p1[i];
        }
        int lvl = level_of(join);
        blocks[k - lvl].push_back(g);
    }
    return OrderedPartition(n, std::move(blocks));
}

// The induced diagonal on C_*(K_n) over GF(2), computed by pushing the
// permutahedral diagonal through the level-forgetting projection.
inline Z2Chain<std::pair<PlanarTree, PlanarTree>> delta_k(const PlanarTree& face) {
    Z2Chain<std::pair<PlanarTree, PlanarTree>> out;
    if (face.leaf_count() < 2) {
        out.add({face, face});
        return out;
    }
    auto pre = prt_preimage(face);
    for (const auto& term : delta_p(pre).support()) {
        auto a = tonks_project(term.factors[0]);
        auto b = tonks_project(term.factors[1]);
        if (a && b) out.add({*a, *b});
    }
    return out;
}

}  // namespace matrad
