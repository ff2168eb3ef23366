#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrad/z2.hpp"

namespace matrad {

// An element of the free bigraded term algebra, kept in a canonical
// layered-graph normal form.  Nodes are generator occurrences; wires connect
// node outputs (or global inputs) to node inputs (or global outputs).  Units
// are never materialized as nodes, so two terms are equal exactly when their
// canonicalized graphs coincide.
class Term {
public:
    struct Src {
        int node = -1;  // -1 means a global input
        int slot = 0;
        auto operator<=>(const Src&) const = default;
    };

    // Default-constructed terms are the unit: one input wired to one output.
    Term() : m_(1), n_(1), out_src_{Src{-1, 0}} {}

    static Term unit() { return Term(); }

    static Term generator(int m, int n) {
        if (m < 1 || n < 1) throw std::invalid_argument("generator arity");
        if (m == 1 && n == 1) return unit();
        Term t;
        t.m_ = m;
        t.n_ = n;
        t.out_src_.clear();
        t.nodes_ = {{m, n}};
        t.node_in_.resize(1);
        for (int i = 0; i < m; ++i) t.node_in_[0].push_back(Src{-1, i});
        for (int o = 0; o < n; ++o) t.out_src_.push_back(Src{0, o});
        return t;
    }

    int inputs() const { return m_; }
    int outputs() const { return n_; }
    bool is_unit() const { return nodes_.empty() && m_ == 1; }
    bool is_generator() const {
        return nodes_.size() == 1 && nodes_[0].first == m_ && nodes_[0].second == n_;
    }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const std::vector<std::pair<int, int>>& nodes() const { return nodes_; }
    const std::vector<std::vector<Src>>& node_inputs() const { return node_in_; }
    const std::vector<Src>& output_sources() const { return out_src_; }

    int dimension() const {
        int d = 0;
        for (auto [i, o] : nodes_) d += i + o - 3;
        return d;
    }

    // gamma on a transverse pair: denominators side by side feeding the
    // numerators, output j of denominator i wired to input i of numerator j.
    static Term compose(const std::vector<Term>& num, const std::vector<Term>& den) {
        int q = static_cast<int>(num.size()), p = static_cast<int>(den.size());
        if (q == 0 || p == 0) throw std::invalid_argument("compose: empty side");
        for (const auto& a : num)
            if (a.inputs() != p) throw std::invalid_argument("compose: numerator arity");
        for (const auto& b : den)
            if (b.outputs() != q) throw std::invalid_argument("compose: denominator arity");

        Term t;
        t.out_src_.clear();
        std::vector<int> den_node_off(p), den_in_off(p);
        int nodes = 0, gin = 0;
        for (int i = 0; i < p; ++i) {
            den_node_off[i] = nodes;
            den_in_off[i] = gin;
            nodes += den[i].node_count();
            gin += den[i].inputs();
        }
        std::vector<int> num_node_off(q);
        for (int j = 0; j < q; ++j) {
            num_node_off[j] = nodes;
            nodes += num[j].node_count();
        }
        t.m_ = gin;
        t.nodes_.reserve(nodes);
        t.node_in_.resize(nodes);
        for (int i = 0; i < p; ++i)
            for (auto nd : den[i].nodes_) t.nodes_.push_back(nd);
        for (int j = 0; j < q; ++j)
            for (auto nd : num[j].nodes_) t.nodes_.push_back(nd);

        auto remap_den = [&](int i, Src s) -> Src {
            if (s.node < 0) return Src{-1, den_in_off[i] + s.slot};
            return Src{den_node_off[i] + s.node, s.slot};
        };
        for (int i = 0; i < p; ++i)
            for (int v = 0; v < den[i].node_count(); ++v)
                for (Src s : den[i].node_in_[v])
                    t.node_in_[den_node_off[i] + v].push_back(remap_den(i, s));

        // wire w[i][j]: source of denominator i's output j, fully resolved
        std::vector<std::vector<Src>> wire(p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) wire[i].push_back(remap_den(i, den[i].out_src_[j]));

        auto remap_num = [&](int j, Src s) -> Src {
            if (s.node < 0) return wire[s.slot][j];  // numerator input i <- wire
            return Src{num_node_off[j] + s.node, s.slot};
        };
        for (int j = 0; j < q; ++j)
            for (int v = 0; v < num[j].node_count(); ++v)
                for (Src s : num[j].node_in_[v])
                    t.node_in_[num_node_off[j] + v].push_back(remap_num(j, s));
        t.out_src_.clear();
        t.n_ = 0;
        for (int j = 0; j < q; ++j) {
            t.n_ += num[j].outputs();
            for (Src s : num[j].out_src_) t.out_src_.push_back(remap_num(j, s));
        }
        t.canonicalize();
        return t;
    }

    // Replace the v-th node by a term of the same arity (Leibniz step).
    Term splice(int v, const Term& repl) const {
        auto [vm, vn] = nodes_[v];
        if (repl.inputs() != vm || repl.outputs() != vn)
            throw std::invalid_argument("splice: arity mismatch");
        Term t;
        t.m_ = m_;
        t.n_ = n_;
        t.out_src_.clear();
        std::vector<int> old2new(nodes_.size(), -1);
        for (std::size_t u = 0; u < nodes_.size(); ++u) {
            if (static_cast<int>(u) == v) continue;
            old2new[u] = t.node_count();
            t.nodes_.push_back(nodes_[u]);
        }
        int roff = t.node_count();
        for (auto nd : repl.nodes_) t.nodes_.push_back(nd);
        t.node_in_.resize(t.nodes_.size());

        // source-of(repl global input i) = our node_in_[v][i], remapped later
        auto remap_old = [&](Src s) -> Src {
            if (s.node < 0 || s.node != v) {
                if (s.node >= 0) return Src{old2new[s.node], s.slot};
                return s;
            }
            // consumed v's output s.slot: replace by repl's source for it
            Src r = repl.out_src_[s.slot];
            if (r.node >= 0) return Src{roff + r.node, r.slot};
            // repl passes its input r.slot through: take our feed of v
            Src feed = node_in_[v][r.slot];
            if (feed.node >= 0) return Src{old2new[feed.node], feed.slot};
            return feed;
        };
        for (std::size_t u = 0; u < nodes_.size(); ++u) {
            if (static_cast<int>(u) == v) continue;
            for (Src s : node_in_[u]) t.node_in_[old2new[u]].push_back(remap_old(s));
        }
        for (int w = 0; w < repl.node_count(); ++w)
            for (Src s : repl.node_in_[w]) {
                if (s.node >= 0) {
                    t.node_in_[roff + w].push_back(Src{roff + s.node, s.slot});
                } else {
                    Src feed = node_in_[v][s.slot];
                    if (feed.node >= 0 && feed.node != v)
                        feed = Src{old2new[feed.node], feed.slot};
                    else if (feed.node == v)
                        throw std::logic_error("splice: self loop");
                    t.node_in_[roff + w].push_back(feed);
                }
            }
        for (Src s : out_src_) t.out_src_.push_back(remap_old(s));
        t.canonicalize();
        return t;
    }

    // Arrow reversal: swap inputs with outputs everywhere.
    Term transpose() const {
        Term t;
        t.m_ = n_;
        t.n_ = m_;
        t.out_src_.clear();
        for (auto [i, o] : nodes_) t.nodes_.push_back({o, i});
        t.node_in_.resize(nodes_.size());
        for (auto& v : t.node_in_) v = {};
        // consumer maps of the original graph
        std::vector<std::vector<Src>> node_out_consumer(nodes_.size());
        for (std::size_t v = 0; v < nodes_.size(); ++v)
            node_out_consumer[v].resize(nodes_[v].second);
        std::vector<Src> gin_consumer(m_);
        auto note = [&](Src src, Src consumer) {
            if (src.node < 0)
                gin_consumer[src.slot] = consumer;
            else
                node_out_consumer[src.node][src.slot] = consumer;
        };
        for (std::size_t v = 0; v < nodes_.size(); ++v)
            for (std::size_t i = 0; i < node_in_[v].size(); ++i)
                note(node_in_[v][i], Src{static_cast<int>(v), static_cast<int>(i)});
        for (int o = 0; o < n_; ++o) note(out_src_[o], Src{-1, o});
        // reversed wiring
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            t.node_in_[v].resize(nodes_[v].second);
            for (int slot = 0; slot < nodes_[v].second; ++slot) {
                Src c = node_out_consumer[v][slot];
                t.node_in_[v][slot] = c;  // node c.node's reversed output c.slot
            }
        }
        t.out_src_.resize(m_);
        for (int g = 0; g < m_; ++g) t.out_src_[g] = gin_consumer[g];
        t.canonicalize();
        return t;
    }

    // Which node consumes each global input (-1 for pass-through).
    std::vector<int> input_attachment() const {
        std::vector<int> att(m_, -1);
        for (std::size_t v = 0; v < nodes_.size(); ++v)
            for (Src s : node_in_[v])
                if (s.node < 0) att[s.slot] = static_cast<int>(v);
        return att;
    }

    // Maximal runs of consecutive inputs attached to the same node.
    std::vector<int> input_profile() const {
        auto att = input_attachment();
        std::vector<int> runs;
        for (int g = 0; g < m_; ++g) {
            if (g > 0 && att[g] >= 0 && att[g] == att[g - 1])
                runs.back() += 1;
            else
                runs.push_back(1);
        }
        return runs;
    }

    std::vector<int> output_profile() const {
        std::vector<int> runs;
        for (int o = 0; o < n_; ++o) {
            if (o > 0 && out_src_[o].node >= 0 && out_src_[o].node == out_src_[o - 1].node)
                runs.back() += 1;
            else
                runs.push_back(1);
        }
        return runs;
    }

    std::string debug_text() const {
        std::ostringstream os;
        os << m_ << "->" << n_ << "{";
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            os << "g" << nodes_[v].first << "," << nodes_[v].second << "[";
            for (Src s : node_in_[v]) os << (s.node < 0 ? "i" : "n") << (s.node < 0 ? s.slot : s.node) << (s.node < 0 ? "" : ":" + std::to_string(s.slot)) << " ";
            os << "]";
        }
        os << "out[";
        for (Src s : out_src_) os << (s.node < 0 ? "i" : "n") << (s.node < 0 ? s.slot : s.node) << (s.node < 0 ? "" : ":" + std::to_string(s.slot)) << " ";
        os << "]}";
        return os.str();
    }

    auto operator<=>(const Term& o) const = default;

private:
    void canonicalize() {
        std::vector<int> order(nodes_.size(), -1);
        int next = 0;
        // pre-order DFS from global outputs, inputs left to right
        std::vector<Src> stack;
        for (int o = n_ - 1; o >= 0; --o) stack.push_back(out_src_[o]);
        while (!stack.empty()) {
            Src s = stack.back();
            stack.pop_back();
            if (s.node < 0 || order[s.node] >= 0) continue;
            order[s.node] = next++;
            const auto& ins = node_in_[s.node];
            for (auto it = ins.rbegin(); it != ins.rend(); ++it) stack.push_back(*it);
        }
        if (next != static_cast<int>(nodes_.size()))
            throw std::logic_error("canonicalize: unreachable node");
        std::vector<std::pair<int, int>> nodes(nodes_.size());
        std::vector<std::vector<Src>> node_in(nodes_.size());
        auto remap = [&](Src s) {
            return s.node < 0 ? s : Src{order[s.node], s.slot};
        };
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            nodes[order[v]] = nodes_[v];
            for (Src s : node_in_[v]) node_in[order[v]].push_back(remap(s));
        }
        for (Src& s : out_src_) s = remap(s);
        nodes_ = std::move(nodes);
        node_in_ = std::move(node_in);
    }

    int m_ = 1, n_ = 1;
    std::vector<std::pair<int, int>> nodes_;
    std::vector<std::vector<Src>> node_in_;
    std::vector<Src> out_src_;
};

inline int term_dimension(const Term& t) { return t.dimension(); }

// Matrix of terms; bisequence when rows share output counts and columns
// share input counts.
class TermMatrix {
public:
    TermMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Term::unit()) {}

    static TermMatrix column(const std::vector<Term>& v) {
        TermMatrix m(static_cast<int>(v.size()), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
        return m;
    }
    static TermMatrix row(const std::vector<Term>& v) {
        TermMatrix m(1, static_cast<int>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i) m.at(0, static_cast<int>(i)) = v[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Term& at(int r, int c) { return e_[r * cols_ + c]; }
    const Term& at(int r, int c) const { return e_[r * cols_ + c]; }

    bool is_bisequence() const {
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c).outputs() != at(r, 0).outputs() ||
                    at(r, c).inputs() != at(0, c).inputs())
                    return false;
        return true;
    }

    // input leaf sequence along a row (requires column-constant inputs)
    std::optional<std::vector<int>> rls() const {
        std::vector<int> x;
        for (int c = 0; c < cols_; ++c) {
            int v = at(0, c).inputs();
            for (int r = 1; r < rows_; ++r)
                if (at(r, c).inputs() != v) return std::nullopt;
            x.push_back(v);
        }
        return x;
    }

    // output leaf sequence along a column (requires row-constant outputs)
    std::optional<std::vector<int>> cls() const {
        std::vector<int> y;
        for (int r = 0; r < rows_; ++r) {
            int v = at(r, 0).outputs();
            for (int c = 1; c < cols_; ++c)
                if (at(r, c).outputs() != v) return std::nullopt;
            y.push_back(v);
        }
        return y;
    }

    bool all_units() const {
        for (const auto& t : e_)
            if (!t.is_unit()) return false;
        return true;
    }

    auto operator<=>(const TermMatrix&) const = default;

private:
    int rows_, cols_;
    std::vector<Term> e_;
};

struct BtpBlocking {
    std::vector<int> qparts;  // sizes grouping A's rows, one per row of B
    std::vector<int> pparts;  // sizes grouping B's columns, one per column of A
};

// The unique block-transverse-pair decomposition of (A, B), when it exists:
// columns of A fix the widths of B's column groups, rows of B fix the
// heights of A's row groups.
inline std::optional<BtpBlocking> btp_decompose(const TermMatrix& a,
                                                const TermMatrix& b) {
    BtpBlocking out;
    int total = 0;
    for (int c = 0; c < a.cols(); ++c) {
        int v = a.at(0, c).inputs();
        for (int r = 1; r < a.rows(); ++r)
            if (a.at(r, c).inputs() != v) return std::nullopt;
        out.pparts.push_back(v);
        total += v;
    }
    if (total != b.cols()) return std::nullopt;
    total = 0;
    for (int r = 0; r < b.rows(); ++r) {
        int v = b.at(r, 0).outputs();
        for (int c = 1; c < b.cols(); ++c)
            if (b.at(r, c).outputs() != v) return std::nullopt;
        out.qparts.push_back(v);
        total += v;
    }
    if (total != a.rows()) return std::nullopt;
    return out;
}

// Global product: blockwise gamma when (A, B) is a BTP, nothing otherwise.
inline std::optional<TermMatrix> upsilon(const TermMatrix& a, const TermMatrix& b) {
    auto blocks = btp_decompose(a, b);
    if (!blocks) return std::nullopt;
    int t = b.rows(), s = a.cols();
    TermMatrix out(t, s);
    std::vector<int> rowoff(t + 1, 0), coloff(s + 1, 0);
    for (int i = 0; i < t; ++i) rowoff[i + 1] = rowoff[i] + blocks->qparts[i];
    for (int l = 0; l < s; ++l) coloff[l + 1] = coloff[l] + blocks->pparts[l];
    for (int i = 0; i < t; ++i)
        for (int l = 0; l < s; ++l) {
            std::vector<Term> num, den;
            for (int r = rowoff[i]; r < rowoff[i + 1]; ++r) num.push_back(a.at(r, l));
            for (int c = coloff[l]; c < coloff[l + 1]; ++c) den.push_back(b.at(i, c));
            out.at(i, l) = Term::compose(num, den);
        }
    return out;
}

// A single fraction: numerator column over denominator row.
struct Fraction {
    std::vector<Term> num, den;

    Term value() const { return Term::compose(num, den); }
};

struct ContactSequences {
    std::vector<std::vector<int>> upper, lower;
};

// Upper and lower contact sequences: the input leaf sequences of the
// numerator factors and the output leaf sequences of the denominator
// factors.
inline ContactSequences contact_sequences(const Fraction& f) {
    if (f.num.empty() || f.den.empty())
        throw std::invalid_argument("contact_sequences: not a fraction");
    ContactSequences cs;
    for (const auto& a : f.num) cs.upper.push_back(a.input_profile());
    for (const auto& b : f.den) cs.lower.push_back(b.output_profile());
    return cs;
}

// Canonical-graph normal form of an Upsilon product string, evaluated left
// to right with the first defined association.  Strings arising from basic
// strings always evaluate to a single entry.
inline std::optional<Term> evaluate_string(std::vector<TermMatrix> factors) {
    if (factors.empty()) return std::nullopt;
    while (factors.size() > 1) {
        bool reduced = false;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            if (auto prod = upsilon(factors[i], factors[i + 1])) {
                factors[i] = *prod;
                factors.erase(factors.begin() + i + 1);
                reduced = true;
                break;
            }
        }
        if (!reduced) return std::nullopt;
    }
    if (factors[0].rows() != 1 || factors[0].cols() != 1) return std::nullopt;
    return factors[0].at(0, 0);
}

// Generator-arity census of a term: how many theta_a^b occurrences.
inline std::map<std::pair<int, int>, int> generator_census(const Term& t) {
    std::map<std::pair<int, int>, int> out;
    for (auto nd : t.nodes()) out[nd] += 1;
    return out;
}

}  // namespace matrad
