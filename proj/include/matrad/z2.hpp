#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace matrad {

// Formal GF(2) sum of cells. Addition is symmetric difference, so a term
// appearing twice cancels. The cell type only needs operator<.
template <class Cell>
class Z2Chain {
public:
    Z2Chain() = default;

    void add(const Cell& c) {
        auto it = support_.find(c);
        if (it == support_.end())
            support_.insert(c);
        else
            support_.erase(it);
    }

    Z2Chain& operator+=(const Z2Chain& other) {
        for (const auto& c : other.support_) add(c);
        return *this;
    }

    bool zero() const { return support_.empty(); }
    std::size_t size() const { return support_.size(); }
    bool contains(const Cell& c) const { return support_.count(c) != 0; }
    const std::set<Cell>& support() const { return support_; }

    bool operator==(const Z2Chain& other) const { return support_ == other.support_; }
    bool operator!=(const Z2Chain& other) const { return !(*this == other); }

private:
    std::set<Cell> support_;
};

// Dense GF(2) matrix with row-reduction rank, enough for desk-scale homology.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(rows * words_, 0) {}

    void set(std::size_t r, std::size_t c) {
        data_[r * words_ + c / 64] |= (std::uint64_t{1} << (c % 64));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::size_t rank() const {
        std::vector<std::uint64_t> work(data_);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t w = c / 64;
            std::uint64_t bit = std::uint64_t{1} << (c % 64);
            std::size_t pivot = rank;
            while (pivot < rows_ && !(work[pivot * words_ + w] & bit)) ++pivot;
            if (pivot == rows_) continue;
            for (std::size_t k = 0; k < words_; ++k)
                std::swap(work[rank * words_ + k], work[pivot * words_ + k]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r != rank && (work[r * words_ + w] & bit))
                    for (std::size_t k = 0; k < words_; ++k)
                        work[r * words_ + k] ^= work[rank * words_ + k];
            }
            ++rank;
        }
        return rank;
    }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace matrad
