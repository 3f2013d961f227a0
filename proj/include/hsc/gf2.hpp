#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hsc {

/// Fixed-size bit vector backed by 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    /// Index of the lowest set bit, or -1.
    std::int64_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<std::int64_t>(w * 64 + __builtin_ctzll(words_[w]));
        return -1;
    }

    bool operator==(const BitVec& o) const { return size_ == o.size_ && words_ == o.words_; }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix with flat row-major word storage (single allocation).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_words_((cols + 63) / 64), data_(rows * row_words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * row_words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t m = std::uint64_t{1} << (c & 63);
        auto& w = data_[r * row_words_ + (c >> 6)];
        if (v) w |= m; else w &= ~m;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * row_words_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    void add_row_to(std::size_t src, std::size_t dst) {
        const std::uint64_t* s = &data_[src * row_words_];
        std::uint64_t* d = &data_[dst * row_words_];
        for (std::size_t w = 0; w < row_words_; ++w) d[w] ^= s[w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        std::uint64_t* pa = &data_[a * row_words_];
        std::uint64_t* pb = &data_[b * row_words_];
        for (std::size_t w = 0; w < row_words_; ++w) std::swap(pa[w], pb[w]);
    }
    /// First set column at or after `from` in a row, or -1.
    std::int64_t row_lowest(std::size_t r, std::size_t from = 0) const;

private:
    std::size_t rows_ = 0, cols_ = 0, row_words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Result of Gauss-Jordan elimination of [A | b].
struct Gf2Elimination {
    BitMatrix reduced;                 // reduced row-echelon form of A
    std::vector<std::uint8_t> rhs;     // eliminated right-hand side per row
    std::vector<std::int32_t> pivot_col;  // per reduced row, -1 past rank
    std::vector<std::int32_t> pivot_row_of_col;  // per column, -1 if free
    std::size_t rank = 0;
    /// Original row index responsible for the first inconsistency, or -1.
    std::int64_t inconsistent_row = -1;

    bool feasible() const { return inconsistent_row < 0; }
};

Gf2Elimination gf2_eliminate(const BitMatrix& a, const std::vector<std::uint8_t>* b = nullptr);

std::size_t gf2_rank(const BitMatrix& a);

/// One solution of A x = b, or nullopt when the system is infeasible.
std::optional<std::vector<std::uint8_t>> gf2_solve(const BitMatrix& a,
                                                   const std::vector<std::uint8_t>& b);

/// Basis of the kernel of A (as assignments over the columns).
std::vector<BitVec> gf2_kernel(const BitMatrix& a);

}  // namespace hsc
