#include "hsc/gf2.hpp"

namespace hsc {

std::int64_t BitMatrix::row_lowest(std::size_t r, std::size_t from) const {
    const std::uint64_t* row = &data_[r * row_words_];
    std::size_t w = from >> 6;
    if (w >= row_words_) return -1;
    std::uint64_t first = row[w] & (~std::uint64_t{0} << (from & 63));
    if (first) return static_cast<std::int64_t>(w * 64 + __builtin_ctzll(first));
    for (++w; w < row_words_; ++w)
        if (row[w]) return static_cast<std::int64_t>(w * 64 + __builtin_ctzll(row[w]));
    return -1;
}

Gf2Elimination gf2_eliminate(const BitMatrix& a, const std::vector<std::uint8_t>* b) {
    Gf2Elimination out;
    out.reduced = a;
    const std::size_t m = a.rows(), n = a.cols();
    out.rhs.assign(m, 0);
    if (b) out.rhs = *b;
    out.pivot_row_of_col.assign(n, -1);

    std::vector<std::size_t> row_origin(m);
    for (std::size_t r = 0; r < m; ++r) row_origin[r] = r;

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = m;
        for (std::size_t r = rank; r < m; ++r) {
            if (out.reduced.get(r, col)) { pivot = r; break; }
        }
        if (pivot == m) continue;
        if (pivot != rank) {
            out.reduced.swap_rows(pivot, rank);
            std::swap(out.rhs[pivot], out.rhs[rank]);
            std::swap(row_origin[pivot], row_origin[rank]);
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r != rank && out.reduced.get(r, col)) {
                out.reduced.add_row_to(rank, r);
                out.rhs[r] ^= out.rhs[rank];
            }
        }
        out.pivot_col.push_back(static_cast<std::int32_t>(col));
        out.pivot_row_of_col[col] = static_cast<std::int32_t>(rank);
        ++rank;
    }
    out.rank = rank;
    for (std::size_t r = rank; r < m; ++r) {
        if (out.rhs[r]) { out.inconsistent_row = static_cast<std::int64_t>(row_origin[r]); break; }
    }
    return out;
}

std::size_t gf2_rank(const BitMatrix& a) { return gf2_eliminate(a).rank; }

std::optional<std::vector<std::uint8_t>> gf2_solve(const BitMatrix& a,
                                                   const std::vector<std::uint8_t>& b) {
    Gf2Elimination e = gf2_eliminate(a, &b);
    if (!e.feasible()) return std::nullopt;
    std::vector<std::uint8_t> x(a.cols(), 0);
    for (std::size_t r = 0; r < e.rank; ++r)
        x[static_cast<std::size_t>(e.pivot_col[r])] = e.rhs[r];
    return x;
}

std::vector<BitVec> gf2_kernel(const BitMatrix& a) {
    Gf2Elimination e = gf2_eliminate(a);
    const std::size_t n = a.cols();
    std::vector<BitVec> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (e.pivot_row_of_col[col] >= 0) continue;
        BitVec v(n);
        v.set(col, true);
        for (std::size_t r = 0; r < e.rank; ++r) {
            if (e.reduced.get(r, col)) v.set(static_cast<std::size_t>(e.pivot_col[r]), true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hsc
