#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace hsc {

/// Sparse GF(2) vector over the cells of one dimension of a lattice.
/// The support is kept sorted and duplicate-free; adding a chain to
/// itself yields the empty chain.
struct Chain {
    int dim = 0;
    std::vector<std::uint32_t> support;

    Chain() = default;
    explicit Chain(int d) : dim(d) {}
    Chain(int d, std::vector<std::uint32_t> s) : dim(d), support(std::move(s)) {
        normalize();
    }

    bool empty() const { return support.empty(); }
    std::size_t weight() const { return support.size(); }

    bool contains(std::uint32_t idx) const {
        return std::binary_search(support.begin(), support.end(), idx);
    }

    /// Sorts and cancels duplicate pairs mod 2.
    void normalize() {
        std::sort(support.begin(), support.end());
        std::vector<std::uint32_t> out;
        out.reserve(support.size());
        for (std::size_t i = 0; i < support.size();) {
            std::size_t j = i;
            while (j < support.size() && support[j] == support[i]) ++j;
            if ((j - i) % 2 == 1) out.push_back(support[i]);
            i = j;
        }
        support = std::move(out);
    }

    /// GF(2) addition (sorted symmetric difference).
    Chain& operator^=(const Chain& other) {
        std::vector<std::uint32_t> out;
        out.reserve(support.size() + other.support.size());
        std::size_t a = 0, b = 0;
        while (a < support.size() && b < other.support.size()) {
            if (support[a] < other.support[b]) out.push_back(support[a++]);
            else if (other.support[b] < support[a]) out.push_back(other.support[b++]);
            else { ++a; ++b; }
        }
        out.insert(out.end(), support.begin() + a, support.end());
        out.insert(out.end(), other.support.begin() + b, other.support.end());
        support = std::move(out);
        return *this;
    }

    friend Chain operator^(Chain lhs, const Chain& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    /// Overlap parity <a,b> in GF(2).
    friend int overlap_parity(const Chain& a, const Chain& b) {
        std::size_t i = 0, j = 0, count = 0;
        while (i < a.support.size() && j < b.support.size()) {
            if (a.support[i] < b.support[j]) ++i;
            else if (b.support[j] < a.support[i]) ++j;
            else { ++count; ++i; ++j; }
        }
        return static_cast<int>(count & 1u);
    }

    bool operator==(const Chain& other) const {
        return dim == other.dim && support == other.support;
    }
};

}  // namespace hsc
