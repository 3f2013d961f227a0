#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace hsc {

/// Hard cap on the number of lattice directions (4 spatial + time, with room).
inline constexpr int kMaxDirs = 6;

/// Direction set of a cell, bit i-1 set means the cell extends along direction i.
using DirMask = std::uint16_t;

using CoordArray = std::array<std::int16_t, kMaxDirs>;

inline CoordArray zero_coord() {
    CoordArray c{};
    c.fill(0);
    return c;
}

/// An axis-aligned k-cell: base vertex plus the set of directions it spans.
/// The cell occupies base + sum_{i in dirs} [0,1] * a_i.
struct Cell {
    DirMask dirs = 0;
    CoordArray base = zero_coord();

    int dim() const { return __builtin_popcount(dirs); }
    bool spans(int direction) const { return (dirs >> (direction - 1)) & 1u; }

    bool operator==(const Cell& o) const { return dirs == o.dirs && base == o.base; }
    bool operator!=(const Cell& o) const { return !(*this == o); }
};

inline DirMask dir_bit(int direction) { return static_cast<DirMask>(1u << (direction - 1)); }

/// Geometric containment of axis-aligned cells (a inside b), as point sets.
inline bool cell_contains(const Cell& outer, const Cell& inner, int dims) {
    for (int i = 1; i <= dims; ++i) {
        int alo = inner.base[i - 1], ahi = alo + (inner.spans(i) ? 1 : 0);
        int blo = outer.base[i - 1], bhi = blo + (outer.spans(i) ? 1 : 0);
        if (alo < blo || ahi > bhi) return false;
    }
    return true;
}

inline std::string format_cell(const Cell& c, int dims) {
    std::string s = "o{";
    bool first = true;
    for (int i = 1; i <= dims; ++i) {
        if (!c.spans(i)) continue;
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    s += "}(";
    for (int i = 1; i <= dims; ++i) {
        if (i > 1) s += ',';
        s += std::to_string(c.base[i - 1]);
    }
    s += ')';
    return s;
}

}  // namespace hsc
