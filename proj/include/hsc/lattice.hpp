#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "hsc/cells.hpp"
#include "hsc/chain.hpp"

namespace hsc {

/// Raised on malformed lattice parameters or chain/dimension misuse.
struct LatticeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One lattice direction: vertex coordinates live in [0, upper]. A rough end
/// removes the cells pinned to that bounding hyperplane (relative quotient).
struct DirSpec {
    int upper = 0;
    bool rough_low = false;
    bool rough_high = false;

    bool rough_both() const { return rough_low && rough_high; }
};

/// Immutable hypercubic cell complex with mixed rough/smooth boundaries.
///
/// Stores the cells of dimensions qubit_dim-2 .. qubit_dim+1 (qubit_dim-1 ..
/// when qubit_dim < 2) that are contained in the bounding box U but not in the
/// rough boundary set B, with the surviving boundary incidence between
/// consecutive dimensions. Cell indices are dense and canonical: blocks of
/// equal orientation, orientation sets in lexicographic order, bases in
/// lexicographic order within a block.
class CodeLattice {
public:
    /// Standard (d1,d2)-construction: directions 1..d1 smooth with coordinate
    /// range [0, L_i-1], directions d1+1..d1+d2 rough with range [0, L_i].
    static CodeLattice build(int d1, int d2, std::span<const int> lengths);

    /// Generalized construction from per-direction specs (used for space-time
    /// complexes where the time direction may be smooth or rough on one end).
    static CodeLattice build_with_specs(std::vector<DirSpec> specs, int qubit_dim);

    int dims() const { return static_cast<int>(specs_.size()); }
    int qubit_dim() const { return qubit_dim_; }
    int min_dim() const { return min_dim_; }
    int max_dim() const { return qubit_dim_ + 1; }
    const std::vector<DirSpec>& dir_specs() const { return specs_; }
    const DirSpec& dir_spec(int direction) const { return specs_[direction - 1]; }
    bool is_rough(int direction) const { return specs_[direction - 1].rough_both(); }

    /// Length parameter of the standard construction in a direction
    /// (upper for rough, upper+1 for smooth).
    int length_of(int direction) const;

    std::uint32_t num_cells(int k) const;

    /// Dense canonical index, or -1 when the cell is not part of the complex.
    std::int64_t index_of(int k, const Cell& cell) const;
    Cell cell_at(int k, std::uint32_t index) const;
    bool in_lattice(const Cell& cell) const;

    std::span<const std::uint32_t> boundary_of(int k, std::uint32_t index) const;
    std::span<const std::uint32_t> coboundary_of(int k, std::uint32_t index) const;

    /// Mod-2 boundary of a chain of dimension qubit_dim-1 .. qubit_dim+1.
    Chain boundary(const Chain& chain) const;
    /// Mod-2 coboundary (transpose incidence) for dimension qubit_dim-2 .. qubit_dim.
    Chain coboundary(const Chain& chain) const;

    /// Text dump, one cell per line (dimension, orientation set, base vertex).
    void dump_cells(std::ostream& os) const;

private:
    struct Block {
        DirMask dirs = 0;
        CoordArray lo = zero_coord();
        CoordArray hi = zero_coord();
        std::array<std::int32_t, kMaxDirs> stride{};
        std::uint32_t offset = 0;
        std::uint32_t count = 0;
    };

    struct DimTable {
        std::vector<Block> blocks;
        std::vector<std::int32_t> block_of_mask;  // DirMask -> block position or -1
        std::uint32_t total = 0;
    };

    struct Csr {
        std::vector<std::uint32_t> offsets;  // size = cells + 1
        std::vector<std::uint32_t> items;
    };

    void enumerate_cells();
    void build_incidence();
    const DimTable& table(int k) const;

    std::vector<DirSpec> specs_;
    int qubit_dim_ = 0;
    int min_dim_ = 0;
    std::vector<DimTable> tables_;       // index k - min_dim_
    std::vector<Csr> boundary_;          // entry j: dim (min_dim_+1+j) -> one lower
    std::vector<Csr> coboundary_;        // entry j: dim (min_dim_+j)   -> one higher
};

/// Duality map of the 4D self-dual family: edges to cubes, faces to faces,
/// cubes to edges, with the base shifted by the spanned directions.
Cell dual_cell(const CodeLattice& lattice, const Cell& cell);

}  // namespace hsc
