#pragma once

#include <iosfwd>
#include <memory>

#include "hsc/coarse.hpp"
#include "hsc/coset.hpp"

namespace hsc {

/// Local decoding region around an all-odd vertex: the non-sublattice edges
/// within unit Chebyshev distance and the faces whose flips cannot corrupt
/// regions already cleared by earlier boxes.
struct Box {
    CoordArray center = zero_coord();
    std::int64_t omega = 0;
    std::vector<std::uint32_t> edges;
    std::vector<std::uint32_t> faces;
    CosetCsr csr;  // rows follow `edges`, variables follow `faces`
};

/// True when the edge touches a vertex with all-even coordinates (it belongs
/// to the coarse-grained sublattice).
bool is_sublattice_edge(const CodeLattice& lattice, std::uint32_t edge);

/// All boxes of a lattice, sorted by processing order (increasing omega).
std::vector<Box> build_boxes(const CodeLattice& lattice);

struct RgOptions {
    CosetOptions coset;
    bool trace = false;
    std::ostream* trace_out = nullptr;
};

struct RgStats {
    std::uint64_t solves = 0;
    std::uint64_t exact_solves = 0;

    double exact_fraction() const {
        return solves ? static_cast<double>(exact_solves) / static_cast<double>(solves) : 1.0;
    }
    RgStats& operator+=(const RgStats& o) {
        solves += o.solves;
        exact_solves += o.exact_solves;
        return *this;
    }
};

struct RgResult {
    Chain correction;
    RgStats stats;
};

/// Renormalization-group decoder: reduces the syndrome onto a halved lattice
/// through ordered overlapping box solves, recurses, and solves the smallest
/// lattice in one exact shot. Immutable after construction; decode calls are
/// thread-safe.
class RgDecoder {
public:
    explicit RgDecoder(std::shared_ptr<const CodeLattice> lattice, RgOptions options = {});

    int levels() const { return static_cast<int>(levels_.size()); }
    const CodeLattice& lattice_at(int level) const { return *levels_[level].lattice; }
    const CoarseMaps& maps_at(int level) const { return *levels_[level].maps; }
    const std::vector<Box>& boxes_at(int level) const { return levels_[level].boxes; }

    /// Full decode: the returned chain always bounds the input syndrome.
    RgResult decode(const Chain& syndrome) const;

    struct ReduceOutcome {
        Chain partial_correction;
        Chain reduced_syndrome;
        std::vector<std::int32_t> reduced_weights;
        RgStats stats;
    };
    /// One coarse-graining step on the top-level lattice.
    ReduceOutcome reduce_syndrome(const Chain& syndrome,
                                  const std::vector<std::int32_t>& weights) const;

private:
    struct Level {
        std::shared_ptr<const CodeLattice> lattice;
        std::unique_ptr<CoarseMaps> maps;  // null on the base level
        std::vector<Box> boxes;            // empty on the base level
        CosetCsr base_csr;                 // whole-lattice system on the base level
    };

    ReduceOutcome reduce_level(int level, const Chain& syndrome,
                               const std::vector<std::int32_t>& weights) const;

    std::vector<Level> levels_;
    RgOptions opt_;
};

}  // namespace hsc
