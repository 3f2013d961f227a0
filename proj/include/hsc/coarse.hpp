#pragma once

#include <array>
#include <memory>

#include "hsc/lattice.hpp"

namespace hsc {

/// GF(2) embeddings of a lattice of halved extents into the full lattice:
/// an edge maps to the one or two collinear edges covering its doubled span,
/// a face to the one, two or four faces tiling its doubled span. The maps
/// commute with the boundary operator.
class CoarseMaps {
public:
    static bool can_coarsen(const CodeLattice& lattice);

    explicit CoarseMaps(std::shared_ptr<const CodeLattice> fine);

    const CodeLattice& fine() const { return *fine_; }
    const CodeLattice& coarse() const { return *coarse_; }
    std::shared_ptr<const CodeLattice> coarse_ptr() const { return coarse_; }

    /// Image of a coarse-lattice edge: 1 or 2 fine-lattice edges.
    std::span<const std::uint32_t> edge_image(std::uint32_t coarse_edge) const {
        const auto& e = edge_images_[coarse_edge];
        return {e.data(), e[1] == kNone ? std::size_t{1} : std::size_t{2}};
    }
    /// Image of a coarse-lattice face: 1, 2 or 4 fine-lattice faces.
    std::span<const std::uint32_t> face_image(std::uint32_t coarse_face) const {
        const auto& f = face_images_[coarse_face];
        std::size_t n = 4;
        while (n > 1 && f[n - 1] == kNone) --n;
        return {f.data(), n};
    }

    /// Coarse edge owning a fine edge of the coarse sublattice, or -1.
    std::int64_t edge_preimage(std::uint32_t fine_edge) const { return edge_preimage_[fine_edge]; }

    /// True when the fine edge touches an all-even vertex (part of the
    /// coarse-grained sublattice).
    bool is_sublattice_edge(std::uint32_t fine_edge) const {
        return edge_preimage_[fine_edge] >= 0;
    }

    Chain map_faces_up(const Chain& coarse_faces) const;

private:
    static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

    std::shared_ptr<const CodeLattice> fine_;
    std::shared_ptr<const CodeLattice> coarse_;
    std::vector<std::array<std::uint32_t, 2>> edge_images_;
    std::vector<std::array<std::uint32_t, 4>> face_images_;
    std::vector<std::int64_t> edge_preimage_;
};

}  // namespace hsc
