#include "hsc/coarse.hpp"

namespace hsc {

namespace {

// A rough-high direction halves as U -> (U+1)/2 (odd U), a smooth one as
// U -> U/2 (even U); the midpoint special case belongs to rough directions.
bool rough_like(const DirSpec& s) { return s.rough_high; }

}  // namespace

bool CoarseMaps::can_coarsen(const CodeLattice& lattice) {
    if (lattice.qubit_dim() != 2) return false;
    bool shrinks = false;
    for (const DirSpec& s : lattice.dir_specs()) {
        if (rough_like(s)) {
            if (s.upper % 2 == 0) return false;
            if (s.upper >= 3) shrinks = true;
        } else {
            if (s.upper % 2 != 0) return false;
            if (s.upper >= 2) shrinks = true;
        }
    }
    return shrinks;
}

CoarseMaps::CoarseMaps(std::shared_ptr<const CodeLattice> fine) : fine_(std::move(fine)) {
    const CodeLattice& big = *fine_;
    if (!can_coarsen(big)) throw LatticeError("coarse maps: extents do not halve");

    std::vector<DirSpec> specs;
    for (const DirSpec& s : big.dir_specs()) {
        DirSpec c = s;
        c.upper = rough_like(s) ? (s.upper + 1) / 2 : s.upper / 2;
        specs.push_back(c);
    }
    coarse_ = std::make_shared<CodeLattice>(CodeLattice::build_with_specs(specs, big.qubit_dim()));
    const CodeLattice& small = *coarse_;
    const int dims = big.dims();

    auto doubled = [&](const Cell& cell) {
        Cell out = cell;
        for (int i = 0; i < dims; ++i) out.base[i] = static_cast<std::int16_t>(2 * cell.base[i]);
        return out;
    };
    auto at_midpoint = [&](const Cell& cell, int dir) {
        return rough_like(small.dir_spec(dir)) &&
               cell.base[dir - 1] == small.dir_spec(dir).upper - 1;
    };
    auto fine_index = [&](int k, const Cell& cell) {
        std::int64_t idx = big.index_of(k, cell);
        if (idx < 0) throw LatticeError("coarse maps: image cell missing from the fine lattice");
        return static_cast<std::uint32_t>(idx);
    };

    edge_images_.assign(small.num_cells(1), {kNone, kNone});
    edge_preimage_.assign(big.num_cells(1), -1);
    for (std::uint32_t ce = 0; ce < small.num_cells(1); ++ce) {
        Cell e = small.cell_at(1, ce);
        int dir = 0;
        for (int i = 1; i <= dims; ++i)
            if (e.spans(i)) dir = i;
        Cell img = doubled(e);
        edge_images_[ce][0] = fine_index(1, img);
        if (!at_midpoint(e, dir)) {
            Cell img2 = img;
            img2.base[dir - 1] = static_cast<std::int16_t>(img2.base[dir - 1] + 1);
            edge_images_[ce][1] = fine_index(1, img2);
        }
        for (std::uint32_t fe : edge_image(ce)) edge_preimage_[fe] = ce;
    }

    face_images_.assign(small.num_cells(2), {kNone, kNone, kNone, kNone});
    for (std::uint32_t cf = 0; cf < small.num_cells(2); ++cf) {
        Cell f = small.cell_at(2, cf);
        int di = 0, dj = 0;
        for (int i = 1; i <= dims; ++i) {
            if (!f.spans(i)) continue;
            if (di == 0) di = i;
            else dj = i;
        }
        const bool double_i = !at_midpoint(f, di);
        const bool double_j = !at_midpoint(f, dj);
        Cell img = doubled(f);
        std::size_t n = 0;
        face_images_[cf][n++] = fine_index(2, img);
        if (double_i) {
            Cell c2 = img;
            c2.base[di - 1] = static_cast<std::int16_t>(c2.base[di - 1] + 1);
            face_images_[cf][n++] = fine_index(2, c2);
        }
        if (double_j) {
            Cell c2 = img;
            c2.base[dj - 1] = static_cast<std::int16_t>(c2.base[dj - 1] + 1);
            face_images_[cf][n++] = fine_index(2, c2);
        }
        if (double_i && double_j) {
            Cell c2 = img;
            c2.base[di - 1] = static_cast<std::int16_t>(c2.base[di - 1] + 1);
            c2.base[dj - 1] = static_cast<std::int16_t>(c2.base[dj - 1] + 1);
            face_images_[cf][n++] = fine_index(2, c2);
        }
    }
}

Chain CoarseMaps::map_faces_up(const Chain& coarse_faces) const {
    Chain out(2);
    for (std::uint32_t cf : coarse_faces.support) {
        auto img = face_image(cf);
        out.support.insert(out.support.end(), img.begin(), img.end());
    }
    out.normalize();
    return out;
}

}  // namespace hsc
