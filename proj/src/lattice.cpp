#include "hsc/lattice.hpp"

#include <algorithm>
#include <ostream>

namespace hsc {

namespace {

// All k-subsets of {1..dims} in lexicographic order of the sorted lists.
void enumerate_masks(int dims, int k, std::vector<DirMask>& out) {
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int next, int depth) -> void {
        if (depth == k) {
            DirMask m = 0;
            for (int d : pick) m |= dir_bit(d);
            out.push_back(m);
            return;
        }
        for (int d = next; d <= dims - (k - depth - 1); ++d) {
            pick[depth] = d;
            self(self, d + 1, depth + 1);
        }
    };
    if (k == 0) {
        out.push_back(0);
        return;
    }
    if (k > dims) return;
    rec(rec, 1, 0);
}

}  // namespace

CodeLattice CodeLattice::build(int d1, int d2, std::span<const int> lengths) {
    if (d2 < 1) throw LatticeError("buildLattice: d2 must be at least 1 (no qubit cells otherwise)");
    if (d1 < 0) throw LatticeError("buildLattice: d1 must be non-negative");
    if (static_cast<int>(lengths.size()) != d1 + d2)
        throw LatticeError("buildLattice: expected d1+d2 length entries");
    std::vector<DirSpec> specs;
    specs.reserve(lengths.size());
    for (int i = 0; i < d1 + d2; ++i) {
        if (lengths[i] <= 0) throw LatticeError("buildLattice: lengths must be positive");
        if (i < d1) specs.push_back({lengths[i] - 1, false, false});
        else specs.push_back({lengths[i], true, true});
    }
    return build_with_specs(std::move(specs), d2);
}

CodeLattice CodeLattice::build_with_specs(std::vector<DirSpec> specs, int qubit_dim) {
    if (specs.empty() || static_cast<int>(specs.size()) > kMaxDirs)
        throw LatticeError("lattice: direction count out of range");
    if (qubit_dim < 1) throw LatticeError("lattice: qubit dimension must be at least 1");
    for (const auto& s : specs) {
        if (s.upper < 0) throw LatticeError("lattice: negative extent");
        if (s.rough_low && !s.rough_high)
            throw LatticeError("lattice: rough-low-only boundaries are not supported");
    }
    CodeLattice lat;
    lat.specs_ = std::move(specs);
    lat.qubit_dim_ = qubit_dim;
    lat.min_dim_ = qubit_dim >= 2 ? qubit_dim - 2 : qubit_dim - 1;
    lat.enumerate_cells();
    lat.build_incidence();
    return lat;
}

int CodeLattice::length_of(int direction) const {
    const DirSpec& s = specs_[direction - 1];
    return s.rough_both() ? s.upper : s.upper + 1;
}

void CodeLattice::enumerate_cells() {
    const int dims = this->dims();
    tables_.resize(max_dim() - min_dim_ + 1);
    for (int k = min_dim_; k <= max_dim(); ++k) {
        DimTable& tab = tables_[k - min_dim_];
        tab.block_of_mask.assign(std::size_t{1} << dims, -1);
        std::vector<DirMask> masks;
        enumerate_masks(dims, k, masks);
        std::uint32_t offset = 0;
        for (DirMask m : masks) {
            Block blk;
            blk.dirs = m;
            bool empty = false;
            for (int i = 1; i <= dims; ++i) {
                const DirSpec& s = specs_[i - 1];
                int lo, hi;
                if (m & dir_bit(i)) {
                    lo = 0;
                    hi = s.upper - 1;
                } else {
                    lo = s.rough_low ? 1 : 0;
                    hi = s.upper - (s.rough_high ? 1 : 0);
                }
                if (hi < lo) empty = true;
                blk.lo[i - 1] = static_cast<std::int16_t>(lo);
                blk.hi[i - 1] = static_cast<std::int16_t>(hi);
            }
            if (empty) continue;
            std::int64_t count = 1;
            for (int i = dims; i >= 1; --i) {
                blk.stride[i - 1] = static_cast<std::int32_t>(count);
                count *= blk.hi[i - 1] - blk.lo[i - 1] + 1;
            }
            blk.offset = offset;
            blk.count = static_cast<std::uint32_t>(count);
            tab.block_of_mask[m] = static_cast<std::int32_t>(tab.blocks.size());
            tab.blocks.push_back(blk);
            offset += blk.count;
        }
        tab.total = offset;
    }
}

const CodeLattice::DimTable& CodeLattice::table(int k) const {
    if (k < min_dim_ || k > max_dim()) throw LatticeError("lattice: cell dimension outside stored range");
    return tables_[k - min_dim_];
}

std::uint32_t CodeLattice::num_cells(int k) const {
    if (k < min_dim_ || k > max_dim()) return 0;
    return tables_[k - min_dim_].total;
}

std::int64_t CodeLattice::index_of(int k, const Cell& cell) const {
    const DimTable& tab = table(k);
    if (cell.dim() != k) return -1;
    std::int32_t b = tab.block_of_mask[cell.dirs];
    if (b < 0) return -1;
    const Block& blk = tab.blocks[b];
    std::int64_t off = blk.offset;
    for (int i = 0; i < dims(); ++i) {
        if (cell.base[i] < blk.lo[i] || cell.base[i] > blk.hi[i]) return -1;
        off += static_cast<std::int64_t>(cell.base[i] - blk.lo[i]) * blk.stride[i];
    }
    return off;
}

Cell CodeLattice::cell_at(int k, std::uint32_t index) const {
    const DimTable& tab = table(k);
    if (index >= tab.total) throw LatticeError("lattice: cell index out of range");
    auto it = std::upper_bound(tab.blocks.begin(), tab.blocks.end(), index,
                               [](std::uint32_t v, const Block& b) { return v < b.offset; });
    const Block& blk = *std::prev(it);
    Cell cell;
    cell.dirs = blk.dirs;
    std::uint32_t rem = index - blk.offset;
    for (int i = 0; i < dims(); ++i) {
        std::uint32_t q = rem / static_cast<std::uint32_t>(blk.stride[i]);
        rem -= q * static_cast<std::uint32_t>(blk.stride[i]);
        cell.base[i] = static_cast<std::int16_t>(blk.lo[i] + static_cast<int>(q));
    }
    return cell;
}

bool CodeLattice::in_lattice(const Cell& cell) const {
    for (int i = 1; i <= dims(); ++i) {
        const DirSpec& s = specs_[i - 1];
        int v = cell.base[i - 1];
        if (cell.spans(i)) {
            if (v < 0 || v + 1 > s.upper) return false;
        } else {
            if (v < (s.rough_low ? 1 : 0) || v > s.upper - (s.rough_high ? 1 : 0)) return false;
        }
    }
    return true;
}

void CodeLattice::build_incidence() {
    const int dims = this->dims();
    boundary_.resize(max_dim() - min_dim_);
    coboundary_.resize(max_dim() - min_dim_);
    for (int k = min_dim_ + 1; k <= max_dim(); ++k) {
        Csr& bnd = boundary_[k - min_dim_ - 1];
        const std::uint32_t n = num_cells(k);
        const std::uint32_t n_lower = num_cells(k - 1);
        bnd.offsets.assign(n + 1, 0);
        std::vector<std::uint32_t> counts(n_lower, 0);
        for (std::uint32_t idx = 0; idx < n; ++idx) {
            Cell cell = cell_at(k, idx);
            bnd.offsets[idx] = static_cast<std::uint32_t>(bnd.items.size());
            for (int i = 1; i <= dims; ++i) {
                if (!cell.spans(i)) continue;
                Cell face = cell;
                face.dirs = static_cast<DirMask>(cell.dirs & ~dir_bit(i));
                for (int shift = 0; shift <= 1; ++shift) {
                    Cell f = face;
                    f.base[i - 1] = static_cast<std::int16_t>(cell.base[i - 1] + shift);
                    std::int64_t j = index_of(k - 1, f);
                    if (j >= 0) {
                        bnd.items.push_back(static_cast<std::uint32_t>(j));
                        ++counts[static_cast<std::uint32_t>(j)];
                    }
                }
            }
            std::sort(bnd.items.begin() + bnd.offsets[idx], bnd.items.end());
        }
        bnd.offsets[n] = static_cast<std::uint32_t>(bnd.items.size());

        Csr& cob = coboundary_[k - min_dim_ - 1];
        cob.offsets.assign(n_lower + 1, 0);
        for (std::uint32_t j = 0; j < n_lower; ++j) cob.offsets[j + 1] = cob.offsets[j] + counts[j];
        cob.items.resize(bnd.items.size());
        std::vector<std::uint32_t> cursor(cob.offsets.begin(), cob.offsets.end() - 1);
        for (std::uint32_t idx = 0; idx < n; ++idx)
            for (std::uint32_t t = bnd.offsets[idx]; t < bnd.offsets[idx + 1]; ++t)
                cob.items[cursor[bnd.items[t]]++] = idx;
    }
}

std::span<const std::uint32_t> CodeLattice::boundary_of(int k, std::uint32_t index) const {
    if (k <= min_dim_ || k > max_dim()) throw LatticeError("lattice: no boundary map for this dimension");
    const Csr& csr = boundary_[k - min_dim_ - 1];
    return {csr.items.data() + csr.offsets[index], csr.items.data() + csr.offsets[index + 1]};
}

std::span<const std::uint32_t> CodeLattice::coboundary_of(int k, std::uint32_t index) const {
    if (k < min_dim_ || k >= max_dim()) throw LatticeError("lattice: no coboundary map for this dimension");
    const Csr& csr = coboundary_[k - min_dim_];
    return {csr.items.data() + csr.offsets[index], csr.items.data() + csr.offsets[index + 1]};
}

Chain CodeLattice::boundary(const Chain& chain) const {
    if (chain.dim <= min_dim_ || chain.dim > max_dim())
        throw LatticeError("boundary: chain dimension outside supported range");
    Chain out(chain.dim - 1);
    for (std::uint32_t idx : chain.support) {
        auto cells = boundary_of(chain.dim, idx);
        out.support.insert(out.support.end(), cells.begin(), cells.end());
    }
    out.normalize();
    return out;
}

Chain CodeLattice::coboundary(const Chain& chain) const {
    if (chain.dim < min_dim_ || chain.dim >= max_dim())
        throw LatticeError("coboundary: chain dimension outside supported range");
    Chain out(chain.dim + 1);
    for (std::uint32_t idx : chain.support) {
        auto cells = coboundary_of(chain.dim, idx);
        out.support.insert(out.support.end(), cells.begin(), cells.end());
    }
    out.normalize();
    return out;
}

void CodeLattice::dump_cells(std::ostream& os) const {
    for (int k = min_dim_; k <= max_dim(); ++k) {
        for (std::uint32_t idx = 0; idx < num_cells(k); ++idx) {
            Cell c = cell_at(k, idx);
            os << "dim=" << k << " dirs=";
            bool first = true;
            for (int i = 1; i <= dims(); ++i) {
                if (!c.spans(i)) continue;
                if (!first) os << ',';
                os << i;
                first = false;
            }
            if (first) os << '-';
            os << " base=";
            for (int i = 1; i <= dims(); ++i) {
                if (i > 1) os << ',';
                os << c.base[i - 1];
            }
            os << '\n';
        }
    }
}

Cell dual_cell(const CodeLattice& lattice, const Cell& cell) {
    if (lattice.dims() != 4)
        throw LatticeError("dualize: only defined for the 4D self-dual family");
    int k = cell.dim();
    if (k < 1 || k > 3) throw LatticeError("dualize: unsupported cell dimension");
    Cell dual;
    dual.dirs = static_cast<DirMask>(~cell.dirs & 0xFu);
    dual.base = cell.base;
    for (int i = 1; i <= 4; ++i)
        if (cell.spans(i)) dual.base[i - 1] = static_cast<std::int16_t>(dual.base[i - 1] + 1);
    return dual;
}

}  // namespace hsc
