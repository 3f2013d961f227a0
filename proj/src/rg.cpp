#include "hsc/rg.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

namespace hsc {

bool is_sublattice_edge(const CodeLattice& lattice, std::uint32_t edge) {
    Cell e = lattice.cell_at(1, edge);
    for (int i = 1; i <= lattice.dims(); ++i)
        if (!e.spans(i) && (e.base[i - 1] & 1)) return false;
    return true;
}

std::vector<Box> build_boxes(const CodeLattice& lat) {
    const int dims = lat.dims();
    for (const DirSpec& s : lat.dir_specs())
        if (s.upper < 1)
            throw LatticeError("build_boxes: degenerate direction has no odd vertices");

    // omega = sum_m v_m * base^m with base > any coordinate: processing order
    // is positional, later directions most significant
    std::int64_t base = 2;
    for (const DirSpec& s : lat.dir_specs()) base = std::max<std::int64_t>(base, s.upper + 1);
    auto omega_of = [&](const CoordArray& v) {
        std::int64_t o = 0, scale = base;
        for (int i = 0; i < dims; ++i, scale *= base) o += v[i] * scale;
        return o;
    };

    std::vector<Box> boxes;
    CoordArray center = zero_coord();
    auto gen = [&](auto&& self, int dir) -> void {
        if (dir > dims) {
            Box b;
            b.center = center;
            b.omega = omega_of(center);
            boxes.push_back(std::move(b));
            return;
        }
        for (int v = 1; v <= lat.dir_spec(dir).upper; v += 2) {
            center[dir - 1] = static_cast<std::int16_t>(v);
            self(self, dir + 1);
        }
    };
    gen(gen, 1);
    std::sort(boxes.begin(), boxes.end(),
              [](const Box& a, const Box& b) { return a.omega < b.omega; });

    // E(v): non-sublattice edges with both endpoints within Chebyshev radius 1
    for (Box& b : boxes) {
        for (int dir = 1; dir <= dims; ++dir) {
            Cell e;
            e.dirs = dir_bit(dir);
            CoordArray lo = b.center, hi = b.center;
            for (int i = 0; i < dims; ++i) {
                lo[i] = static_cast<std::int16_t>(b.center[i] - 1);
                hi[i] = static_cast<std::int16_t>(b.center[i] + 1);
            }
            hi[dir - 1] = b.center[dir - 1];  // upper endpoint must stay in range
            auto rec = [&](auto&& self, int i) -> void {
                if (i > dims) {
                    std::int64_t idx = lat.index_of(1, e);
                    if (idx >= 0 && !is_sublattice_edge(lat, static_cast<std::uint32_t>(idx)))
                        b.edges.push_back(static_cast<std::uint32_t>(idx));
                    return;
                }
                for (int v = lo[i - 1]; v <= hi[i - 1]; ++v) {
                    e.base[i - 1] = static_cast<std::int16_t>(v);
                    self(self, i + 1);
                }
            };
            rec(rec, 1);
        }
        std::sort(b.edges.begin(), b.edges.end());
    }

    // highest processing order over the boxes containing each edge
    std::unordered_map<std::uint32_t, std::int64_t> max_omega;
    for (const Box& b : boxes)
        for (std::uint32_t e : b.edges) {
            auto [it, fresh] = max_omega.try_emplace(e, b.omega);
            if (!fresh) it->second = std::max(it->second, b.omega);
        }

    // F(v): faces incident to E(v) whose every surviving edge is either on the
    // sublattice or inside a box not yet processed when this one runs
    for (Box& b : boxes) {
        std::vector<std::uint32_t> cand;
        for (std::uint32_t e : b.edges)
            for (std::uint32_t f : lat.coboundary_of(1, e)) cand.push_back(f);
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (std::uint32_t f : cand) {
            bool ok = true;
            for (std::uint32_t e : lat.boundary_of(2, f)) {
                if (is_sublattice_edge(lat, e)) continue;
                auto it = max_omega.find(e);
                if (it == max_omega.end() || it->second < b.omega) {
                    ok = false;
                    break;
                }
            }
            if (ok) b.faces.push_back(f);
        }

        // row structure: for each box edge, the box faces containing it
        std::unordered_map<std::uint32_t, std::uint32_t> edge_row;
        for (std::uint32_t r = 0; r < b.edges.size(); ++r) edge_row[b.edges[r]] = r;
        std::vector<std::vector<std::uint32_t>> rows(b.edges.size());
        for (std::uint32_t c = 0; c < b.faces.size(); ++c)
            for (std::uint32_t e : lat.boundary_of(2, b.faces[c])) {
                auto it = edge_row.find(e);
                if (it != edge_row.end()) rows[it->second].push_back(c);
            }
        b.csr = CosetCsr::compile(b.faces.size(), rows);
    }
    return boxes;
}

RgDecoder::RgDecoder(std::shared_ptr<const CodeLattice> lattice, RgOptions options)
    : opt_(options) {
    if (lattice->qubit_dim() != 2)
        throw LatticeError("RG decoder: requires a code with two-dimensional qubit cells");
    std::shared_ptr<const CodeLattice> cur = std::move(lattice);
    while (true) {
        Level level;
        level.lattice = cur;
        if (CoarseMaps::can_coarsen(*cur)) {
            level.maps = std::make_unique<CoarseMaps>(cur);
            level.boxes = build_boxes(*cur);
            cur = level.maps->coarse_ptr();
            levels_.push_back(std::move(level));
        } else {
            std::vector<std::vector<std::uint32_t>> rows(cur->num_cells(1));
            for (std::uint32_t f = 0; f < cur->num_cells(2); ++f)
                for (std::uint32_t e : cur->boundary_of(2, f)) rows[e].push_back(f);
            level.base_csr = CosetCsr::compile(cur->num_cells(2), rows);
            levels_.push_back(std::move(level));
            break;
        }
    }
}

RgDecoder::ReduceOutcome RgDecoder::reduce_level(int li, const Chain& syndrome,
                                                 const std::vector<std::int32_t>& weights) const {
    const Level& level = levels_[li];
    const CodeLattice& lat = *level.lattice;
    const CoarseMaps& maps = *level.maps;

    std::vector<std::uint8_t> synd(lat.num_cells(1), 0);
    for (std::uint32_t e : syndrome.support) synd[e] = 1;
    std::vector<std::int32_t> w = weights;

    ReduceOutcome out;
    out.partial_correction = Chain(2);
    std::vector<std::uint8_t> chosen(lat.num_cells(2), 0);

    std::vector<std::uint8_t> b_local;
    std::vector<std::int32_t> w_local;
    for (const Box& box : level.boxes) {
        b_local.assign(box.edges.size(), 0);
        bool any = false;
        for (std::size_t r = 0; r < box.edges.size(); ++r) {
            b_local[r] = synd[box.edges[r]];
            any |= b_local[r] != 0;
        }
        w_local.resize(box.faces.size());
        bool any_negative = false;
        for (std::size_t c = 0; c < box.faces.size(); ++c) {
            w_local[c] = w[box.faces[c]];
            any_negative |= w_local[c] < 0;
        }
        if (!any && !any_negative) continue;

        CosetSolution sol;
        try {
            sol = min_weight_coset_csr(box.csr, b_local, w_local, opt_.coset);
        } catch (const CosetInfeasible&) {
            throw std::runtime_error("RG decoder: infeasible box at " +
                                     format_cell(Cell{0, box.center}, lat.dims()));
        }
        ++out.stats.solves;
        if (sol.optimal) ++out.stats.exact_solves;
        for (std::size_t c = 0; c < box.faces.size(); ++c) {
            if (!sol.x[c]) continue;
            std::uint32_t f = box.faces[c];
            chosen[f] ^= 1;
            w[f] = -w[f];
            for (std::uint32_t e : lat.boundary_of(2, f)) synd[e] ^= 1;
        }
    }

    for (std::uint32_t f = 0; f < chosen.size(); ++f)
        if (chosen[f]) out.partial_correction.support.push_back(f);

    // pull the residual syndrome back through the edge map
    const CodeLattice& small = maps.coarse();
    out.reduced_syndrome = Chain(1);
    std::vector<std::uint8_t> seen(lat.num_cells(1), 0);
    for (std::uint32_t ce = 0; ce < small.num_cells(1); ++ce) {
        auto img = maps.edge_image(ce);
        std::uint8_t v = synd[img[0]];
        for (std::uint32_t fe : img) {
            if (synd[fe] != v)
                throw std::logic_error("RG decoder: reduced syndrome not in the embedding image");
            seen[fe] = 1;
        }
        if (v) out.reduced_syndrome.support.push_back(ce);
    }
    for (std::uint32_t e = 0; e < lat.num_cells(1); ++e)
        if (synd[e] && !seen[e])
            throw std::logic_error("RG decoder: residual syndrome off the coarse sublattice");

    out.reduced_weights.assign(small.num_cells(2), 0);
    for (std::uint32_t cf = 0; cf < small.num_cells(2); ++cf) {
        std::int32_t sum = 0;
        for (std::uint32_t ff : maps.face_image(cf)) sum += w[ff];
        out.reduced_weights[cf] = sum;
    }
    return out;
}

RgDecoder::ReduceOutcome RgDecoder::reduce_syndrome(
    const Chain& syndrome, const std::vector<std::int32_t>& weights) const {
    if (levels_.size() < 2) throw LatticeError("reduce_syndrome: lattice has no coarser level");
    return reduce_level(0, syndrome, weights);
}

RgResult RgDecoder::decode(const Chain& syndrome) const {
    const CodeLattice& top = *levels_.front().lattice;
    if (syndrome.dim != 1) throw LatticeError("decodeRG: syndrome must be an edge chain");
    if (!top.boundary(syndrome).empty())
        throw LatticeError("decodeRG: syndrome must be closed");

    RgResult result;
    std::vector<Chain> partials;
    Chain cur = syndrome;
    std::vector<std::int32_t> weights(top.num_cells(2), 1);

    const int base = levels() - 1;
    for (int li = 0; li < base; ++li) {
        ReduceOutcome step = reduce_level(li, cur, weights);
        result.stats += step.stats;
        if (opt_.trace && opt_.trace_out)
            *opt_.trace_out << "level " << li << ": syndrome " << cur.weight() << " edges, partial "
                            << step.partial_correction.weight() << " faces, reduced "
                            << step.reduced_syndrome.weight() << " edges\n";
        partials.push_back(std::move(step.partial_correction));
        cur = std::move(step.reduced_syndrome);
        weights = std::move(step.reduced_weights);
    }

    // base case: hand the whole lattice to the coset solver
    const Level& bl = levels_[base];
    std::vector<std::uint8_t> b(bl.lattice->num_cells(1), 0);
    for (std::uint32_t e : cur.support) b[e] = 1;
    CosetSolution sol;
    try {
        sol = min_weight_coset_csr(bl.base_csr, b, weights, opt_.coset);
    } catch (const CosetInfeasible&) {
        throw std::runtime_error("RG decoder: infeasible base problem");
    }
    ++result.stats.solves;
    if (sol.optimal) ++result.stats.exact_solves;
    Chain corr(2);
    for (std::uint32_t f = 0; f < sol.x.size(); ++f)
        if (sol.x[f]) corr.support.push_back(f);
    if (opt_.trace && opt_.trace_out)
        *opt_.trace_out << "base: syndrome " << cur.weight() << " edges, correction "
                        << corr.weight() << " faces (objective " << sol.objective << ")\n";

    for (int li = base - 1; li >= 0; --li) {
        corr = levels_[li].maps->map_faces_up(corr);
        corr ^= partials[li];
    }

    if (!(top.boundary(corr) == syndrome))
        throw std::logic_error("RG decoder: correction does not bound the syndrome");
    result.correction = std::move(corr);
    return result;
}

}  // namespace hsc
