#include "hsc/code.hpp"

#include "hsc/gf2.hpp"

namespace hsc {

namespace {

// Product chain of the explicit logical representatives: qubit cells spanning
// exactly the rough directions, with the base ranging over either the smooth
// coordinates (logical X) or the rough coordinates (logical Z).
Chain logical_chain(const CodeLattice& lat, bool range_over_smooth) {
    const int d2 = lat.qubit_dim();
    DirMask rough = 0;
    std::vector<int> range_dirs;
    for (int i = 1; i <= lat.dims(); ++i) {
        if (lat.is_rough(i)) rough |= dir_bit(i);
        if (lat.is_rough(i) != range_over_smooth) range_dirs.push_back(i);
    }
    if (__builtin_popcount(rough) != d2)
        throw LatticeError("logical construction expects exactly d2 rough directions");

    Chain out(d2);
    Cell cell;
    cell.dirs = rough;
    cell.base = zero_coord();
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == range_dirs.size()) {
            std::int64_t idx = lat.index_of(d2, cell);
            if (idx >= 0) out.support.push_back(static_cast<std::uint32_t>(idx));
            return;
        }
        int dir = range_dirs[level];
        for (int v = 0; v < lat.length_of(dir); ++v) {
            cell.base[dir - 1] = static_cast<std::int16_t>(v);
            self(self, level + 1);
        }
        cell.base[dir - 1] = 0;
    };
    rec(rec, 0);
    out.normalize();
    return out;
}

}  // namespace

CssCode::CssCode(std::shared_ptr<const CodeLattice> lattice) : lattice_(std::move(lattice)) {
    logical_x_ = logical_chain(*lattice_, /*range_over_smooth=*/true);
    logical_z_ = logical_chain(*lattice_, /*range_over_smooth=*/false);
}

bool CssCode::is_logical_z_failure(const Chain& residual) const {
    if (residual.dim != lattice_->qubit_dim())
        throw LatticeError("is_logical_z_failure: chain must live on qubit cells");
    if (!lattice_->boundary(residual).empty())
        throw LatticeError("is_logical_z_failure: residual has nonempty boundary");
    return overlap_parity(residual, logical_x_) == 1;
}

CodeParams CssCode::params() const {
    const int d2 = lattice_->qubit_dim();
    const std::size_t n = num_qubits();

    BitMatrix hx(num_x_checks(), n);
    for (std::uint32_t e = 0; e < num_x_checks(); ++e)
        for (std::uint32_t f : x_check(e)) hx.set(e, f, true);
    BitMatrix hz(num_z_checks(), n);
    for (std::uint32_t c = 0; c < num_z_checks(); ++c)
        for (std::uint32_t f : z_check(c)) hz.set(c, f, true);

    CodeParams p;
    p.n = n;
    p.k = n - gf2_rank(hx) - gf2_rank(hz);
    p.d = std::min(logical_x_.weight(), logical_z_.weight());
    (void)d2;
    return p;
}

CssCode build_code(int d1, int d2, std::span<const int> lengths) {
    auto lat = std::make_shared<CodeLattice>(CodeLattice::build(d1, d2, lengths));
    return CssCode(std::move(lat));
}

}  // namespace hsc
