#include "hsc/spacetime.hpp"

#include <stdexcept>

namespace hsc {

SpaceTimeFrame::SpaceTimeFrame(const CssCode& code, int rounds, bool final_round_perfect)
    : spatial_(code.lattice_ptr()), rounds_(rounds), final_perfect_(final_round_perfect) {
    if (rounds < 1) throw std::invalid_argument("space-time frame: need at least one round");
    const CodeLattice& lat = *spatial_;
    const int d2 = lat.qubit_dim();
    const int td = lat.dims() + 1;

    std::vector<DirSpec> specs = lat.dir_specs();
    if (final_round_perfect) specs.push_back({rounds - 1, false, false});
    else specs.push_back({rounds, false, true});
    st_lattice_ = std::make_shared<CodeLattice>(CodeLattice::build_with_specs(specs, d2));

    const CodeLattice& st = *st_lattice_;
    checks_.resize(st.num_cells(d2 - 1));
    for (std::uint32_t i = 0; i < checks_.size(); ++i) {
        Cell cell = st.cell_at(d2 - 1, i);
        CheckMeaning m;
        m.round = cell.base[td - 1];
        Cell spatial_cell = cell;
        spatial_cell.base[td - 1] = 0;
        if (cell.spans(td)) {
            m.time_oriented = true;
            spatial_cell.dirs = static_cast<DirMask>(cell.dirs & ~dir_bit(td));
            m.spatial = static_cast<std::uint32_t>(lat.index_of(d2 - 2, spatial_cell));
        } else {
            m.time_oriented = false;
            m.spatial = static_cast<std::uint32_t>(lat.index_of(d2 - 1, spatial_cell));
        }
        checks_[i] = m;
    }

    faces_.resize(st.num_cells(d2));
    for (std::uint32_t i = 0; i < faces_.size(); ++i) {
        Cell cell = st.cell_at(d2, i);
        FaceMeaning m;
        m.round = cell.base[td - 1];
        Cell spatial_cell = cell;
        spatial_cell.base[td - 1] = 0;
        if (cell.spans(td)) {
            m.measurement = true;
            spatial_cell.dirs = static_cast<DirMask>(cell.dirs & ~dir_bit(td));
            m.spatial = static_cast<std::uint32_t>(lat.index_of(d2 - 1, spatial_cell));
        } else {
            m.measurement = false;
            m.spatial = static_cast<std::uint32_t>(lat.index_of(d2, spatial_cell));
        }
        faces_[i] = m;
    }
}

Chain SpaceTimeFrame::syndrome_from(const MeasurementRecord& record) const {
    if (record.rounds != rounds_ || static_cast<int>(record.outcomes.size()) != rounds_)
        throw std::invalid_argument("space-time frame: record length mismatch");
    const CodeLattice& lat = *spatial_;
    const int d2 = lat.qubit_dim();
    Chain syndrome(d2 - 1);
    for (std::uint32_t i = 0; i < checks_.size(); ++i) {
        const CheckMeaning& m = checks_[i];
        int bit;
        if (m.time_oriented) {
            // violation of the local product dependency of the checks around
            // a (d2-2)-cell: parity of all incident outcomes at this round
            bit = 0;
            for (std::uint32_t e : lat.coboundary_of(d2 - 2, m.spatial))
                bit ^= record.outcomes[m.round].get(e) ? 1 : 0;
        } else {
            bit = record.outcomes[m.round].get(m.spatial) ? 1 : 0;
            if (m.round > 0) bit ^= record.outcomes[m.round - 1].get(m.spatial) ? 1 : 0;
        }
        if (bit) syndrome.support.push_back(i);
    }
    return syndrome;
}

Chain SpaceTimeFrame::project(const Chain& st_chain) const {
    const int d2 = spatial_->qubit_dim();
    Chain out(d2);
    for (std::uint32_t i : st_chain.support) {
        const FaceMeaning& m = faces_[i];
        if (!m.measurement) out.support.push_back(m.spatial);
    }
    out.normalize();
    return out;
}

SpaceTimeProblem build_space_time_problem(const CssCode& code, const MeasurementRecord& record,
                                          bool final_round_perfect) {
    auto frame = std::make_shared<SpaceTimeFrame>(code, record.rounds, final_round_perfect);
    SpaceTimeProblem problem;
    problem.syndrome = frame->syndrome_from(record);
    problem.frame = std::move(frame);
    return problem;
}

Chain project_correction(const SpaceTimeProblem& problem, const Chain& st_correction) {
    if (!(problem.frame->st_lattice().boundary(st_correction) == problem.syndrome))
        throw std::invalid_argument(
            "project_correction: correction boundary does not match the syndrome");
    return problem.frame->project(st_correction);
}

}  // namespace hsc
