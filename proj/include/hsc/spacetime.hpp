#pragma once

#include <memory>

#include "hsc/code.hpp"
#include "hsc/noise.hpp"

namespace hsc {

/// Precomputed structure of the (D+1)-dimensional space-time complex for a
/// code measured over a fixed number of rounds. Time is appended as direction
/// D+1: smooth on both ends when the final round is perfect, rough at the far
/// end otherwise. Reusable across Monte Carlo trials; immutable.
class SpaceTimeFrame {
public:
    SpaceTimeFrame(const CssCode& code, int rounds, bool final_round_perfect);

    const CodeLattice& st_lattice() const { return *st_lattice_; }
    std::shared_ptr<const CodeLattice> st_lattice_ptr() const { return st_lattice_; }
    const CodeLattice& spatial_lattice() const { return *spatial_; }
    int rounds() const { return rounds_; }
    int time_dir() const { return spatial_->dims() + 1; }
    bool final_round_perfect() const { return final_perfect_; }

    /// Meaning of a space-time qubit cell: a data qubit at a round, or a
    /// stabilizer measurement (time-oriented cell) at a round.
    struct FaceMeaning {
        bool measurement = false;
        std::uint32_t spatial = 0;  // d2-cell (qubit) or (d2-1)-cell (check)
        int round = 0;
    };
    const FaceMeaning& face_meaning(std::uint32_t st_face) const { return faces_[st_face]; }

    /// Space-time syndrome from faulty outcomes: time slices carry outcome
    /// differences, time-oriented cells carry the local check-dependency
    /// parity.
    Chain syndrome_from(const MeasurementRecord& record) const;

    /// Per-qubit mod-2 sum of the space-oriented faces of a space-time chain;
    /// measurement-error faces contribute nothing.
    Chain project(const Chain& st_chain) const;

private:
    struct CheckMeaning {
        bool time_oriented = false;
        std::uint32_t spatial = 0;  // (d2-1)-cell, or (d2-2)-cell when time oriented
        int round = 0;
    };

    std::shared_ptr<const CodeLattice> spatial_;
    std::shared_ptr<const CodeLattice> st_lattice_;
    std::vector<CheckMeaning> checks_;
    std::vector<FaceMeaning> faces_;
    int rounds_ = 0;
    bool final_perfect_ = true;
};

struct SpaceTimeProblem {
    std::shared_ptr<const SpaceTimeFrame> frame;
    Chain syndrome;
};

/// Lifts a measurement record into the minimal-surface decoding problem.
SpaceTimeProblem build_space_time_problem(const CssCode& code, const MeasurementRecord& record,
                                          bool final_round_perfect = true);

/// Applies a space-time correction to the final state. The correction must
/// bound exactly the problem syndrome.
Chain project_correction(const SpaceTimeProblem& problem, const Chain& st_correction);

}  // namespace hsc
