#pragma once

#include <array>
#include <vector>

#include "hsc/code.hpp"

namespace hsc {

/// One CNOT between a data qubit (face) and a stabilizer ancilla. Edge
/// ancillas are always the control, cube ancillas always the target.
struct CnotGate {
    std::uint32_t face = 0;
    std::uint32_t ancilla = 0;
    bool ancilla_is_edge = true;
};

/// Eight parallel CNOT rounds, one per ancilla-relative direction
/// (-1)^n a_k, ordered [-a1,-a2,-a3,-a4,+a4,+a3,+a2,+a1].
struct Schedule {
    struct Label {
        int axis = 0;    // k
        int negative = 0;  // n
    };
    std::array<std::vector<CnotGate>, 8> rounds;
    std::array<Label, 8> labels;

    /// Round position (0-based) of the CNOT between a face and its edge or
    /// cube ancilla, or -1 when the pair never meets.
    int round_of(std::uint32_t face, std::uint32_t ancilla, bool ancilla_is_edge) const;
};

/// Builds the deterministic schedule for the 4D self-dual family.
Schedule build_gate_schedule(const CssCode& code);

/// True iff for every overlapping X/Z stabilizer pair with shared faces
/// f1, f2 the edge-ancilla CNOTs either both precede or both follow the
/// cube-ancilla CNOTs.
bool verify_schedule(const CssCode& code, const Schedule& schedule);

}  // namespace hsc
