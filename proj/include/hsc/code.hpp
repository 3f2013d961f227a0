#pragma once

#include <memory>

#include "hsc/chain.hpp"
#include "hsc/lattice.hpp"

namespace hsc {

struct CodeParams {
    std::size_t n = 0;  // physical qubits
    std::size_t k = 0;  // logical qubits, from GF(2) ranks
    std::size_t d = 0;  // distance of the constructed logical pair
};

/// CSS code carved out of a CodeLattice: qubits on the qubit_dim cells,
/// X checks on the coboundaries of (qubit_dim-1)-cells, Z checks on the
/// boundaries of (qubit_dim+1)-cells.
class CssCode {
public:
    explicit CssCode(std::shared_ptr<const CodeLattice> lattice);

    const CodeLattice& lattice() const { return *lattice_; }
    std::shared_ptr<const CodeLattice> lattice_ptr() const { return lattice_; }

    std::size_t num_qubits() const { return lattice_->num_cells(lattice_->qubit_dim()); }
    std::size_t num_x_checks() const { return lattice_->num_cells(lattice_->qubit_dim() - 1); }
    std::size_t num_z_checks() const { return lattice_->num_cells(lattice_->qubit_dim() + 1); }

    /// Qubit support of the X check attached to a (qubit_dim-1)-cell.
    std::span<const std::uint32_t> x_check(std::uint32_t index) const {
        return lattice_->coboundary_of(lattice_->qubit_dim() - 1, index);
    }
    /// Qubit support of the Z check attached to a (qubit_dim+1)-cell.
    std::span<const std::uint32_t> z_check(std::uint32_t index) const {
        return lattice_->boundary_of(lattice_->qubit_dim() + 1, index);
    }

    const Chain& logical_x() const { return logical_x_; }
    const Chain& logical_z() const { return logical_z_; }

    /// True iff a chain that is back in the code space anti-commutes with the
    /// logical X, i.e. the residual acts as the logical Z. Rejects chains with
    /// nonempty boundary.
    bool is_logical_z_failure(const Chain& residual) const;

    CodeParams params() const;

private:
    std::shared_ptr<const CodeLattice> lattice_;
    Chain logical_x_;
    Chain logical_z_;
};

CssCode build_code(int d1, int d2, std::span<const int> lengths);

}  // namespace hsc
