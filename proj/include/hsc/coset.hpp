#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsc/gf2.hpp"

namespace hsc {

/// Sparse GF(2) linear system A x = b with an integer weight per variable.
struct BinarySystem {
    std::size_t num_vars = 0;
    std::vector<std::vector<std::uint32_t>> rows;  // variable support per constraint
    std::vector<std::uint8_t> b;
    std::vector<std::int32_t> weights;

    BitMatrix to_matrix() const;
};

struct CosetSolution {
    std::vector<std::uint8_t> x;
    std::int64_t objective = 0;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
};

struct CosetOptions {
    /// Systems with at most this many free variables are always solved to
    /// proven optimality (the node budget is ignored).
    int exact_threshold = 24;
    std::uint64_t node_budget = 1'000'000;
    /// Path of an external solver executable; empty runs the built-in search.
    /// The experiment layer fills this from the HSC_COSET_SOLVER environment
    /// variable when enabled in the config.
    std::string external_solver;
};

struct CosetInfeasible : std::runtime_error {
    explicit CosetInfeasible(std::int64_t row)
        : std::runtime_error("minWeightCoset: infeasible system, first inconsistent row " +
                             std::to_string(row)),
          row_index(row) {}
    std::int64_t row_index;
};

/// Minimizes sum_i w_i x_i over solutions of A x = b.
///
/// Always returns a feasible assignment. `optimal` is set when the search ran
/// to completion; otherwise the best incumbent found within the node budget is
/// returned. Throws CosetInfeasible when no solution exists.
CosetSolution min_weight_coset(const BinarySystem& system, const CosetOptions& options = {});

/// Precompiled constraint structure for repeated solves over the same system
/// shape (the RG box inner loop). Immutable and shareable across threads.
struct CosetCsr {
    std::size_t num_vars = 0;
    std::size_t num_rows = 0;
    std::vector<std::uint32_t> row_off, row_items;
    std::vector<std::uint32_t> col_off, col_items;

    static CosetCsr compile(std::size_t num_vars,
                            const std::vector<std::vector<std::uint32_t>>& rows);
};

CosetSolution min_weight_coset_csr(const CosetCsr& csr, const std::vector<std::uint8_t>& b,
                                   const std::vector<std::int32_t>& weights,
                                   const CosetOptions& options = {});

/// Exchange-file writer/reader for the external-solver adapter (documented in
/// the README). Exposed for tests.
void write_coset_instance(const BinarySystem& system, const std::string& path);
CosetSolution read_coset_response(const BinarySystem& system, const std::string& path);

}  // namespace hsc
