#pragma once

#include <iosfwd>
#include <vector>

#include "hsc/code.hpp"
#include "hsc/gf2.hpp"
#include "hsc/rng.hpp"

namespace hsc {

/// Ground-truth error history of a phenomenological run: qubit error chains
/// per round (errors landing between measurement t-1 and t) and measurement
/// error sets per round.
struct ErrorHistory {
    std::vector<Chain> qubit_errors;
    std::vector<std::vector<std::uint32_t>> meas_errors;
    int rounds = 0;

    /// Accumulated qubit error after the last round.
    Chain total_error(int qubit_dim) const {
        Chain total(qubit_dim);
        for (const auto& e : qubit_errors) total ^= e;
        return total;
    }
};

/// Faulty X-check outcomes tau_e(t), one bit row per measurement round.
struct MeasurementRecord {
    std::vector<BitVec> outcomes;
    int rounds = 0;
    bool final_round_perfect = true;
};

struct PhenomenologicalSample {
    ErrorHistory history;
    MeasurementRecord record;
};

/// Independent Z flips with probability p per qubit per round; outcome bit
/// flips with probability q except in the final round when it is perfect.
PhenomenologicalSample sample_phenomenological(const CssCode& code, double p, double q, int rounds,
                                               CounterRng& rng, bool final_round_perfect = true);

/// Binary record file (documented in the README): header with the code shape
/// followed by the row-major packed outcome bits.
void write_record(std::ostream& os, const CssCode& code, const MeasurementRecord& record);

struct LoadedRecord {
    int d1 = 0, d2 = 0;
    std::vector<int> lengths;
    MeasurementRecord record;
};
LoadedRecord read_record(std::istream& is);

}  // namespace hsc
