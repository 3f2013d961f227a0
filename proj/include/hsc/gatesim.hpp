#pragma once

#include <vector>

#include "hsc/noise.hpp"
#include "hsc/schedule.hpp"

namespace hsc {

/// Where a noise channel fires inside one extraction round. The simulator
/// visits channel sites in a fixed, documented order, so a site index
/// identifies the location exactly; this drives both sampling and the
/// deterministic single-fault enumeration used in tests.
enum class NoiseSite : std::uint8_t {
    prep_flip,    // ancilla preparation flip (phase flip on |+>, bit flip on |0>)
    idle_depol,   // single-qubit depolarizing on an idle qubit
    cnot_depol,   // two-qubit depolarizing after a CNOT
    meas_flip,    // classical flip of an ancilla readout
};

/// Supplies channel outcomes for each visited site. prep/meas sites expect
/// 0/1, idle sites 0..3 (I,X,Y,Z), CNOT sites 0..15 (4*control+target pauli).
class NoiseModel {
public:
    virtual ~NoiseModel() = default;
    virtual int sample(NoiseSite site) = 0;
};

/// Independent depolarizing noise of strength p everywhere (the gate-based
/// error model).
class DepolarizingNoise final : public NoiseModel {
public:
    DepolarizingNoise(double p, CounterRng& rng) : p_(p), rng_(&rng) {}
    int sample(NoiseSite site) override;

private:
    double p_;
    CounterRng* rng_;
};

/// Counts channel sites without injecting anything (first pass of the
/// single-fault oracle).
class SiteCounter final : public NoiseModel {
public:
    int sample(NoiseSite site) override {
        sites.push_back(site);
        return 0;
    }
    std::vector<NoiseSite> sites;
};

/// Fires one prescribed fault at one site, identity elsewhere.
class SingleFault final : public NoiseModel {
public:
    SingleFault(std::size_t site_index, int value) : site_(site_index), value_(value) {}
    int sample(NoiseSite) override {
        return index_++ == site_ ? value_ : 0;
    }

private:
    std::size_t site_ = 0;
    int value_ = 0;
    std::size_t index_ = 0;
};

/// Per-qubit counters of X-component faults applied directly to data qubits
/// (propagation excluded), for the effective-rate check.
struct GateStats {
    std::vector<std::uint64_t> data_x_injections;
    std::uint64_t noisy_rounds = 0;
};

struct GateSimResult {
    MeasurementRecord record;     // X-stabilizer (edge) outcomes, Z sector
    Chain final_z_error;          // accumulated Z error on the data qubits
};

/// Runs T-1 noisy extraction rounds followed by one noiseless readout.
/// Gates, idles and measurements consume noise from `noise` in a fixed order.
GateSimResult simulate_gate_based(const CssCode& code, const Schedule& schedule, int rounds,
                                  NoiseModel& noise, GateStats* stats = nullptr);

/// Convenience wrapper with depolarizing noise of strength p.
GateSimResult simulate_gate_based(const CssCode& code, const Schedule& schedule, double p,
                                  int rounds, CounterRng& rng, GateStats* stats = nullptr);

}  // namespace hsc
