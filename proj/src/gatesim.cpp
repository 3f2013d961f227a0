#include "hsc/gatesim.hpp"

#include <stdexcept>

namespace hsc {

int DepolarizingNoise::sample(NoiseSite site) {
    switch (site) {
        case NoiseSite::prep_flip:
        case NoiseSite::meas_flip:
            return rng_->bernoulli(p_) ? 1 : 0;
        case NoiseSite::idle_depol:
            return rng_->bernoulli(p_) ? 1 + static_cast<int>(rng_->next_below(3)) : 0;
        case NoiseSite::cnot_depol:
            return rng_->bernoulli(p_) ? 1 + static_cast<int>(rng_->next_below(15)) : 0;
    }
    return 0;
}

namespace {

struct PauliFrame {
    std::vector<std::uint8_t> x, z;
    explicit PauliFrame(std::size_t n) : x(n, 0), z(n, 0) {}
    void clear(std::size_t i) { x[i] = z[i] = 0; }
    void apply(std::size_t i, int pauli) {
        if (pauli == 1 || pauli == 2) x[i] ^= 1;
        if (pauli == 2 || pauli == 3) z[i] ^= 1;
    }
};

}  // namespace

GateSimResult simulate_gate_based(const CssCode& code, const Schedule& schedule, int rounds,
                                  NoiseModel& noise, GateStats* stats) {
    if (rounds < 1) throw std::invalid_argument("simulate_gate_based: need at least one round");
    const auto& lat = code.lattice();
    const std::size_t nf = code.num_qubits();
    const std::size_t ne = code.num_x_checks();
    const std::size_t nc = code.num_z_checks();

    PauliFrame data(nf), edge_anc(ne), cube_anc(nc);
    if (stats) {
        stats->data_x_injections.assign(nf, 0);
        stats->noisy_rounds = static_cast<std::uint64_t>(rounds - 1);
    }

    auto inject_data = [&](std::size_t f, int pauli) {
        data.apply(f, pauli);
        if (stats && (pauli == 1 || pauli == 2)) ++stats->data_x_injections[f];
    };

    MeasurementRecord record;
    record.rounds = rounds;
    record.final_round_perfect = true;

    std::vector<std::uint8_t> touched_face(nf), touched_edge(ne), touched_cube(nc);

    for (int t = 0; t < rounds - 1; ++t) {
        // (1) ancilla preparation: edges in |+>, cubes in |0>, data idles
        for (std::size_t e = 0; e < ne; ++e) {
            edge_anc.clear(e);
            if (noise.sample(NoiseSite::prep_flip)) edge_anc.z[e] ^= 1;
        }
        for (std::size_t c = 0; c < nc; ++c) {
            cube_anc.clear(c);
            if (noise.sample(NoiseSite::prep_flip)) cube_anc.x[c] ^= 1;
        }
        for (std::size_t f = 0; f < nf; ++f) inject_data(f, noise.sample(NoiseSite::idle_depol));

        // (2) eight CNOT rounds
        for (int r = 0; r < 8; ++r) {
            std::fill(touched_face.begin(), touched_face.end(), 0);
            std::fill(touched_edge.begin(), touched_edge.end(), 0);
            std::fill(touched_cube.begin(), touched_cube.end(), 0);
            for (const CnotGate& g : schedule.rounds[r]) {
                touched_face[g.face] = 1;
                if (g.ancilla_is_edge) {
                    touched_edge[g.ancilla] = 1;
                    // control = edge ancilla, target = data
                    data.x[g.face] ^= edge_anc.x[g.ancilla];
                    edge_anc.z[g.ancilla] ^= data.z[g.face];
                    int pair = noise.sample(NoiseSite::cnot_depol);
                    if (pair) {
                        edge_anc.apply(g.ancilla, pair / 4);
                        inject_data(g.face, pair % 4);
                    }
                } else {
                    touched_cube[g.ancilla] = 1;
                    // control = data, target = cube ancilla
                    cube_anc.x[g.ancilla] ^= data.x[g.face];
                    data.z[g.face] ^= cube_anc.z[g.ancilla];
                    int pair = noise.sample(NoiseSite::cnot_depol);
                    if (pair) {
                        inject_data(g.face, pair / 4);
                        cube_anc.apply(g.ancilla, pair % 4);
                    }
                }
            }
            for (std::size_t f = 0; f < nf; ++f)
                if (!touched_face[f]) inject_data(f, noise.sample(NoiseSite::idle_depol));
            for (std::size_t e = 0; e < ne; ++e)
                if (!touched_edge[e]) edge_anc.apply(e, noise.sample(NoiseSite::idle_depol));
            for (std::size_t c = 0; c < nc; ++c)
                if (!touched_cube[c]) cube_anc.apply(c, noise.sample(NoiseSite::idle_depol));
        }

        // (3) readout: edges in the X basis (Z flips show), cubes in Z
        BitVec tau(ne);
        for (std::size_t e = 0; e < ne; ++e) {
            int bit = edge_anc.z[e] ^ noise.sample(NoiseSite::meas_flip);
            if (bit) tau.set(e, true);
        }
        for (std::size_t c = 0; c < nc; ++c)
            (void)(cube_anc.x[c] ^ noise.sample(NoiseSite::meas_flip));  // X sector discarded
        for (std::size_t f = 0; f < nf; ++f) inject_data(f, noise.sample(NoiseSite::idle_depol));
        record.outcomes.push_back(std::move(tau));
    }

    // final noiseless readout straight from the data frame
    BitVec tau(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        int parity = 0;
        for (std::uint32_t f : code.x_check(static_cast<std::uint32_t>(e))) parity ^= data.z[f];
        if (parity) tau.set(e, true);
    }
    record.outcomes.push_back(std::move(tau));

    GateSimResult out;
    out.record = std::move(record);
    out.final_z_error = Chain(lat.qubit_dim());
    for (std::size_t f = 0; f < nf; ++f)
        if (data.z[f]) out.final_z_error.support.push_back(static_cast<std::uint32_t>(f));
    return out;
}

GateSimResult simulate_gate_based(const CssCode& code, const Schedule& schedule, double p,
                                  int rounds, CounterRng& rng, GateStats* stats) {
    if (p < 0 || p > 1) throw std::invalid_argument("simulate_gate_based: invalid probability");
    DepolarizingNoise noise(p, rng);
    return simulate_gate_based(code, schedule, rounds, noise, stats);
}

}  // namespace hsc
