#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hsc/coset.hpp"
#include "hsc/gatesim.hpp"
#include "hsc/spacetime.hpp"

using namespace hsc;

namespace {

// minimal weight of (z + any stabilizer product), the residual error size
// modulo the cube group
std::int64_t weight_mod_stabilizers(const CssCode& code, const Chain& z) {
    const auto& lat = code.lattice();
    BinarySystem sys;
    const std::size_t nf = code.num_qubits(), nc = code.num_z_checks();
    sys.num_vars = nf + nc;
    sys.rows.resize(nf);
    sys.b.assign(nf, 0);
    for (std::uint32_t f = 0; f < nf; ++f) sys.rows[f].push_back(f);
    for (std::uint32_t c = 0; c < nc; ++c)
        for (std::uint32_t f : code.z_check(c)) sys.rows[f].push_back(static_cast<std::uint32_t>(nf + c));
    for (std::uint32_t f : z.support) sys.b[f] = 1;
    sys.weights.assign(sys.num_vars, 0);
    for (std::size_t f = 0; f < nf; ++f) sys.weights[f] = 1;
    CosetOptions opt;
    opt.node_budget = 1u << 22;
    auto sol = min_weight_coset(sys, opt);
    REQUIRE(sol.optimal);
    (void)lat;
    return sol.objective;
}

}  // namespace

TEST_CASE("noiseless circuit gives a trivial record and no residual error") {
    auto code = build_code(2, 2, std::vector<int>{2, 2, 2, 2});
    auto sched = build_gate_schedule(code);
    CounterRng rng(4, 4);
    auto res = simulate_gate_based(code, sched, 0.0, 3, rng);
    CHECK(res.final_z_error.empty());
    CHECK(res.record.rounds == 3);
    for (const auto& row : res.record.outcomes) CHECK_FALSE(row.any());
}

TEST_CASE("identical seeds give identical runs") {
    auto code = build_code(2, 2, std::vector<int>{2, 2, 2, 2});
    auto sched = build_gate_schedule(code);
    CounterRng a(21, 9), b(21, 9);
    auto r1 = simulate_gate_based(code, sched, 0.01, 4, a);
    auto r2 = simulate_gate_based(code, sched, 0.01, 4, b);
    CHECK(r1.final_z_error == r2.final_z_error);
    for (int t = 0; t < 4; ++t) CHECK(r1.record.outcomes[t] == r2.record.outcomes[t]);
}

TEST_CASE("gate-based records always produce closed space-time syndromes") {
    auto code = build_code(2, 2, std::vector<int>{2, 2, 2, 2});
    auto sched = build_gate_schedule(code);
    SpaceTimeFrame frame(code, 4, true);
    CounterRng rng(77, 0);
    for (int trial = 0; trial < 25; ++trial) {
        auto res = simulate_gate_based(code, sched, 0.02, 4, rng);
        Chain syndrome = frame.syndrome_from(res.record);
        CHECK(frame.st_lattice().boundary(syndrome).empty());
        // the final record row is the true syndrome of the residual error
        Chain sigma = code.lattice().boundary(res.final_z_error);
        for (std::uint32_t e = 0; e < code.num_x_checks(); ++e)
            CHECK(res.record.outcomes[3].get(e) == sigma.contains(e));
    }
}

TEST_CASE("single faults stay consistent and bounded (subsampled oracle)") {
    auto code = build_code(2, 2, std::vector<int>{2, 2, 2, 2});
    auto sched = build_gate_schedule(code);
    const int rounds = 3;

    SiteCounter counter;
    auto clean = simulate_gate_based(code, sched, rounds, counter);
    REQUIRE(clean.final_z_error.empty());
    const std::size_t num_sites = counter.sites.size();
    REQUIRE(num_sites > 1000);

    SpaceTimeFrame frame(code, rounds, true);
    std::size_t checked = 0;
    for (std::size_t site = 0; site < num_sites; site += 23) {
        int max_value = 1;
        if (counter.sites[site] == NoiseSite::idle_depol) max_value = 3;
        if (counter.sites[site] == NoiseSite::cnot_depol) max_value = 15;
        for (int value = 1; value <= max_value; ++value) {
            SingleFault fault(site, value);
            auto res = simulate_gate_based(code, sched, rounds, fault);
            Chain syndrome = frame.syndrome_from(res.record);
            CAPTURE(site);
            CAPTURE(value);
            CHECK(frame.st_lattice().boundary(syndrome).empty());
            CHECK(weight_mod_stabilizers(code, res.final_z_error) <= 3);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("direct X injections on full-degree qubits appear at rate 5.6p (smoke)") {
    auto code = build_code(2, 2, std::vector<int>{3, 3, 3, 3});
    auto sched = build_gate_schedule(code);

    std::vector<int> cnots(code.num_qubits(), 0);
    for (int r = 0; r < 8; ++r)
        for (const CnotGate& g : sched.rounds[r]) ++cnots[g.face];
    std::vector<std::uint32_t> full_degree;
    for (std::uint32_t f = 0; f < code.num_qubits(); ++f)
        if (cnots[f] == 8) full_degree.push_back(f);
    REQUIRE(full_degree.size() > 20);

    const double p = 0.004;
    const int rounds = 3;  // two noisy rounds
    std::uint64_t hits = 0, samples = 0;
    CounterRng rng(90, 1);
    GateStats stats;
    for (int trial = 0; trial < 600; ++trial) {
        simulate_gate_based(code, sched, p, rounds, rng, &stats);
        for (std::uint32_t f : full_degree) hits += stats.data_x_injections[f];
        samples += stats.noisy_rounds * full_degree.size();
    }
    const double expect = 5.6 * p * static_cast<double>(samples);
    const double sigma = std::sqrt(5.6 * p * static_cast<double>(samples));
    CHECK(std::abs(static_cast<double>(hits) - expect) <= 5.0 * sigma);
}
