#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "hsc/noise.hpp"

using namespace hsc;

TEST_CASE("noiseless sampling gives an all-zero record") {
    auto code = build_code(2, 2, std::vector<int>{2, 2, 2, 2});
    CounterRng rng(1, 0);
    auto s = sample_phenomenological(code, 0.0, 0.0, 4, rng);
    CHECK(s.record.rounds == 4);
    for (const auto& row : s.record.outcomes) CHECK_FALSE(row.any());
    for (const auto& e : s.history.qubit_errors) CHECK(e.empty());
}

TEST_CASE("p=1 with one round flips every face deterministically") {
    auto code = build_code(2, 2, std::vector<int>{2, 2, 2, 2});
    const auto& lat = code.lattice();
    CounterRng rng(1, 1);
    auto s = sample_phenomenological(code, 1.0, 0.0, 1, rng);
    Chain all(2);
    for (std::uint32_t f = 0; f < code.num_qubits(); ++f) all.support.push_back(f);
    CHECK(s.history.qubit_errors[0] == all);
    Chain sigma = lat.boundary(all);
    for (std::uint32_t e = 0; e < code.num_x_checks(); ++e)
        CHECK(s.record.outcomes[0].get(e) == sigma.contains(e));
}

TEST_CASE("a single face error lights exactly its surviving boundary") {
    auto code = build_code(2, 2, std::vector<int>{3, 3, 3, 3});
    const auto& lat = code.lattice();
    // find a seed whose single-round sample has exactly one face error
    for (std::uint64_t stream = 0;; ++stream) {
        CounterRng rng(77, stream);
        auto s = sample_phenomenological(code, 0.002, 0.0, 1, rng);
        if (s.history.qubit_errors[0].weight() != 1) continue;
        Chain sigma = lat.boundary(s.history.qubit_errors[0]);
        for (std::uint32_t e = 0; e < code.num_x_checks(); ++e)
            CHECK(s.record.outcomes[0].get(e) == sigma.contains(e));
        break;
    }
}

TEST_CASE("outcomes decompose as syndrome plus measurement error") {
    auto code = build_code(2, 2, std::vector<int>{3, 3, 3, 3});
    const auto& lat = code.lattice();
    CounterRng rng(5, 3);
    auto s = sample_phenomenological(code, 0.05, 0.05, 5, rng);
    Chain cumulative(2);
    for (int t = 0; t < 5; ++t) {
        cumulative ^= s.history.qubit_errors[t];
        Chain sigma = lat.boundary(cumulative);
        BitVec expect(code.num_x_checks());
        for (std::uint32_t e : sigma.support) expect.set(e, true);
        for (std::uint32_t e : s.history.meas_errors[t]) expect.flip(e);
        CHECK(s.record.outcomes[t] == expect);
    }
    // final round is perfect
    CHECK(s.history.meas_errors[4].empty());
}

TEST_CASE("identical seed and config reproduce the record bit for bit") {
    auto code = build_code(2, 2, std::vector<int>{3, 3, 3, 3});
    CounterRng a(123, 7), b(123, 7);
    auto s1 = sample_phenomenological(code, 0.03, 0.03, 4, a);
    auto s2 = sample_phenomenological(code, 0.03, 0.03, 4, b);
    for (int t = 0; t < 4; ++t) CHECK(s1.record.outcomes[t] == s2.record.outcomes[t]);
}

TEST_CASE("invalid probabilities are rejected") {
    auto code = build_code(2, 2, std::vector<int>{2, 2, 2, 2});
    CounterRng rng(1, 0);
    CHECK_THROWS(sample_phenomenological(code, -0.1, 0.0, 1, rng));
    CHECK_THROWS(sample_phenomenological(code, 0.0, 1.5, 1, rng));
    CHECK_THROWS(sample_phenomenological(code, 0.1, 0.1, 0, rng));
}

TEST_CASE("record files round trip") {
    auto code = build_code(2, 2, std::vector<int>{2, 3, 2, 3});
    CounterRng rng(9, 2);
    auto s = sample_phenomenological(code, 0.04, 0.04, 3, rng);
    std::stringstream buf;
    write_record(buf, code, s.record);
    auto loaded = read_record(buf);
    CHECK(loaded.d1 == 2);
    CHECK(loaded.d2 == 2);
    CHECK(loaded.lengths == std::vector<int>{2, 3, 2, 3});
    CHECK(loaded.record.rounds == 3);
    CHECK(loaded.record.final_round_perfect);
    for (int t = 0; t < 3; ++t) CHECK(loaded.record.outcomes[t] == s.record.outcomes[t]);

    std::stringstream bogus("not a record");
    CHECK_THROWS(read_record(bogus));
}
