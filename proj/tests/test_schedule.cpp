#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "hsc/schedule.hpp"

using namespace hsc;

namespace {

Cell make_cell(DirMask dirs, std::initializer_list<int> base) {
    Cell c;
    c.dirs = dirs;
    c.base = zero_coord();
    int i = 0;
    for (int v : base) c.base[i++] = static_cast<std::int16_t>(v);
    return c;
}

}  // namespace

TEST_CASE("CNOT orderings reproduce the four stabilizer-overlap patterns") {
    auto code = build_code(2, 2, std::vector<int>{3, 3, 3, 3});
    const auto& lat = code.lattice();
    auto sched = build_gate_schedule(code);

    // cube spanning {1,2,3} at an interior base; edge direction i=3, j=1, k=2
    CoordArray w{};
    w.fill(0);
    w[2] = 1;  // keep everything inside the lattice
    w[3] = 1;

    // expected relative orderings of ((e,f1),(e,f2),(c,f1),(c,f2)) per (s_j,s_k)
    const std::map<std::pair<int, int>, std::array<int, 4>> expected{
        {{0, 0}, {1, 2, 3, 4}},
        {{0, 1}, {1, 3, 2, 4}},
        {{1, 0}, {4, 2, 3, 1}},
        {{1, 1}, {4, 3, 2, 1}},
    };

    Cell cube = make_cell(dir_bit(1) | dir_bit(2) | dir_bit(3), {w[0], w[1], w[2], w[3]});
    std::int64_t cidx = lat.index_of(3, cube);
    REQUIRE(cidx >= 0);

    for (int sj = 0; sj <= 1; ++sj) {
        for (int sk = 0; sk <= 1; ++sk) {
            Cell edge = make_cell(dir_bit(3), {w[0] + sj, w[1] + sk, w[2], w[3]});
            Cell f1 = make_cell(dir_bit(1) | dir_bit(3), {w[0], w[1] + sk, w[2], w[3]});
            Cell f2 = make_cell(dir_bit(2) | dir_bit(3), {w[0] + sj, w[1], w[2], w[3]});
            std::int64_t e = lat.index_of(1, edge);
            std::int64_t i1 = lat.index_of(2, f1), i2 = lat.index_of(2, f2);
            REQUIRE(e >= 0);
            REQUIRE(i1 >= 0);
            REQUIRE(i2 >= 0);

            std::array<int, 4> rounds{
                sched.round_of(static_cast<std::uint32_t>(i1), static_cast<std::uint32_t>(e), true),
                sched.round_of(static_cast<std::uint32_t>(i2), static_cast<std::uint32_t>(e), true),
                sched.round_of(static_cast<std::uint32_t>(i1), static_cast<std::uint32_t>(cidx), false),
                sched.round_of(static_cast<std::uint32_t>(i2), static_cast<std::uint32_t>(cidx), false)};
            for (int r : rounds) REQUIRE(r >= 0);

            // convert the four absolute rounds to ranks 1..4
            std::array<int, 4> rank{};
            for (int a = 0; a < 4; ++a) {
                rank[a] = 1;
                for (int b = 0; b < 4; ++b)
                    if (rounds[b] < rounds[a]) ++rank[a];
            }
            CAPTURE(sj);
            CAPTURE(sk);
            CHECK(rank == expected.at({sj, sk}));
        }
    }

    // spot check from the schedule definition: (s_j,s_k)=(1,0) puts (e,f1) in
    // the round labeled +a1, the last of the eight
    Cell edge10 = make_cell(dir_bit(3), {w[0] + 1, w[1], w[2], w[3]});
    Cell f1_10 = make_cell(dir_bit(1) | dir_bit(3), {w[0], w[1], w[2], w[3]});
    int r = sched.round_of(static_cast<std::uint32_t>(lat.index_of(2, f1_10)),
                           static_cast<std::uint32_t>(lat.index_of(1, edge10)), true);
    CHECK(r == 7);
    CHECK(sched.labels[7].axis == 1);
    CHECK(sched.labels[7].negative == 0);
}

TEST_CASE("paper schedule verifies on L=2 and L=3") {
    for (int L : {2, 3}) {
        auto code = build_code(2, 2, std::vector<int>{L, L, L, L});
        auto sched = build_gate_schedule(code);
        CAPTURE(L);
        CHECK(verify_schedule(code, sched));
    }
}

TEST_CASE("swapping two middle rounds breaks the ordering property") {
    auto code = build_code(2, 2, std::vector<int>{3, 3, 3, 3});
    auto sched = build_gate_schedule(code);
    std::swap(sched.rounds[4], sched.rounds[5]);
    std::swap(sched.labels[4], sched.labels[5]);
    CHECK_FALSE(verify_schedule(code, sched));
}

TEST_CASE("every face takes at most 8 CNOTs, exactly 8 in the bulk") {
    for (int L : {2, 3}) {
        auto code = build_code(2, 2, std::vector<int>{L, L, L, L});
        const auto& lat = code.lattice();
        auto sched = build_gate_schedule(code);
        std::vector<int> cnots(code.num_qubits(), 0);
        std::size_t total = 0;
        for (int r = 0; r < 8; ++r) {
            std::vector<std::uint8_t> seen(code.num_qubits(), 0);
            for (const CnotGate& g : sched.rounds[r]) {
                CHECK_FALSE(seen[g.face]);  // no qubit twice in one round
                seen[g.face] = 1;
                ++cnots[g.face];
                ++total;
            }
        }
        std::size_t weight_sum = 0;
        for (std::uint32_t e = 0; e < code.num_x_checks(); ++e) weight_sum += code.x_check(e).size();
        for (std::uint32_t c = 0; c < code.num_z_checks(); ++c) weight_sum += code.z_check(c).size();
        CHECK(total == weight_sum);

        int max_cnots = 0;
        for (std::uint32_t f = 0; f < code.num_qubits(); ++f) {
            CHECK(cnots[f] <= 8);
            max_cnots = std::max(max_cnots, cnots[f]);
            // interior faces participate in all eight rounds
            Cell cell = lat.cell_at(2, f);
            bool interior = true;
            for (int i = 1; i <= 4; ++i) {
                int lo = lat.is_rough(i) ? 1 : 1;
                int hi = lat.dir_spec(i).upper - (cell.spans(i) ? 2 : 1);
                if (cell.base[i - 1] < lo || cell.base[i - 1] > hi) interior = false;
            }
            if (interior) CHECK(cnots[f] == 8);
        }
        CHECK(max_cnots == 8);
    }
}

TEST_CASE("non-tesseract lattices are rejected") {
    auto cubic = build_code(1, 2, std::vector<int>{3, 3, 3});
    CHECK_THROWS_AS(build_gate_schedule(cubic), LatticeError);
}
