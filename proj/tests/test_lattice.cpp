#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "hsc/lattice.hpp"
#include "hsc/rng.hpp"

using namespace hsc;

namespace {

// Independent cell-counting oracle: enumerate every (dirs, base) combination in
// the bounding box and test containment in U but not in B from first
// principles, without touching the lattice's block tables.
std::size_t oracle_count(int d1, int d2, const std::vector<int>& lengths, int k) {
    const int dims = d1 + d2;
    std::size_t count = 0;
    for (DirMask m = 0; m < (1u << dims); ++m) {
        if (__builtin_popcount(m) != k) continue;
        // iterate bases over a safe superset of coordinates
        std::vector<int> v(dims, 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == dims) {
                bool in_u = true, in_b = false;
                for (int j = 0; j < dims; ++j) {
                    int upper = j < d1 ? lengths[j] - 1 : lengths[j];
                    int lo = v[j], hi = v[j] + ((m >> j) & 1 ? 1 : 0);
                    if (lo < 0 || hi > upper) in_u = false;
                }
                for (int j = d1; j < dims; ++j) {
                    int upper = lengths[j];
                    if (((m >> j) & 1) == 0 && (v[j] == 0 || v[j] == upper)) in_b = true;
                }
                if (in_u && !in_b) ++count;
                return;
            }
            int upper = i < d1 ? lengths[i] - 1 : lengths[i];
            for (v[i] = -1; v[i] <= upper + 1; ++v[i]) self(self, i + 1);
        };
        rec(rec, 0);
    }
    return count;
}

Chain basis_chain(int dim, std::uint32_t idx) { return Chain(dim, {idx}); }

}  // namespace

TEST_CASE("tesseract cell counts match the closed-form polynomials") {
    for (int L = 2; L <= 6; ++L) {
        std::vector<int> lengths{L, L, L, L};
        auto lat = CodeLattice::build(2, 2, lengths);
        std::size_t edges = 4L * L * L * L * L - 8L * L * L * L + 6L * L * L - 2L * L;
        std::size_t faces = 6L * L * L * L * L - 12L * L * L * L + 10L * L * L - 4L * L + 1;
        CHECK(lat.num_cells(1) == edges);
        CHECK(lat.num_cells(3) == edges);
        CHECK(lat.num_cells(2) == faces);
        CHECK(lat.num_cells(0) == static_cast<std::size_t>(L) * L * (L - 1) * (L - 1));
    }
}

TEST_CASE("small code examples") {
    std::vector<int> l2{2, 2, 2, 2};
    auto lat2 = CodeLattice::build(2, 2, l2);
    CHECK(lat2.num_cells(2) == 33);
    CHECK(lat2.num_cells(1) == 20);
    CHECK(lat2.num_cells(3) == 20);

    std::vector<int> l3{3, 3, 3, 3};
    CHECK(CodeLattice::build(2, 2, l3).num_cells(2) == 241);

    std::vector<int> surf{4, 4};
    CHECK(CodeLattice::build(1, 1, surf).num_cells(1) == 25);
}

TEST_CASE("cell counts agree with the first-principles enumeration oracle") {
    struct Case { int d1, d2; std::vector<int> lengths; };
    std::vector<Case> cases{
        {2, 2, {2, 2, 2, 2}},
        {2, 2, {3, 2, 3, 2}},
        {1, 2, {3, 3, 3}},
        {1, 1, {3, 3}},
        {0, 2, {3, 3}},
        {3, 2, {2, 2, 2, 2, 2}},
    };
    for (const auto& c : cases) {
        auto lat = CodeLattice::build(c.d1, c.d2, c.lengths);
        for (int k = lat.min_dim(); k <= lat.max_dim(); ++k) {
            CAPTURE(c.d1);
            CAPTURE(c.d2);
            CAPTURE(k);
            CHECK(lat.num_cells(k) == oracle_count(c.d1, c.d2, c.lengths, k));
        }
    }
}

TEST_CASE("index/cell round trip and canonical order") {
    std::vector<int> l{3, 2, 3, 2};
    auto lat = CodeLattice::build(2, 2, l);
    for (int k = lat.min_dim(); k <= lat.max_dim(); ++k) {
        for (std::uint32_t i = 0; i < lat.num_cells(k); ++i) {
            Cell c = lat.cell_at(k, i);
            CHECK(lat.index_of(k, c) == i);
            CHECK(lat.in_lattice(c));
        }
    }
    // absent cells resolve to -1
    Cell outside;
    outside.dirs = dir_bit(1);
    outside.base = zero_coord();
    outside.base[2] = 99;
    CHECK(lat.index_of(1, outside) == -1);
}

TEST_CASE("boundary of boundary vanishes and coboundary is its adjoint") {
    struct Case { int d1, d2; std::vector<int> lengths; };
    std::vector<Case> cases{
        {2, 2, {3, 3, 3, 3}},
        {1, 2, {3, 3, 3}},
        {1, 1, {3, 3}},
        {3, 2, {2, 2, 2, 2, 2}},
    };
    for (const auto& c : cases) {
        auto lat = CodeLattice::build(c.d1, c.d2, c.lengths);
        const int d2 = lat.qubit_dim();
        for (std::uint32_t i = 0; i < lat.num_cells(d2 + 1); ++i) {
            Chain bb = lat.boundary(lat.boundary(basis_chain(d2 + 1, i)));
            CHECK(bb.empty());
        }
        if (d2 >= 2) {
            for (std::uint32_t i = 0; i < lat.num_cells(d2 - 2); ++i) {
                Chain cc = lat.coboundary(lat.coboundary(basis_chain(d2 - 2, i)));
                CHECK(cc.empty());
            }
        }
        // adjoint identity on random compatible pairs
        CounterRng rng(7, 1);
        for (int trial = 0; trial < 100; ++trial) {
            std::uint32_t a = rng.next_below(lat.num_cells(d2 - 1));
            std::uint32_t b = rng.next_below(lat.num_cells(d2));
            Chain ca = basis_chain(d2 - 1, a), cb = basis_chain(d2, b);
            CHECK(overlap_parity(lat.coboundary(ca), cb) ==
                  overlap_parity(ca, lat.boundary(cb)));
        }
    }
}

TEST_CASE("face boundaries in the relative complex") {
    std::vector<int> l3{3, 3, 3, 3};
    auto lat = CodeLattice::build(2, 2, l3);
    // bulk face keeps all four edges
    Cell bulk;
    bulk.dirs = dir_bit(1) | dir_bit(2);
    bulk.base = zero_coord();
    bulk.base[2] = 1;
    bulk.base[3] = 1;
    auto idx = lat.index_of(2, bulk);
    REQUIRE(idx >= 0);
    CHECK(lat.boundary(basis_chain(2, static_cast<std::uint32_t>(idx))).weight() == 4);

    // f_{3,4}(0) at L=2 loses the two edges inside the rough boundary
    std::vector<int> l2{2, 2, 2, 2};
    auto lat2 = CodeLattice::build(2, 2, l2);
    Cell corner;
    corner.dirs = dir_bit(3) | dir_bit(4);
    corner.base = zero_coord();
    auto cidx = lat2.index_of(2, corner);
    REQUIRE(cidx >= 0);
    CHECK(lat2.boundary(basis_chain(2, static_cast<std::uint32_t>(cidx))).weight() == 2);
}

TEST_CASE("edge coboundary weight is at most six, attained in the bulk") {
    std::vector<int> l{3, 3, 3, 3};
    auto lat = CodeLattice::build(2, 2, l);
    std::size_t max_w = 0;
    for (std::uint32_t e = 0; e < lat.num_cells(1); ++e)
        max_w = std::max(max_w, lat.coboundary(basis_chain(1, e)).weight());
    CHECK(max_w == 6);
}

TEST_CASE("surface code coboundary against geometric enumeration") {
    std::vector<int> l{3, 3};
    auto lat = CodeLattice::build(1, 1, l);
    // oracle: for every 0-cell, count 1-cells of the lattice that contain it
    for (std::uint32_t v = 0; v < lat.num_cells(0); ++v) {
        Cell vert = lat.cell_at(0, v);
        std::size_t count = 0;
        for (std::uint32_t e = 0; e < lat.num_cells(1); ++e) {
            if (cell_contains(lat.cell_at(1, e), vert, lat.dims())) ++count;
        }
        CHECK(lat.coboundary(basis_chain(0, v)).weight() == count);
    }
}

TEST_CASE("duality: explicit map, counts, inclusion reversal") {
    std::vector<int> l{3, 3, 3, 3};
    auto lat = CodeLattice::build(2, 2, l);

    Cell e1;
    e1.dirs = dir_bit(1);
    e1.base = zero_coord();
    Cell d = dual_cell(lat, e1);
    CHECK(d.dirs == (dir_bit(2) | dir_bit(3) | dir_bit(4)));
    CHECK(d.base[0] == 1);
    CHECK(d.base[1] == 0);
    CHECK(d.base[2] == 0);
    CHECK(d.base[3] == 0);

    for (int L = 2; L <= 4; ++L) {
        std::vector<int> ll{L, L, L, L};
        auto latL = CodeLattice::build(2, 2, ll);
        CHECK(latL.num_cells(1) == latL.num_cells(3));
        // the dual complex: rough in directions 1,2, smooth in 3,4, with the
        // rough coordinates shifted down by one
        std::vector<DirSpec> dual_specs{{L, true, true}, {L, true, true},
                                        {L - 1, false, false}, {L - 1, false, false}};
        auto dual_lat = CodeLattice::build_with_specs(dual_specs, 2);
        std::set<std::int64_t> images;
        for (std::uint32_t e = 0; e < latL.num_cells(1); ++e) {
            Cell cube = dual_cell(latL, latL.cell_at(1, e));
            // translate: dual complex lives on [0,L]^2 x [1,L]^2
            Cell shifted = cube;
            shifted.base[2] -= 1;
            shifted.base[3] -= 1;
            std::int64_t idx = dual_lat.index_of(3, shifted);
            CHECK(idx >= 0);
            images.insert(idx);
        }
        CHECK(images.size() == latL.num_cells(1));
        CHECK(images.size() == dual_lat.num_cells(3));
    }

    // inclusion reversal on random incident face/cube pairs
    CounterRng rng(11, 0);
    int checked = 0;
    while (checked < 10) {
        std::uint32_t c = rng.next_below(lat.num_cells(3));
        auto faces = lat.boundary_of(3, c);
        if (faces.empty()) continue;
        std::uint32_t f = faces[rng.next_below(static_cast<std::uint32_t>(faces.size()))];
        Cell cube = lat.cell_at(3, c), face = lat.cell_at(2, f);
        REQUIRE(cell_contains(cube, face, 4));
        CHECK(cell_contains(dual_cell(lat, face), dual_cell(lat, cube), 4));
        ++checked;
    }
}

TEST_CASE("chain algebra is GF(2)") {
    Chain a(2, {1, 5, 9});
    Chain b = a;
    CHECK((a ^ b).empty());
    Chain c(2, {5, 7});
    Chain s = a ^ c;
    CHECK(s.support == std::vector<std::uint32_t>{1, 7, 9});
    CHECK(Chain(2, {3, 3, 4}).support == std::vector<std::uint32_t>{4});
}

TEST_CASE("invalid lattice parameters are rejected") {
    std::vector<int> l{2, 2};
    CHECK_THROWS_AS(CodeLattice::build(2, 0, l), LatticeError);
    std::vector<int> lz{2, 0, 2, 2};
    CHECK_THROWS_AS(CodeLattice::build(2, 2, lz), LatticeError);
    std::vector<int> lm{2, 2, 2};
    CHECK_THROWS_AS(CodeLattice::build(2, 2, lm), LatticeError);

    auto lat = CodeLattice::build(2, 2, std::vector<int>{2, 2, 2, 2});
    CHECK_THROWS_AS(lat.boundary(Chain(0, {0})), LatticeError);
    CHECK_THROWS_AS(lat.coboundary(Chain(3, {0})), LatticeError);
    CHECK_THROWS_AS(dual_cell(CodeLattice::build(1, 2, std::vector<int>{2, 2, 2}), Cell{}),
                    LatticeError);
}

TEST_CASE("cell dump emits one line per cell") {
    auto lat = CodeLattice::build(1, 1, std::vector<int>{2, 2});
    std::ostringstream os;
    lat.dump_cells(os);
    std::size_t lines = 0, total = 0;
    for (char ch : os.str())
        if (ch == '\n') ++lines;
    for (int k = lat.min_dim(); k <= lat.max_dim(); ++k) total += lat.num_cells(k);
    CHECK(lines == total);
}
