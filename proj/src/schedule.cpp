#include "hsc/schedule.hpp"

#include <unordered_map>

namespace hsc {

namespace {

std::uint64_t pair_key(std::uint32_t face, std::uint32_t ancilla) {
    return (static_cast<std::uint64_t>(face) << 32) | ancilla;
}

void require_tesseract_family(const CodeLattice& lat) {
    if (lat.dims() != 4 || lat.qubit_dim() != 2 || !lat.is_rough(3) || !lat.is_rough(4) ||
        lat.is_rough(1) || lat.is_rough(2))
        throw LatticeError("gate schedule: only the 4D (2,2) family is supported");
}

}  // namespace

int Schedule::round_of(std::uint32_t face, std::uint32_t ancilla, bool ancilla_is_edge) const {
    for (int r = 0; r < 8; ++r)
        for (const CnotGate& g : rounds[r])
            if (g.face == face && g.ancilla == ancilla && g.ancilla_is_edge == ancilla_is_edge)
                return r;
    return -1;
}

Schedule build_gate_schedule(const CssCode& code) {
    const auto& lat = code.lattice();
    require_tesseract_family(lat);

    Schedule sched;
    const std::array<Schedule::Label, 8> labels{{{1, 1}, {2, 1}, {3, 1}, {4, 1},
                                                 {4, 0}, {3, 0}, {2, 0}, {1, 0}}};
    sched.labels = labels;

    const std::uint32_t num_faces = static_cast<std::uint32_t>(lat.num_cells(2));
    for (int r = 0; r < 8; ++r) {
        const int k = labels[r].axis, n = labels[r].negative;
        for (std::uint32_t fidx = 0; fidx < num_faces; ++fidx) {
            Cell face = lat.cell_at(2, fidx);
            if (face.spans(k)) {
                // edge ancilla along the face direction other than k
                Cell edge = face;
                edge.dirs = static_cast<DirMask>(face.dirs & ~dir_bit(k));
                edge.base[k - 1] = static_cast<std::int16_t>(face.base[k - 1] + (1 - n));
                std::int64_t e = lat.index_of(1, edge);
                if (e >= 0)
                    sched.rounds[r].push_back({fidx, static_cast<std::uint32_t>(e), true});
            } else {
                Cell cube = face;
                cube.dirs = static_cast<DirMask>(face.dirs | dir_bit(k));
                cube.base[k - 1] = static_cast<std::int16_t>(face.base[k - 1] - 1 + (1 - n));
                std::int64_t c = lat.index_of(3, cube);
                if (c >= 0)
                    sched.rounds[r].push_back({fidx, static_cast<std::uint32_t>(c), false});
            }
        }
    }
    return sched;
}

bool verify_schedule(const CssCode& code, const Schedule& schedule) {
    const auto& lat = code.lattice();
    require_tesseract_family(lat);

    std::unordered_map<std::uint64_t, int> edge_round, cube_round;
    for (int r = 0; r < 8; ++r) {
        for (const CnotGate& g : schedule.rounds[r]) {
            auto& map = g.ancilla_is_edge ? edge_round : cube_round;
            map[pair_key(g.face, g.ancilla)] = r;
        }
    }

    const std::uint32_t num_cubes = static_cast<std::uint32_t>(lat.num_cells(3));
    for (std::uint32_t c = 0; c < num_cubes; ++c) {
        Cell cube = lat.cell_at(3, c);
        // edges geometrically contained in the cube
        for (int d = 1; d <= 4; ++d) {
            if (!cube.spans(d)) continue;
            std::array<int, 2> others{};
            int cnt = 0;
            for (int o = 1; o <= 4; ++o)
                if (o != d && cube.spans(o)) others[cnt++] = o;
            for (int s0 = 0; s0 <= 1; ++s0) {
                for (int s1 = 0; s1 <= 1; ++s1) {
                    Cell edge;
                    edge.dirs = dir_bit(d);
                    edge.base = cube.base;
                    edge.base[others[0] - 1] = static_cast<std::int16_t>(edge.base[others[0] - 1] + s0);
                    edge.base[others[1] - 1] = static_cast<std::int16_t>(edge.base[others[1] - 1] + s1);
                    std::int64_t e = lat.index_of(1, edge);
                    if (e < 0) continue;
                    // faces of the lattice with edge subset face subset cube
                    std::vector<std::uint32_t> shared;
                    for (std::uint32_t f : lat.coboundary_of(1, static_cast<std::uint32_t>(e))) {
                        Cell fc = lat.cell_at(2, f);
                        if (cell_contains(cube, fc, 4)) shared.push_back(f);
                    }
                    if (shared.size() < 2) continue;
                    auto re1 = edge_round.find(pair_key(shared[0], static_cast<std::uint32_t>(e)));
                    auto rc1 = cube_round.find(pair_key(shared[0], c));
                    auto re2 = edge_round.find(pair_key(shared[1], static_cast<std::uint32_t>(e)));
                    auto rc2 = cube_round.find(pair_key(shared[1], c));
                    if (re1 == edge_round.end() || rc1 == cube_round.end() ||
                        re2 == edge_round.end() || rc2 == cube_round.end())
                        return false;  // a CNOT is missing from the schedule
                    if ((re1->second < rc1->second) != (re2->second < rc2->second)) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace hsc
