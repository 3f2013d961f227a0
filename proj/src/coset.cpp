#include "hsc/coset.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace hsc {

BitMatrix BinarySystem::to_matrix() const {
    BitMatrix m(rows.size(), num_vars);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::uint32_t c : rows[r]) m.set(r, c, true);
    return m;
}

CosetCsr CosetCsr::compile(std::size_t num_vars,
                           const std::vector<std::vector<std::uint32_t>>& rows) {
    CosetCsr csr;
    csr.num_vars = num_vars;
    csr.num_rows = rows.size();
    csr.row_off.assign(rows.size() + 1, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        csr.row_off[r + 1] = csr.row_off[r] + static_cast<std::uint32_t>(rows[r].size());
    csr.row_items.reserve(csr.row_off.back());
    for (const auto& row : rows) csr.row_items.insert(csr.row_items.end(), row.begin(), row.end());

    std::vector<std::uint32_t> counts(num_vars, 0);
    for (std::uint32_t v : csr.row_items) ++counts[v];
    csr.col_off.assign(num_vars + 1, 0);
    for (std::size_t v = 0; v < num_vars; ++v) csr.col_off[v + 1] = csr.col_off[v] + counts[v];
    csr.col_items.resize(csr.row_items.size());
    std::vector<std::uint32_t> cur(csr.col_off.begin(), csr.col_off.end() - 1);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::uint32_t v : rows[r]) csr.col_items[cur[v]++] = static_cast<std::uint32_t>(r);
    return csr;
}

namespace {

// Branch-and-bound over the parity system: branches cover the unassigned
// support of a violated row, unit rows propagate through a queue, and
// subtrees are cut with an admissible bound (settled weight plus negative
// reachable weight, plus a row-cover term when every weight is non-negative).
// Open odd rows sit in an intrusive doubly-linked list so branch selection
// touches only active rows.
struct SearchState {
    static constexpr std::uint32_t kNil = 0xFFFFFFFFu;

    const CosetCsr* csr;
    const std::int32_t* weights;
    std::vector<std::uint8_t> residual;
    std::vector<std::int32_t> unassigned;
    std::vector<std::int8_t> value;
    std::vector<std::uint32_t> trail;
    std::vector<std::uint32_t> unit_queue;
    std::vector<std::uint32_t> odd_prev, odd_next;  // intrusive list over rows
    std::uint32_t odd_head = kNil;
    std::int64_t partial = 0;
    std::int64_t neg_remaining = 0;
    std::int32_t odd_open = 0;
    std::int32_t conflicts = 0;
    std::int32_t unassigned_neg = 0;
    std::int64_t best = 0;
    std::vector<std::uint8_t> best_x;
    bool have_best = false;
    std::uint64_t nodes = 0, budget = 0;
    bool budget_hit = false;
    std::int32_t max_col_deg = 1;
    std::int64_t min_weight = 0;
    bool all_nonneg = true;

    bool row_counted(std::uint32_t r) const { return unassigned[r] > 0 && residual[r]; }

    void odd_insert(std::uint32_t r) {
        odd_prev[r] = kNil;
        odd_next[r] = odd_head;
        if (odd_head != kNil) odd_prev[odd_head] = r;
        odd_head = r;
        ++odd_open;
    }
    void odd_remove(std::uint32_t r) {
        if (odd_prev[r] != kNil) odd_next[odd_prev[r]] = odd_next[r];
        else odd_head = odd_next[r];
        if (odd_next[r] != kNil) odd_prev[odd_next[r]] = odd_prev[r];
        --odd_open;
    }

    void apply(std::uint32_t v, bool val) {
        const std::int32_t w = weights[v];
        value[v] = val ? 1 : 0;
        if (val) partial += w;
        if (w < 0) { neg_remaining -= w; --unassigned_neg; }
        for (std::uint32_t t = csr->col_off[v]; t < csr->col_off[v + 1]; ++t) {
            std::uint32_t r = csr->col_items[t];
            bool before = row_counted(r);
            --unassigned[r];
            if (val) residual[r] ^= 1;
            bool after = row_counted(r);
            if (after != before) {
                if (after) odd_insert(r);
                else odd_remove(r);
            }
            if (unassigned[r] == 0 && residual[r]) ++conflicts;
            else if (unassigned[r] == 1) unit_queue.push_back(r);
        }
        trail.push_back(v);
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            std::uint32_t v = trail.back();
            trail.pop_back();
            bool val = value[v] == 1;
            const std::int32_t w = weights[v];
            for (std::uint32_t t = csr->col_off[v]; t < csr->col_off[v + 1]; ++t) {
                std::uint32_t r = csr->col_items[t];
                if (unassigned[r] == 0 && residual[r]) --conflicts;
                bool before = row_counted(r);
                ++unassigned[r];
                if (val) residual[r] ^= 1;
                bool after = row_counted(r);
                if (after != before) {
                    if (after) odd_insert(r);
                    else odd_remove(r);
                }
            }
            if (val) partial -= w;
            if (w < 0) { neg_remaining += w; ++unassigned_neg; }
            value[v] = -1;
        }
    }

    bool propagate() {
        if (conflicts) return false;
        while (!unit_queue.empty()) {
            std::uint32_t r = unit_queue.back();
            unit_queue.pop_back();
            if (unassigned[r] != 1) continue;  // stale entry
            std::uint32_t forced = kNil;
            for (std::uint32_t t = csr->row_off[r]; t < csr->row_off[r + 1]; ++t) {
                if (value[csr->row_items[t]] < 0) { forced = csr->row_items[t]; break; }
            }
            apply(forced, residual[r] != 0);
            if (conflicts) return false;
        }
        return true;
    }

    std::int64_t lower_bound() const {
        std::int64_t lb = partial + neg_remaining;
        if (all_nonneg && odd_open > 0)
            lb += ((odd_open + max_col_deg - 1) / max_col_deg) * std::max<std::int64_t>(min_weight, 0);
        return lb;
    }

    void record_leaf() {
        if (!have_best || partial < best) {
            best = partial;
            have_best = true;
            best_x.assign(csr->num_vars, 0);
            for (std::size_t v = 0; v < csr->num_vars; ++v) best_x[v] = value[v] == 1;
        }
    }

    void search() {
        if (budget_hit) return;
        if (++nodes > budget) { budget_hit = true; return; }
        std::size_t mark = trail.size();
        std::size_t queue_mark = unit_queue.size();
        if (!propagate()) {
            unit_queue.resize(queue_mark);
            undo_to(mark);
            return;
        }
        if (have_best && lower_bound() >= best) { undo_to(mark); return; }

        if (odd_open == 0) {
            if (unassigned_neg == 0) {
                record_leaf();
                undo_to(mark);
                return;
            }
            std::uint32_t pick = 0;
            std::int32_t wbest = 0;
            for (std::size_t v = 0; v < csr->num_vars; ++v) {
                if (value[v] < 0 && weights[v] < wbest) {
                    wbest = weights[v];
                    pick = static_cast<std::uint32_t>(v);
                }
            }
            for (int val = 1; val >= 0; --val) {
                std::size_t sub = trail.size();
                apply(pick, val != 0);
                search();
                undo_to(sub);
                unit_queue.resize(queue_mark);
                if (budget_hit) break;
            }
            undo_to(mark);
            return;
        }

        // open odd row with the fewest unassigned variables
        std::uint32_t row = odd_head;
        std::int32_t fewest = unassigned[odd_head];
        for (std::uint32_t r = odd_next[odd_head]; r != kNil && fewest > 2; r = odd_next[r]) {
            if (unassigned[r] < fewest) {
                fewest = unassigned[r];
                row = r;
            }
        }
        std::vector<std::uint32_t> cands;
        cands.reserve(static_cast<std::size_t>(fewest));
        for (std::uint32_t t = csr->row_off[row]; t < csr->row_off[row + 1]; ++t)
            if (value[csr->row_items[t]] < 0) cands.push_back(csr->row_items[t]);
        std::stable_sort(cands.begin(), cands.end(), [&](std::uint32_t a, std::uint32_t b) {
            return weights[a] < weights[b];
        });
        std::size_t frame = trail.size();
        for (std::size_t i = 0; i < cands.size(); ++i) {
            std::size_t sub = trail.size();
            apply(cands[i], true);
            search();
            undo_to(sub);
            unit_queue.resize(queue_mark);
            if (budget_hit) break;
            apply(cands[i], false);
            if (conflicts) break;
        }
        undo_to(frame);
        undo_to(mark);
        unit_queue.resize(queue_mark);
    }
};

Gf2Elimination eliminate_csr(const CosetCsr& csr, const std::vector<std::uint8_t>& b) {
    BitMatrix a(csr.num_rows, csr.num_vars);
    for (std::size_t r = 0; r < csr.num_rows; ++r)
        for (std::uint32_t t = csr.row_off[r]; t < csr.row_off[r + 1]; ++t)
            a.set(r, csr.row_items[t], true);
    return gf2_eliminate(a, &b);
}

CosetSolution greedy_incumbent(const CosetCsr& csr, const std::vector<std::int32_t>& weights,
                               const Gf2Elimination& elim) {
    std::vector<std::uint8_t> x(csr.num_vars, 0);
    for (std::size_t r = 0; r < elim.rank; ++r)
        x[static_cast<std::size_t>(elim.pivot_col[r])] = elim.rhs[r];
    std::vector<std::vector<std::uint32_t>> kernel;
    for (std::size_t col = 0; col < csr.num_vars; ++col) {
        if (elim.pivot_row_of_col[col] >= 0) continue;
        std::vector<std::uint32_t> vec{static_cast<std::uint32_t>(col)};
        for (std::size_t r = 0; r < elim.rank; ++r)
            if (elim.reduced.get(r, col)) vec.push_back(static_cast<std::uint32_t>(elim.pivot_col[r]));
        kernel.push_back(std::move(vec));
    }
    std::int64_t obj = 0;
    for (std::size_t v = 0; v < csr.num_vars; ++v)
        if (x[v]) obj += weights[v];
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& vec : kernel) {
            std::int64_t delta = 0;
            for (std::uint32_t v : vec) delta += x[v] ? -weights[v] : weights[v];
            if (delta < 0) {
                for (std::uint32_t v : vec) x[v] ^= 1;
                obj += delta;
                improved = true;
            }
        }
    }
    CosetSolution sol;
    sol.x = std::move(x);
    sol.objective = obj;
    return sol;
}

BinarySystem system_from_csr(const CosetCsr& csr, const std::vector<std::uint8_t>& b,
                             const std::vector<std::int32_t>& weights) {
    BinarySystem sys;
    sys.num_vars = csr.num_vars;
    sys.rows.resize(csr.num_rows);
    for (std::size_t r = 0; r < csr.num_rows; ++r)
        sys.rows[r].assign(csr.row_items.begin() + csr.row_off[r],
                           csr.row_items.begin() + csr.row_off[r + 1]);
    sys.b = b;
    sys.weights = weights;
    return sys;
}

CosetSolution run_external(const BinarySystem& sys, const CosetOptions& opt) {
    static int counter = 0;
    std::string base =
        "/tmp/hsc_coset_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
    std::string in = base + ".in", out = base + ".out";
    write_coset_instance(sys, in);
    std::string cmd = "'" + opt.external_solver + "' '" + in + "' '" + out + "'";
    int rc = std::system(cmd.c_str());
    if (rc != 0)
        throw std::runtime_error("external coset solver failed with status " + std::to_string(rc));
    CosetSolution sol = read_coset_response(sys, out);
    std::remove(in.c_str());
    std::remove(out.c_str());
    return sol;
}

}  // namespace

CosetSolution min_weight_coset_csr(const CosetCsr& csr, const std::vector<std::uint8_t>& b,
                                   const std::vector<std::int32_t>& weights,
                                   const CosetOptions& opt) {
    Gf2Elimination elim = eliminate_csr(csr, b);
    if (!elim.feasible()) throw CosetInfeasible(elim.inconsistent_row);

    if (!opt.external_solver.empty()) return run_external(system_from_csr(csr, b, weights), opt);

    const std::size_t free_vars = csr.num_vars - elim.rank;

    SearchState st;
    st.csr = &csr;
    st.weights = weights.data();
    st.residual.assign(b.begin(), b.end());
    st.unassigned.assign(csr.num_rows, 0);
    for (std::size_t r = 0; r < csr.num_rows; ++r)
        st.unassigned[r] = static_cast<std::int32_t>(csr.row_off[r + 1] - csr.row_off[r]);
    st.value.assign(csr.num_vars, -1);
    st.odd_prev.assign(csr.num_rows, SearchState::kNil);
    st.odd_next.assign(csr.num_rows, SearchState::kNil);
    for (std::size_t r = csr.num_rows; r-- > 0;) {
        if (st.residual[r] && st.unassigned[r] > 0) st.odd_insert(static_cast<std::uint32_t>(r));
        if (st.unassigned[r] == 1) st.unit_queue.push_back(static_cast<std::uint32_t>(r));
    }
    st.min_weight = csr.num_vars ? std::numeric_limits<std::int64_t>::max() : 0;
    for (std::size_t v = 0; v < csr.num_vars; ++v) {
        std::int32_t w = weights[v];
        if (w < 0) {
            st.neg_remaining += w;
            ++st.unassigned_neg;
            st.all_nonneg = false;
        }
        st.min_weight = std::min<std::int64_t>(st.min_weight, w);
    }
    for (std::size_t v = 0; v < csr.num_vars; ++v)
        st.max_col_deg = std::max<std::int32_t>(
            st.max_col_deg, static_cast<std::int32_t>(csr.col_off[v + 1] - csr.col_off[v]));
    for (std::size_t r = 0; r < csr.num_rows; ++r)
        if (st.unassigned[r] == 0 && st.residual[r])
            throw CosetInfeasible(static_cast<std::int64_t>(r));

    CosetSolution inc = greedy_incumbent(csr, weights, elim);
    st.best = inc.objective;
    st.best_x = std::move(inc.x);
    st.have_best = true;

    st.budget = free_vars <= static_cast<std::size_t>(opt.exact_threshold)
                    ? std::numeric_limits<std::uint64_t>::max()
                    : opt.node_budget;
    st.search();

    CosetSolution sol;
    sol.x = std::move(st.best_x);
    sol.objective = st.best;
    sol.optimal = !st.budget_hit;
    sol.nodes_explored = st.nodes;
    return sol;
}

CosetSolution min_weight_coset(const BinarySystem& sys, const CosetOptions& opt) {
    if (sys.b.size() != sys.rows.size() || sys.weights.size() != sys.num_vars)
        throw std::invalid_argument("minWeightCoset: inconsistent system dimensions");
    CosetCsr csr = CosetCsr::compile(sys.num_vars, sys.rows);
    return min_weight_coset_csr(csr, sys.b, sys.weights, opt);
}

void write_coset_instance(const BinarySystem& sys, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write coset instance file " + path);
    os << "minwcoset-ilp 1\n";
    os << "vars " << sys.num_vars << "\n";
    os << "objective";
    for (auto w : sys.weights) os << ' ' << w;
    os << "\nrows " << sys.rows.size() << "\n";
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        os << int(sys.b[r]) << " :";
        for (auto v : sys.rows[r]) os << ' ' << v;
        os << "\n";
    }
}

CosetSolution read_coset_response(const BinarySystem& sys, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read coset response file " + path);
    std::string status_word, status;
    is >> status_word >> status;
    if (status_word != "status" || (status != "optimal" && status != "feasible"))
        throw std::runtime_error("malformed coset response header");
    std::string tag;
    is >> tag;
    if (tag != "assignment") throw std::runtime_error("malformed coset response assignment");
    CosetSolution sol;
    sol.x.assign(sys.num_vars, 0);
    for (std::size_t v = 0; v < sys.num_vars; ++v) {
        int bit;
        if (!(is >> bit)) throw std::runtime_error("truncated coset response");
        sol.x[v] = bit ? 1 : 0;
    }
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        int parity = 0;
        for (auto v : sys.rows[r]) parity ^= sol.x[v];
        if (parity != sys.b[r])
            throw std::runtime_error("external solver returned an invalid assignment");
    }
    for (std::size_t v = 0; v < sys.num_vars; ++v)
        if (sol.x[v]) sol.objective += sys.weights[v];
    sol.optimal = status == "optimal";
    return sol;
}

}  // namespace hsc
