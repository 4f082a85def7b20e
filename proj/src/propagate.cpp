#include "ccps/propagate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ccps/lp.hpp"
#include "ccps/node.hpp"

namespace ccps {

namespace {

// strict/weak comparisons on scenario data, tol_feas margin
bool sgt(double a, double b) { return strictly_less(b, a); }
bool sle(double a, double b) { return !sgt(a, b); }

Rational prob_sum(const CcpInstance& inst, const std::vector<int>& idx) {
    Rational s(0);
    for (int i : idx) s += inst.probs[i];
    return s;
}

std::vector<int> free_indices(int n, const std::vector<char>& in0, const std::vector<char>& in1) {
    std::vector<int> nf;
    for (int i = 0; i < n; ++i)
        if (!in0[i] && !in1[i]) nf.push_back(i);
    return nf;
}

std::vector<char> mask_of(int n, const std::vector<int>& idx) {
    std::vector<char> m(n, 0);
    for (int i : idx) m[i] = 1;
    return m;
}

// xi^{N0,N1}: max of the global quantile floor, the fixed-zero scenarios, and
// the residual-budget quantile over the free scenarios.
std::vector<double> node_lower_bounds(const CcpInstance& inst, const Preprocessed& prep,
                                      const std::vector<char>& in0, const std::vector<int>& nf,
                                      const Rational& residual) {
    const auto& bar = prep.strong.xibar;
    std::vector<double> lb = prep.qb.xi0;
    for (int i = 0; i < inst.n; ++i)
        if (in0[i])
            for (int k = 0; k < inst.m; ++k) lb[k] = std::max(lb[k], bar[i][k]);
    if (!nf.empty()) {
        std::vector<int> order = nf;
        for (int k = 0; k < inst.m; ++k) {
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return bar[a][k] > bar[b][k]; });
            Rational acc(0);
            for (int i : order) {
                acc += inst.probs[i];
                if (acc > residual) {
                    lb[k] = std::max(lb[k], bar[i][k]);
                    break;
                }
            }
        }
    }
    return lb;
}

}  // namespace

ReductionResult propagate_approx(const CcpInstance& inst, const Preprocessed& prep,
                                 const std::vector<int>& N0, const std::vector<int>& N1,
                                 std::vector<PropagationTraceStep>* trace) {
    const auto& bar = prep.strong.xibar;
    ReductionResult res;
    res.mode = PropagationMode::Approx;
    std::vector<char> in0 = mask_of(inst.n, N0), in1 = mask_of(inst.n, N1);
    Rational residual = inst.epsilon - prob_sum(inst, N1);

    while (true) {
        ++res.iterations;
        if (residual < Rational(0)) {
            res.pruned = true;
            res.fixed_zero.clear();
            res.fixed_one.clear();
            return res;
        }
        std::vector<int> nf = free_indices(inst.n, in0, in1);
        std::vector<double> lb = node_lower_bounds(inst, prep, in0, nf, residual);
        res.bounds = lb;

        for (int j = 0; j < inst.n; ++j) {
            if (!in1[j]) continue;
            bool dominated = true;
            for (int k = 0; k < inst.m && dominated; ++k)
                if (!sle(bar[j][k], lb[k])) dominated = false;
            if (dominated) {
                res.pruned = true;
                res.fixed_zero.clear();
                res.fixed_one.clear();
                return res;
            }
        }

        // R1: free scenarios whose violation is implied by some fixed-one j
        std::vector<int> r1;
        for (int i : nf) {
            bool fix = false;
            for (int j = 0; j < inst.n && !fix; ++j) {
                if (!in1[j]) continue;
                bool covers = true;  // c_j(xibar^i) == 0
                for (int k = 0; k < inst.m && covers; ++k) {
                    if (!sgt(bar[j][k], lb[k])) continue;  // k outside M_j
                    if (strictly_less(bar[i][k], bar[j][k])) covers = false;
                }
                if (covers) fix = true;
            }
            if (fix) r1.push_back(i);
        }
        Rational residual2 = residual - prob_sum(inst, r1);

        std::vector<int> r0;
        for (int i : nf) {
            if (std::binary_search(r1.begin(), r1.end(), i)) continue;
            bool fix = inst.probs[i] > residual2;
            if (!fix) {
                bool below = true;
                for (int k = 0; k < inst.m && below; ++k)
                    if (!sle(bar[i][k], lb[k])) below = false;
                fix = below;
            }
            if (fix) r0.push_back(i);
        }

        if (trace) trace->push_back({lb, r0, r1});
        if (r0.empty() && r1.empty()) return res;

        for (int i : r0) {
            in0[i] = 1;
            set_insert(res.fixed_zero, i);
        }
        for (int i : r1) {
            in1[i] = 1;
            set_insert(res.fixed_one, i);
        }
        residual = residual2;
    }
}

// ---------------------------------------------------------------------------
// Exact approach: auxiliary MILP over witness-row selectors, solved by a
// small depth-first 0-1 branch-and-bound on the LP subsolver.
// ---------------------------------------------------------------------------

namespace {

struct MiniMilpResult {
    bool feasible = false;
    double objective = 0.0;
    std::vector<double> x;
};

MiniMilpResult mini_bnb(LpModel& lp, long node_limit, bool& exceeded) {
    MiniMilpResult best;
    best.objective = kInf;
    Simplex sx;
    struct Node {
        std::vector<std::pair<int, int>> fixes;
        Basis basis;
    };
    std::vector<Node> stack;
    stack.push_back({});
    long nodes = 0;
    while (!stack.empty()) {
        if (++nodes > node_limit) {
            exceeded = true;
            break;
        }
        Node node = std::move(stack.back());
        stack.pop_back();
        LpMark mark = lp.checkpoint();
        for (auto [j, v] : node.fixes) lp.change_col_bounds(j, v, v);
        LpResult res = sx.solve(lp, node.basis.empty() ? nullptr : &node.basis);
        lp.revert_bounds(mark);
        if (res.status != LpStatus::Optimal) continue;
        if (best.feasible && res.objective >= best.objective - 1e-9) continue;
        int branch = -1;
        double most = kTolInt;
        for (int j = 0; j < lp.num_cols(); ++j) {
            double f = std::min(res.primal[j], 1.0 - res.primal[j]);
            if (f > most + 1e-12) {
                most = f;
                branch = j;
            }
        }
        if (branch < 0) {
            best.feasible = true;
            best.objective = res.objective;
            best.x = res.primal;
            continue;
        }
        Node down{node.fixes, res.basis}, up{node.fixes, res.basis};
        down.fixes.emplace_back(branch, 0);
        up.fixes.emplace_back(branch, 1);
        stack.push_back(std::move(down));
        stack.push_back(std::move(up));
    }
    return best;
}

}  // namespace

std::optional<Rational> exact_feasibility_value(const CcpInstance& inst, const Preprocessed& prep,
                                                const std::vector<int>& N0,
                                                const std::vector<int>& N1, ExactBudget& budget) {
    const auto& bar = prep.strong.xibar;
    std::vector<char> in0 = mask_of(inst.n, N0), in1 = mask_of(inst.n, N1);
    std::vector<int> nf = free_indices(inst.n, in0, in1);

    // floor: global quantile bounds joined with the fixed-zero scenarios
    std::vector<double> floor_v = prep.qb.xi0;
    for (int i : N0)
        for (int k = 0; k < inst.m; ++k) floor_v[k] = std::max(floor_v[k], bar[i][k]);

    std::vector<std::vector<int>> mj(N1.size());
    for (size_t a = 0; a < N1.size(); ++a) {
        int j = N1[a];
        for (int k = 0; k < inst.m; ++k)
            if (sgt(bar[j][k], floor_v[k])) mj[a].push_back(k);
        if (mj[a].empty()) return std::nullopt;  // no admissible witness row
    }

    if (N1.empty()) return Rational(0);

    LpModel lp;
    std::vector<std::vector<int>> wcol(N1.size());
    for (size_t a = 0; a < N1.size(); ++a)
        for (size_t t = 0; t < mj[a].size(); ++t) wcol[a].push_back(lp.add_col(0.0, 1.0, 0.0));
    std::vector<int> zcol(nf.size());
    for (size_t b = 0; b < nf.size(); ++b)
        zcol[b] = lp.add_col(0.0, 1.0, inst.probs[nf[b]].to_double());

    for (size_t a = 0; a < N1.size(); ++a) {
        std::vector<std::pair<int, double>> row;
        for (int cidx : wcol[a]) row.emplace_back(cidx, 1.0);
        lp.add_row(row, 1.0, 1.0);
    }
    for (size_t a = 0; a < N1.size(); ++a) {
        int j = N1[a];
        for (size_t b = 0; b < nf.size(); ++b) {
            int i = nf[b];
            std::vector<std::pair<int, double>> row;
            for (size_t t = 0; t < mj[a].size(); ++t) {
                int k = mj[a][t];
                if (!strictly_less(bar[i][k], bar[j][k]))  // k in M_{ji}: xi^j_k <= xi^i_k
                    row.emplace_back(wcol[a][t], 1.0);
            }
            if (row.empty()) continue;
            row.emplace_back(zcol[b], -1.0);
            lp.add_row(row, -kInf, 0.0);
        }
    }

    bool exceeded = false;
    MiniMilpResult best = mini_bnb(lp, budget.node_limit, exceeded);
    if (exceeded) budget.exceeded = true;
    if (!best.feasible) return std::nullopt;
    Rational o(0);
    for (size_t b = 0; b < nf.size(); ++b)
        if (best.x[zcol[b]] > 0.5) o += inst.probs[nf[b]];
    return o;
}

bool exact_nonempty(const CcpInstance& inst, const Preprocessed& prep, const std::vector<int>& N0,
                    const std::vector<int>& N1, ExactBudget& budget) {
    Rational residual = inst.epsilon - prob_sum(inst, N1);
    if (residual < Rational(0)) return false;
    bool was_exceeded = budget.exceeded;
    budget.exceeded = false;
    std::optional<Rational> o = exact_feasibility_value(inst, prep, N0, N1, budget);
    bool this_exceeded = budget.exceeded;
    budget.exceeded = was_exceeded || this_exceeded;
    if (o && *o <= residual) return true;  // certified by rational re-evaluation
    if (this_exceeded) return true;        // unknown: safe side
    return false;
}

ReductionResult exact_fixings(const CcpInstance& inst, const Preprocessed& prep,
                              const std::vector<int>& N0, const std::vector<int>& N1,
                              ExactBudget& budget) {
    ReductionResult res;
    res.mode = PropagationMode::Exact;
    res.iterations = 1;
    if (!exact_nonempty(inst, prep, N0, N1, budget)) {
        res.pruned = true;
        return res;
    }
    std::vector<char> in0 = mask_of(inst.n, N0), in1 = mask_of(inst.n, N1);
    std::vector<int> nf = free_indices(inst.n, in0, in1);
    for (int i : nf) {
        std::vector<int> with1 = N1;
        set_insert(with1, i);
        if (!exact_nonempty(inst, prep, N0, with1, budget)) {
            set_insert(res.fixed_zero, i);
            continue;
        }
        std::vector<int> with0 = N0;
        set_insert(with0, i);
        if (!exact_nonempty(inst, prep, with0, N1, budget)) set_insert(res.fixed_one, i);
    }
    std::vector<int> n0 = set_union(N0, res.fixed_zero);
    std::vector<int> n1 = set_union(N1, res.fixed_one);
    Rational residual = inst.epsilon - prob_sum(inst, n1);
    if (residual < Rational(0)) residual = Rational(0);
    res.bounds = node_lower_bounds(inst, prep, mask_of(inst.n, n0),
                                   free_indices(inst.n, mask_of(inst.n, n0), mask_of(inst.n, n1)),
                                   residual);
    return res;
}

bool oracle_nonempty(const CcpInstance& inst, const Preprocessed& prep, const std::vector<int>& N0,
                     const std::vector<int>& N1) {
    const auto& bar = prep.strong.xibar;
    std::vector<char> in0 = mask_of(inst.n, N0), in1 = mask_of(inst.n, N1);
    for (int i = 0; i < inst.n; ++i)
        if (in0[i] && in1[i]) throw std::invalid_argument("N0 and N1 must be disjoint");
    std::vector<int> nf = free_indices(inst.n, in0, in1);
    if (nf.size() > 20) throw std::invalid_argument("oracle_nonempty size limit exceeded");

    Rational base = prob_sum(inst, N1);
    for (std::uint32_t mask = 0; mask < (1u << nf.size()); ++mask) {
        Rational total = base;
        for (size_t b = 0; b < nf.size(); ++b)
            if (mask & (1u << b)) total += inst.probs[nf[b]];
        if (total > inst.epsilon) continue;

        std::vector<double> v(inst.m, 0.0);
        for (int i = 0; i < inst.n; ++i) {
            bool kept = in0[i];
            if (!kept && !in1[i]) {
                size_t b = std::lower_bound(nf.begin(), nf.end(), i) - nf.begin();
                kept = !(mask & (1u << b));
            }
            if (kept)
                for (int k = 0; k < inst.m; ++k) v[k] = std::max(v[k], bar[i][k]);
        }
        bool ok = true;
        for (int i = 0; i < inst.n && ok; ++i) {
            bool one = in1[i];
            if (!one && !in0[i]) {
                size_t b = std::lower_bound(nf.begin(), nf.end(), i) - nf.begin();
                one = (mask & (1u << b)) != 0;
            }
            if (!one) continue;
            bool some_below = false;
            for (int k = 0; k < inst.m && !some_below; ++k)
                if (strictly_less(v[k], bar[i][k])) some_below = true;
            if (!some_below) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace ccps
