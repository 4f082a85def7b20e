#include "ccps/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>

#include "ccps/cuts.hpp"
#include "ccps/milp_model.hpp"

namespace ccps {

namespace {
constexpr double kPruneEps = 1e-9;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "OPTIMAL";
        case SolveStatus::Infeasible: return "INFEASIBLE";
        case SolveStatus::TimeLimit: return "TIME_LIMIT";
        case SolveStatus::NodeLimit: return "NODE_LIMIT";
        default: return "GAP_LIMIT";
    }
}

double SolveReport::gap() const {
    if (primal_bound == kInf || dual_bound == -kInf) return kInf;
    if (std::abs(primal_bound - dual_bound) <= 1e-9 * (1.0 + std::abs(primal_bound))) return 0.0;
    if (primal_bound * dual_bound <= 0.0) return kInf;
    return (primal_bound - dual_bound) / std::min(std::abs(primal_bound), std::abs(dual_bound)) *
           100.0;
}

SolverConfig SolverConfig::replay_figure(int figure) {
    SolverConfig cfg;
    cfg.replay = true;
    cfg.node_select = NodeSelect::Dfs;
    cfg.branch_rule = BranchRule::MostInfeasible;
    cfg.cuts = CutMode::Off;
    cfg.rc_fixing = false;
    cfg.heuristics = false;
    switch (figure) {
        case 1:
            cfg.branching = Branching::Classic;
            cfg.propagation = PropagationMode::Off;
            break;
        case 2:
            cfg.branching = Branching::Dominance;
            cfg.propagation = PropagationMode::Off;
            break;
        case 3:
            cfg.branching = Branching::Dominance;
            cfg.propagation = PropagationMode::Approx;
            break;
        default:
            throw std::invalid_argument("replay figure must be 1, 2 or 3");
    }
    return cfg;
}

int select_branch_var(const std::vector<double>& z, const std::vector<char>& free_mask,
                      BranchRule rule, const std::vector<double>* pc_score) {
    int n = (int)z.size();
    int best = -1;
    double best_primary = kInf;   // most-infeasible distance, smaller = better
    double best_secondary = -kInf;
    for (int i = 0; i < n; ++i) {
        if (!free_mask[i]) continue;
        if (z[i] <= kTolInt || z[i] >= 1.0 - kTolInt) continue;
        double dist = std::abs(z[i] - 0.5);
        if (rule == BranchRule::Pseudocost && pc_score) {
            double score = (*pc_score)[i];
            if (score > best_secondary + 1e-12 ||
                (score > best_secondary - 1e-12 && dist < best_primary - 1e-12)) {
                best_secondary = score;
                best_primary = dist;
                best = i;
            }
        } else {
            if (dist < best_primary - 1e-12) {
                best_primary = dist;
                best = i;
            }
        }
    }
    return best;
}

std::pair<NodeState, NodeState> make_children(const NodeState& node, int j,
                                              const DominanceGraph& g, Branching mode) {
    NodeState left, right;
    left.parent = right.parent = node.id;
    left.depth = right.depth = node.depth + 1;
    left.dual_bound = right.dual_bound = node.dual_bound;
    left.B0 = node.B0;
    set_insert(left.B0, j);
    left.B1 = node.B1;
    right.B0 = node.B0;
    right.B1 = node.B1;
    set_insert(right.B1, j);
    left.N1 = node.N1;
    right.N0 = node.N0;
    if (mode == Branching::Dominance) {
        left.N0 = set_union(node.N0, g.below[j]);
        right.N1 = set_union(node.N1, g.above[j]);
    } else {
        left.N0 = node.N0;
        set_insert(left.N0, j);
        right.N1 = node.N1;
        set_insert(right.N1, j);
    }
    return {left, right};
}

std::optional<CandidateSolution> incumbent_heuristic(const CcpInstance& inst,
                                                     const Preprocessed& prep,
                                                     const std::vector<double>& z_lp) {
    std::vector<int> order(inst.n);
    for (int i = 0; i < inst.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return z_lp[a] > z_lp[b]; });
    std::vector<int> zvals(inst.n, 0);
    Rational mass(0);
    for (int i : order) {
        if (mass + inst.probs[i] <= inst.epsilon) {
            mass += inst.probs[i];
            zvals[i] = 1;
        }
    }
    std::vector<double> vreq = prep.qb.xi0;
    for (int i = 0; i < inst.n; ++i)
        if (zvals[i] == 0)
            for (int k = 0; k < inst.m; ++k)
                vreq[k] = std::max(vreq[k], prep.strong.xibar[i][k]);

    LpModel lp;
    for (int j = 0; j < inst.d; ++j) lp.add_col(inst.lower[j], inst.upper[j], inst.c[j]);
    for (const auto& con : inst.polyX) {
        std::vector<std::pair<int, double>> row;
        for (int j = 0; j < inst.d; ++j)
            if (con.coeffs[j] != 0.0) row.emplace_back(j, con.coeffs[j]);
        double lo = -kInf, hi = kInf;
        if (con.sense == Sense::LessEqual) hi = con.rhs;
        else if (con.sense == Sense::GreaterEqual) lo = con.rhs;
        else lo = hi = con.rhs;
        lp.add_row(row, lo, hi);
    }
    for (int k = 0; k < inst.m; ++k) {
        std::vector<std::pair<int, double>> row;
        for (int j = 0; j < inst.d; ++j)
            if (inst.T[k][j] != 0.0) row.emplace_back(j, inst.T[k][j]);
        lp.add_row(row, vreq[k], kInf);
    }
    Simplex sx;
    LpResult res = sx.solve(lp);
    if (res.status != LpStatus::Optimal) return std::nullopt;

    CandidateSolution cand;
    cand.x = res.primal;
    cand.v.resize(inst.m);
    for (int k = 0; k < inst.m; ++k) cand.v[k] = inst.row_activity(k, res.primal);
    cand.z = zvals;
    cand.objective = res.objective;
    if (!check_feasible(inst, cand).feasible) return std::nullopt;
    return cand;
}

// ---------------------------------------------------------------------------

namespace {

// Replay-mode canonical alternative optimum: rebuild z from the LP's v so the
// branching decision does not depend on which optimal vertex the LP landed
// on.  Row-implied lower bounds first, then violate scenarios greedily by
// uncovered mass, the first non-fitting scenario absorbing the residual.
std::vector<double> canonical_branch_point(const CcpInstance& inst, const NodeState& node,
                                           const std::vector<double>& v_lp) {
    int n = inst.n;
    std::vector<char> in0(n, 0), in1(n, 0);
    for (int i : node.N0) in0[i] = 1;
    for (int i : node.N1) in1[i] = 1;
    std::vector<double> z(n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (in1[i]) { z[i] = 1.0; continue; }
        if (in0[i]) continue;
        double zi = 0.0;
        for (int k = 0; k < inst.m; ++k) {
            double xi = inst.scenarios[i][k];
            if (xi > kTolFeas) zi = std::max(zi, 1.0 - v_lp[k] / xi);
        }
        z[i] = std::clamp(zi, 0.0, 1.0);
    }
    double budget = inst.epsilon.to_double();
    for (int i = 0; i < n; ++i) budget -= inst.probs[i].to_double() * z[i];
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (!in0[i] && !in1[i]) order.push_back(i);
    std::vector<double> uncovered(n, 0.0);
    for (int i : order)
        for (int k = 0; k < inst.m; ++k)
            uncovered[i] += std::max(0.0, inst.scenarios[i][k] - v_lp[k]);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return uncovered[a] > uncovered[b]; });
    for (int i : order) {
        double p = inst.probs[i].to_double();
        double need = p * (1.0 - z[i]);
        if (need <= budget + 1e-12) {
            budget -= need;
            z[i] = 1.0;
        } else {
            if (p > 0) z[i] += budget / p;
            break;
        }
    }
    return z;
}

struct NodeOrder {
    bool operator()(const NodeState& a, const NodeState& b) const {
        if (a.dual_bound != b.dual_bound) return a.dual_bound > b.dual_bound;
        return a.id > b.id;
    }
};

class Engine {
public:
    Engine(const CcpInstance& inst, const Preprocessed& prep, const SolverConfig& cfg)
        : inst_(inst), prep_(prep), cfg_(cfg) {
        layout_ = build_big_m_lp(inst, prep, !cfg.replay, lp_);
        root_mark_ = lp_.checkpoint();
        if (!cfg.trace_path.empty()) trace_.open(cfg.trace_path);
        pc_up_sum_.assign(inst.n, 0.0);
        pc_up_cnt_.assign(inst.n, 0);
        pc_down_sum_.assign(inst.n, 0.0);
        pc_down_cnt_.assign(inst.n, 0);
    }

    SolveReport run() {
        auto t0 = std::chrono::steady_clock::now();
        if (cfg_.inject_incumbent) primal_bound_ = *cfg_.inject_incumbent;

        NodeState root;
        root.id = next_id_++;
        root.dual_bound = -kInf;
        push_node(std::move(root));

        while (have_nodes()) {
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (elapsed > cfg_.time_limit) { report_.status = SolveStatus::TimeLimit; break; }
            if (report_.nodes_explored >= cfg_.node_limit) { report_.status = SolveStatus::NodeLimit; break; }
            if (cfg_.gap_limit > 0.0 && gap_now() <= cfg_.gap_limit) {
                report_.status = SolveStatus::GapLimit;
                break;
            }
            NodeState node = pop_node();
            process(node);
        }
        if (!have_nodes() && report_.status == SolveStatus::NodeLimit) {
            // queue exhausted normally
            report_.status = incumbent_ || primal_bound_ < kInf ? SolveStatus::Optimal
                                                                : SolveStatus::Infeasible;
            if (report_.status == SolveStatus::Optimal) dual_bound_open_ = primal_bound_;
        }
        report_.primal_bound = primal_bound_;
        report_.dual_bound = report_.status == SolveStatus::Optimal ? primal_bound_
                                                                    : open_dual_bound();
        report_.incumbent = incumbent_;
        report_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.fixings_per_node =
            report_.nodes_explored
                ? double(report_.overlap_fixings + report_.dominance_fixings) / report_.nodes_explored
                : 0.0;
        return report_;
    }

private:
    const CcpInstance& inst_;
    const Preprocessed& prep_;
    const SolverConfig& cfg_;
    LpModel lp_;
    MilpLayout layout_;
    LpMark root_mark_;
    Simplex sx_;
    CutPool pool_;
    SolveReport report_;
    std::ofstream trace_;

    double primal_bound_ = kInf;
    std::optional<CandidateSolution> incumbent_;
    long next_id_ = 1;
    double dual_bound_open_ = -kInf;

    std::vector<NodeState> dfs_stack_;
    std::priority_queue<NodeState, std::vector<NodeState>, NodeOrder> heap_;

    std::vector<double> pc_up_sum_, pc_down_sum_;
    std::vector<int> pc_up_cnt_, pc_down_cnt_;
    struct PendingPc {
        int var = -1;
        bool up = false;
        double frac = 0.0;
        double parent_obj = 0.0;
    };

    bool have_nodes() const { return cfg_.node_select == NodeSelect::Dfs ? !dfs_stack_.empty() : !heap_.empty(); }
    void push_node(NodeState n) {
        if (cfg_.node_select == NodeSelect::Dfs) dfs_stack_.push_back(std::move(n));
        else heap_.push(std::move(n));
    }
    NodeState pop_node() {
        if (cfg_.node_select == NodeSelect::Dfs) {
            NodeState n = std::move(dfs_stack_.back());
            dfs_stack_.pop_back();
            return n;
        }
        NodeState n = heap_.top();
        heap_.pop();
        return n;
    }
    double open_dual_bound() const {
        double lb = primal_bound_ == kInf ? -kInf : primal_bound_;
        if (cfg_.node_select == NodeSelect::Dfs) {
            for (const auto& n : dfs_stack_) lb = std::min(lb, n.dual_bound);
        } else if (!heap_.empty()) {
            lb = std::min(lb, heap_.top().dual_bound);
        }
        return lb;
    }
    double gap_now() const {
        SolveReport tmp;
        tmp.primal_bound = primal_bound_;
        tmp.dual_bound = open_dual_bound();
        return tmp.gap();
    }

    void log(const NodeState& node, const char* action, double obj, int var, int side) {
        if (!trace_.is_open()) return;
        trace_ << node.id << " " << (node.parent ? *node.parent : -1) << " "
               << (side == 0 ? "L" : side == 1 ? "R" : "-") << " "
               << (var >= 0 ? std::to_string(var + 1) : "-") << " " << node.N0.size() << " "
               << node.N1.size() << " " << obj << " " << action << "\n";
    }

    void apply_node_bounds(const NodeState& node) {
        lp_.revert_bounds(root_mark_);
        for (int i : node.N0) lp_.change_col_bounds(layout_.z(i), 0.0, 0.0);
        for (int i : node.N1) lp_.change_col_bounds(layout_.z(i), 1.0, 1.0);
    }

    LpResult solve_node_lp(const NodeState& node) {
        LpResult res = sx_.solve(lp_, node.basis_hint.empty() ? nullptr : &node.basis_hint);
        if (res.status == LpStatus::IterLimit) {
            ++report_.numerical_failures;
            res = sx_.solve(lp_);  // cold restart
        }
        if (res.status == LpStatus::IterLimit &&
            lp_.num_cols() + lp_.num_rows() <= 600) {
            ++report_.numerical_failures;
            res = Simplex::solve_exact(lp_);  // exact-rational pivoting
        }
        return res;
    }

    bool propagate_node(NodeState& node, const char* /*why*/) {
        auto t0 = std::chrono::steady_clock::now();
        bool pruned = false;
        ReductionResult red;
        if (cfg_.propagation == PropagationMode::Approx) {
            red = propagate_approx(inst_, prep_, node.N0, node.N1);
        } else {
            ExactBudget budget;
            budget.node_limit = cfg_.exact_prop_node_budget;
            red = exact_fixings(inst_, prep_, node.N0, node.N1, budget);
        }
        if (red.pruned) {
            pruned = true;
        } else {
            report_.overlap_fixings += (long)red.fixed_zero.size() + (long)red.fixed_one.size();
            node.N0 = set_union(node.N0, red.fixed_zero);
            node.N1 = set_union(node.N1, red.fixed_one);
            node.local_lower = red.bounds;
        }
        report_.propagation_time +=
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return pruned;
    }

    void update_incumbent(const CandidateSolution& cand) {
        if (cand.objective < primal_bound_ - kPruneEps) {
            primal_bound_ = cand.objective;
            incumbent_ = cand;
        }
    }

    void process(NodeState& node) {
        ++report_.nodes_explored;

        std::vector<int> conflict;
        std::set_intersection(node.N0.begin(), node.N0.end(), node.N1.begin(), node.N1.end(),
                              std::back_inserter(conflict));
        if (!conflict.empty()) {
            ++report_.pruned_infeasible;
            log(node, "pruned-infeasible", node.dual_bound, -1, -1);
            return;
        }
        if (node.dual_bound >= primal_bound_ - kPruneEps) {
            ++report_.pruned_bound;
            log(node, "pruned-bound", node.dual_bound, -1, -1);
            return;
        }
        if (cfg_.propagation != PropagationMode::Off) {
            if (propagate_node(node, "create")) {
                ++report_.pruned_overlap;
                log(node, "pruned-overlap", node.dual_bound, -1, -1);
                return;
            }
        }

        apply_node_bounds(node);
        LpResult res = solve_node_lp(node);
        if (res.status == LpStatus::Infeasible) {
            ++report_.pruned_infeasible;
            log(node, "pruned-infeasible", 0.0, -1, -1);
            return;
        }
        if (res.status == LpStatus::Unbounded)
            throw std::runtime_error("node LP unbounded; the instance is not bounded below");
        if (res.status == LpStatus::IterLimit) {
            // keep the node alive conservatively with its inherited bound
            ++report_.pruned_infeasible;
            log(node, "lp-failure", 0.0, -1, -1);
            return;
        }
        node.dual_bound = std::max(node.dual_bound, res.objective);
        update_pseudocost(node, res.objective);

        if (node.dual_bound >= primal_bound_ - kPruneEps) {
            ++report_.pruned_bound;
            log(node, "pruned-bound", res.objective, -1, -1);
            return;
        }

        if (cfg_.cuts == CutMode::Mixing && !cfg_.replay) {
            if (!cut_rounds(node, res)) return;  // pruned inside
        }
        if (cfg_.rc_fixing && !cfg_.replay && primal_bound_ < kInf) {
            if (!rc_fixing_rounds(node, res)) return;
        }
        if (cfg_.heuristics && !cfg_.replay) {
            std::vector<double> zpart(res.primal.begin() + layout_.z0, res.primal.end());
            auto cand = incumbent_heuristic(inst_, prep_, zpart);
            if (cand) update_incumbent(*cand);
            if (node.dual_bound >= primal_bound_ - kPruneEps) {
                ++report_.pruned_bound;
                log(node, "pruned-bound", res.objective, -1, -1);
                return;
            }
        }

        // integrality
        bool integral = true;
        for (int i = 0; i < inst_.n && integral; ++i) {
            double zi = res.primal[layout_.z(i)];
            if (zi > kTolInt && zi < 1.0 - kTolInt) integral = false;
        }
        if (integral) {
            CandidateSolution cand;
            cand.x.assign(res.primal.begin(), res.primal.begin() + inst_.d);
            cand.v.resize(inst_.m);
            for (int k = 0; k < inst_.m; ++k) cand.v[k] = inst_.row_activity(k, cand.x);
            cand.z.resize(inst_.n);
            for (int i = 0; i < inst_.n; ++i)
                cand.z[i] = res.primal[layout_.z(i)] > 0.5 ? 1 : 0;
            cand.objective = res.objective;
            if (check_feasible(inst_, cand).feasible) update_incumbent(cand);
            log(node, "integer-feasible", res.objective, -1, -1);
            return;
        }

        // branching
        std::vector<double> zpart(inst_.n);
        for (int i = 0; i < inst_.n; ++i) zpart[i] = res.primal[layout_.z(i)];
        if (cfg_.replay) {
            std::vector<double> vpart(res.primal.begin() + layout_.v0,
                                      res.primal.begin() + layout_.v0 + inst_.m);
            zpart = canonical_branch_point(inst_, node, vpart);
        }
        std::vector<char> free_mask(inst_.n, 1);
        for (int i : node.N0) free_mask[i] = 0;
        for (int i : node.N1) free_mask[i] = 0;
        std::vector<double> pc_scores;
        if (cfg_.branch_rule == BranchRule::Pseudocost) pc_scores = pseudocost_scores(zpart);
        int j = select_branch_var(zpart, free_mask, cfg_.branch_rule,
                                  pc_scores.empty() ? nullptr : &pc_scores);
        if (j < 0) {
            // fractional only in fixed entries: numerically integral node
            log(node, "integer-feasible", res.objective, -1, -1);
            return;
        }
        auto [left, right] = make_children(node, j, prep_.graph, cfg_.branching);
        left.id = next_id_++;
        right.id = next_id_++;
        left.basis_hint = res.basis;
        right.basis_hint = res.basis;
        left.dual_bound = right.dual_bound = node.dual_bound;
        report_.dominance_fixings += (long)(left.N0.size() - node.N0.size() - 1) +
                                     (long)(right.N1.size() - node.N1.size() - 1);
        pending_[left.id] = {j, false, zpart[j], res.objective};
        pending_[right.id] = {j, true, zpart[j], res.objective};
        log(node, "branched", res.objective, j, -1);
        // dfs: left explored first
        push_node(std::move(right));
        push_node(std::move(left));
    }

    // at most 10 rounds at the root, 2 elsewhere
    bool cut_rounds(NodeState& node, LpResult& res) {
        int rounds = node.depth == 0 ? 10 : 2;
        for (int round = 0; round < rounds; ++round) {
            std::vector<double> vpart(res.primal.begin() + layout_.v0,
                                      res.primal.begin() + layout_.v0 + inst_.m);
            std::vector<double> zpart(res.primal.begin() + layout_.z0, res.primal.end());
            auto cuts = separate_mixing(inst_, prep_, vpart, zpart, 2 * inst_.m);
            int added = 0;
            for (const auto& cut : cuts) {
                if (!pool_.insert(cut)) continue;
                std::vector<std::pair<int, double>> row;
                row.emplace_back(layout_.v(cut.row), 1.0);
                for (size_t t = 0; t < cut.sequence.size(); ++t)
                    row.emplace_back(layout_.z(cut.sequence[t]), cut.coeffs[t]);
                lp_.add_row(row, cut.rhs, kInf);
                ++added;
            }
            if (!added) break;
            Basis warm = res.basis;
            res = sx_.solve(lp_, &warm);
            if (res.status == LpStatus::IterLimit) res = solve_node_lp(node);
            if (res.status == LpStatus::Infeasible) {
                ++report_.pruned_infeasible;
                log(node, "pruned-infeasible", 0.0, -1, -1);
                return false;
            }
            if (res.status != LpStatus::Optimal) return true;
            node.dual_bound = std::max(node.dual_bound, res.objective);
            if (node.dual_bound >= primal_bound_ - kPruneEps) {
                ++report_.pruned_bound;
                log(node, "pruned-bound", res.objective, -1, -1);
                return false;
            }
        }
        return true;
    }

    bool rc_fixing_rounds(NodeState& node, LpResult& res) {
        for (int round = 0; round < 5; ++round) {
            int fixed = 0;
            for (int i = 0; i < inst_.n; ++i) {
                if (set_contains(node.N0, i) || set_contains(node.N1, i)) continue;
                int col = layout_.z(i);
                double zi = res.primal[col];
                double dj = res.reduced_costs[col];
                if (zi <= kTolInt && dj > 0 && res.objective + dj >= primal_bound_ - kPruneEps) {
                    set_insert(node.N0, i);
                    ++fixed;
                } else if (zi >= 1.0 - kTolInt && dj < 0 &&
                           res.objective - dj >= primal_bound_ - kPruneEps) {
                    set_insert(node.N1, i);
                    ++fixed;
                }
            }
            if (!fixed) return true;
            report_.rc_fixings += fixed;
            if (cfg_.propagation != PropagationMode::Off) {
                if (propagate_node(node, "rc")) {
                    ++report_.pruned_overlap;
                    log(node, "pruned-overlap", node.dual_bound, -1, -1);
                    return false;
                }
            }
            apply_node_bounds(node);
            Basis warm = res.basis;
            res = sx_.solve(lp_, &warm);
            if (res.status == LpStatus::IterLimit) res = solve_node_lp(node);
            if (res.status == LpStatus::Infeasible) {
                ++report_.pruned_infeasible;
                log(node, "pruned-infeasible", 0.0, -1, -1);
                return false;
            }
            if (res.status != LpStatus::Optimal) return true;
            node.dual_bound = std::max(node.dual_bound, res.objective);
            if (node.dual_bound >= primal_bound_ - kPruneEps) {
                ++report_.pruned_bound;
                log(node, "pruned-bound", res.objective, -1, -1);
                return false;
            }
        }
        return true;
    }

    std::map<long, PendingPc> pending_;

    void update_pseudocost(const NodeState& node, double obj) {
        auto it = pending_.find(node.id);
        if (it == pending_.end()) return;
        const PendingPc& p = it->second;
        double gain = std::max(0.0, obj - p.parent_obj);
        if (p.up) {
            double move = std::max(1.0 - p.frac, kTolInt);
            pc_up_sum_[p.var] += gain / move;
            pc_up_cnt_[p.var] += 1;
        } else {
            double move = std::max(p.frac, kTolInt);
            pc_down_sum_[p.var] += gain / move;
            pc_down_cnt_[p.var] += 1;
        }
        pending_.erase(it);
    }

    std::vector<double> pseudocost_scores(const std::vector<double>& z) const {
        double gup = 0, gdn = 0;
        long cup = 0, cdn = 0;
        for (int i = 0; i < inst_.n; ++i) {
            gup += pc_up_sum_[i];
            cup += pc_up_cnt_[i];
            gdn += pc_down_sum_[i];
            cdn += pc_down_cnt_[i];
        }
        double def_up = cup ? gup / cup : 1.0;
        double def_dn = cdn ? gdn / cdn : 1.0;
        std::vector<double> score(inst_.n, 0.0);
        for (int i = 0; i < inst_.n; ++i) {
            double up = pc_up_cnt_[i] ? pc_up_sum_[i] / pc_up_cnt_[i] : def_up;
            double dn = pc_down_cnt_[i] ? pc_down_sum_[i] / pc_down_cnt_[i] : def_dn;
            double f = z[i];
            score[i] = std::max(up * (1.0 - f), 1e-6) * std::max(dn * f, 1e-6);
        }
        return score;
    }
};

}  // namespace

SolveReport solve(const CcpInstance& inst, const Preprocessed& prep, const SolverConfig& cfg) {
    Engine engine(inst, prep, cfg);
    return engine.run();
}

SolveReport solve(const CcpInstance& inst, const SolverConfig& cfg) {
    Preprocessed prep = preprocess(inst);
    return solve(inst, prep, cfg);
}

}  // namespace ccps
