#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccps/instance.hpp"
#include "ccps/node.hpp"
#include "ccps/preprocess.hpp"
#include "ccps/propagate.hpp"

namespace ccps {

enum class Branching { Classic, Dominance };
enum class CutMode { Off, Mixing };
enum class NodeSelect { BestBound, Dfs };
enum class BranchRule { MostInfeasible, Pseudocost };
enum class SolveStatus { Optimal, Infeasible, TimeLimit, NodeLimit, GapLimit };

struct SolverConfig {
    Branching branching = Branching::Dominance;
    PropagationMode propagation = PropagationMode::Approx;
    CutMode cuts = CutMode::Mixing;
    NodeSelect node_select = NodeSelect::BestBound;
    BranchRule branch_rule = BranchRule::MostInfeasible;
    double time_limit = 3600.0;
    long node_limit = 50'000'000;
    double gap_limit = 0.0;  // relative gap percent; 0 = solve to proven optimality
    std::uint64_t rng_seed = 0;
    bool rc_fixing = true;
    bool heuristics = true;
    long exact_prop_node_budget = 10000;

    // Replay preset: raw big-M node LPs, dfs left-first, most-infeasible with
    // lowest-index ties, canonical branching vertex, prune at equality, no
    // cuts / reduced-cost fixing / heuristics.
    bool replay = false;
    std::optional<double> inject_incumbent;

    std::string trace_path;  // optional node-trace log

    static SolverConfig replay_figure(int figure);  // 1, 2 or 3
};

struct SolveReport {
    SolveStatus status = SolveStatus::NodeLimit;
    double primal_bound = kInf;
    double dual_bound = -kInf;
    std::optional<CandidateSolution> incumbent;
    long nodes_explored = 0;
    double fixings_per_node = 0.0;  // dominance-branching + overlap fixings per node
    long overlap_fixings = 0;
    long dominance_fixings = 0;
    long rc_fixings = 0;
    long pruned_bound = 0;
    long pruned_infeasible = 0;
    long pruned_overlap = 0;
    long numerical_failures = 0;
    double wall_time = 0.0;
    double propagation_time = 0.0;

    /// Relative gap in percent: (UB-LB)/min(|UB|,|LB|)*100 when LB*UB > 0,
    /// infinity otherwise; 0 exactly when the bounds coincide.
    double gap() const;
};

SolveReport solve(const CcpInstance& inst, const SolverConfig& cfg);
SolveReport solve(const CcpInstance& inst, const Preprocessed& prep, const SolverConfig& cfg);

/// Most-infeasible / pseudocost selection over the fractional free z.
/// Returns -1 when no fractional entry exists.
int select_branch_var(const std::vector<double>& z, const std::vector<char>& free_mask,
                      BranchRule rule, const std::vector<double>* pc_score = nullptr);

/// Left/right children for branching on z_j: classic adds the single index,
/// dominance adds the full below/above set of j.
std::pair<NodeState, NodeState> make_children(const NodeState& node, int j,
                                              const DominanceGraph& g, Branching mode);

/// Rounding heuristic: violate scenarios greedily by LP value under the exact
/// knapsack, cover the rest, re-solve the x-LP.  Empty on failure.
std::optional<CandidateSolution> incumbent_heuristic(const CcpInstance& inst,
                                                     const Preprocessed& prep,
                                                     const std::vector<double>& z_lp);

const char* to_string(SolveStatus s);

}  // namespace ccps
