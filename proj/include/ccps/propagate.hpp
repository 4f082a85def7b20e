#pragma once

#include <optional>
#include <vector>

#include "ccps/instance.hpp"
#include "ccps/preprocess.hpp"

namespace ccps {

enum class PropagationMode { Off, Approx, Exact };

/// Outcome of overlap-oriented node pruning / variable fixing.
struct ReductionResult {
    bool pruned = false;
    std::vector<int> fixed_zero;       // R0: new fixings to 0 (node indices)
    std::vector<int> fixed_one;        // R1: new fixings to 1
    std::vector<double> bounds;        // xi^{N0,N1}
    int iterations = 0;
    PropagationMode mode = PropagationMode::Approx;
};

struct PropagationTraceStep {
    std::vector<double> bounds;
    std::vector<int> r0, r1;
};

/// Iterative pruning/fixing: knapsack check, lower bounds from the residual
/// budget, prune when some fixed-one scenario is dominated by the bounds,
/// then fix and repeat until a fixed point.
ReductionResult propagate_approx(const CcpInstance& inst, const Preprocessed& prep,
                                 const std::vector<int>& N0, const std::vector<int>& N1,
                                 std::vector<PropagationTraceStep>* trace = nullptr);

struct ExactBudget {
    long node_limit = 10000;  // per auxiliary MILP
    bool exceeded = false;
};

/// Feasibility value of the auxiliary MILP: min sum p_i z_i subject to the
/// witness-selection constraints.  nullopt when the system is structurally
/// empty (some scenario has no candidate strict row).
std::optional<Rational> exact_feasibility_value(const CcpInstance& inst, const Preprocessed& prep,
                                                const std::vector<int>& N0,
                                                const std::vector<int>& N1, ExactBudget& budget);

/// True iff the node set C(N0,N1) is nonempty.  On budget exhaustion sets
/// budget.exceeded and answers true (safe for the caller).
bool exact_nonempty(const CcpInstance& inst, const Preprocessed& prep,
                    const std::vector<int>& N0, const std::vector<int>& N1, ExactBudget& budget);

/// Maximal fixing sets via 2|N_f| auxiliary MILPs; pruned when the node set
/// itself is empty.  Budget exhaustion yields a partial (still valid) result.
ReductionResult exact_fixings(const CcpInstance& inst, const Preprocessed& prep,
                              const std::vector<int>& N0, const std::vector<int>& N1,
                              ExactBudget& budget);

/// Independent brute-force check of C(N0,N1) != empty by enumerating all
/// z-extensions over the free scenarios.  Requires |N_f| <= 20.
bool oracle_nonempty(const CcpInstance& inst, const Preprocessed& prep,
                     const std::vector<int>& N0, const std::vector<int>& N1);

}  // namespace ccps
