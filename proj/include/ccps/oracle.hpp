#pragma once

#include <optional>
#include <vector>

#include "ccps/instance.hpp"
#include "ccps/preprocess.hpp"

namespace ccps {

struct OracleResult {
    std::optional<double> objective;  // nullopt when infeasible
    std::vector<int> support0;        // kept scenarios (z_i = 0) of the argmin
    long feasible_supports = 0;
    CandidateSolution solution;       // populated when feasible
};

/// Ground truth by support enumeration: every z with sum p_i z_i <= eps,
/// one LP  min c'x  s.t. Tx >= xi^{S0}, x in X  per support.  n <= 20.
OracleResult brute_force_optimum(const CcpInstance& inst);

/// LP relaxation optimum of the raw big-M model with and without the
/// dominance-inequality rows z_i <= z_j of the given graph.
std::pair<double, double> lp_equivalence_probe(const CcpInstance& inst, const DominanceGraph& g);

}  // namespace ccps
