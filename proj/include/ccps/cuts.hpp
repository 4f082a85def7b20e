#pragma once

#include <set>
#include <vector>

#include "ccps/instance.hpp"
#include "ccps/preprocess.hpp"

namespace ccps {

/// Star (mixing) inequality for one row k:
///   v_k + sum_j (xibar^{t_j}_k - xibar^{t_{j+1}}_k) z_{t_j} >= xibar^{t_1}_k
/// with the sequence sorted by strictly decreasing xibar_k and the virtual
/// tail value xi0_k.
struct MixingCut {
    int row = -1;
    std::vector<int> sequence;    // t_1, ..., t_a
    std::vector<double> coeffs;   // matching z coefficients, all positive
    double rhs = 0.0;

    double violation(const std::vector<double>& v, const std::vector<double>& z) const;
};

/// Duplicate suppression by (row, sequence) key.
class CutPool {
public:
    bool insert(const MixingCut& cut);  // false when already present
    std::size_t size() const { return keys_.size(); }

private:
    std::set<std::pair<int, std::vector<int>>> keys_;
};

/// Exact most-violated star inequality per row at the LP point: scan
/// scenarios by xibar_k descending and keep the running-minimum z* staircase.
/// Cuts with fewer than two elements duplicate base rows and are skipped.
std::vector<MixingCut> separate_mixing(const CcpInstance& inst, const Preprocessed& prep,
                                       const std::vector<double>& v_lp,
                                       const std::vector<double>& z_lp, int max_cuts,
                                       double min_violation = 1e-6);

/// Enumeration check (n <= 14): the cut holds at every knapsack-feasible
/// support with v = xibar^{S0}.
bool validate_cut(const CcpInstance& inst, const Preprocessed& prep, const MixingCut& cut);

}  // namespace ccps
