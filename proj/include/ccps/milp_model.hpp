#pragma once

#include "ccps/instance.hpp"
#include "ccps/lp.hpp"
#include "ccps/preprocess.hpp"

namespace ccps {

/// Column layout of the node LP: x block, then v block, then z block.
struct MilpLayout {
    int x0 = 0, v0 = 0, z0 = 0;
    int num_cols = 0;
    int x(int j) const { return x0 + j; }
    int v(int k) const { return v0 + k; }
    int z(int i) const { return z0 + i; }
};

/// LP relaxation of the big-M formulation.  strengthened = false keeps the
/// raw rows v_k >= xi^i_k (1 - z_i); strengthened = true uses the
/// preprocessed rows v_k >= xi^i_k - (xi^i_k - xi0_k) z_i with entries at or
/// below the quantile bound dropped and v_k >= xi0_k as bounds.
MilpLayout build_big_m_lp(const CcpInstance& inst, const Preprocessed& prep, bool strengthened,
                          LpModel& lp);

}  // namespace ccps
