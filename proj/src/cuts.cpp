#include "ccps/cuts.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccps {

double MixingCut::violation(const std::vector<double>& v, const std::vector<double>& z) const {
    double lhs = v[row];
    for (size_t t = 0; t < sequence.size(); ++t) lhs += coeffs[t] * z[sequence[t]];
    return rhs - lhs;
}

bool CutPool::insert(const MixingCut& cut) {
    return keys_.insert({cut.row, cut.sequence}).second;
}

std::vector<MixingCut> separate_mixing(const CcpInstance& inst, const Preprocessed& prep,
                                       const std::vector<double>& v_lp,
                                       const std::vector<double>& z_lp, int max_cuts,
                                       double min_violation) {
    const auto& bar = prep.strong.xibar;
    std::vector<MixingCut> found;
    for (int k = 0; k < inst.m; ++k) {
        std::vector<int> order;
        for (int i = 0; i < inst.n; ++i)
            if (bar[i][k] > prep.qb.xi0[k] + kTolFeas) order.push_back(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return bar[a][k] > bar[b][k]; });
        std::vector<int> seq;
        double zmin = 1.0;
        for (int i : order) {
            if (z_lp[i] >= zmin - 1e-9) continue;
            if (!seq.empty() && bar[i][k] >= bar[seq.back()][k] - kTolFeas)
                seq.back() = i;  // same level: keep the smaller z*
            else
                seq.push_back(i);
            zmin = z_lp[i];
        }
        if (seq.size() < 2) continue;  // singleton duplicates the base row
        MixingCut cut;
        cut.row = k;
        cut.sequence = seq;
        cut.rhs = bar[seq.front()][k];
        for (size_t t = 0; t < seq.size(); ++t) {
            double next = (t + 1 < seq.size()) ? bar[seq[t + 1]][k] : prep.qb.xi0[k];
            cut.coeffs.push_back(bar[seq[t]][k] - next);
        }
        if (cut.violation(v_lp, z_lp) > min_violation) found.push_back(std::move(cut));
    }
    std::sort(found.begin(), found.end(), [&](const MixingCut& a, const MixingCut& b) {
        return a.violation(v_lp, z_lp) > b.violation(v_lp, z_lp);
    });
    if ((int)found.size() > max_cuts) found.resize(max_cuts);
    return found;
}

bool validate_cut(const CcpInstance& inst, const Preprocessed& prep, const MixingCut& cut) {
    if (inst.n > 14) throw std::invalid_argument("validate_cut size limit exceeded");
    const auto& bar = prep.strong.xibar;
    for (std::uint32_t mask = 0; mask < (1u << inst.n); ++mask) {
        Rational total(0);
        for (int i = 0; i < inst.n; ++i)
            if (mask & (1u << i)) total += inst.probs[i];
        if (total > inst.epsilon) continue;
        std::vector<double> v = prep.qb.xi0;
        for (int i = 0; i < inst.n; ++i)
            if (!(mask & (1u << i)))
                for (int k = 0; k < inst.m; ++k) v[k] = std::max(v[k], bar[i][k]);
        std::vector<double> z(inst.n, 0.0);
        for (int i = 0; i < inst.n; ++i)
            if (mask & (1u << i)) z[i] = 1.0;
        if (cut.violation(v, z) > kTolFeas) return false;
    }
    return true;
}

}  // namespace ccps
