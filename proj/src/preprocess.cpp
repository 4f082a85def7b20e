#include "ccps/preprocess.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace ccps {

QuantileBounds quantile_bounds(const CcpInstance& inst) {
    QuantileBounds qb;
    qb.xi0.resize(inst.m);
    qb.tau.resize(inst.m);
    qb.perm.resize(inst.m);
    for (int k = 0; k < inst.m; ++k) {
        std::vector<int>& order = qb.perm[k];
        order.resize(inst.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return inst.scenarios[a][k] > inst.scenarios[b][k];
        });
        Rational acc(0);
        int tau = -1;
        for (int s = 0; s < inst.n; ++s) {
            acc += inst.probs[order[s]];
            if (acc > inst.epsilon) {
                tau = s + 1;
                break;
            }
        }
        // sum p = 1 > eps, so the prefix always closes
        qb.tau[k] = tau;
        qb.xi0[k] = inst.scenarios[order[tau - 1]][k];
    }
    return qb;
}

StrengthenedModel strengthen_coefficients(const CcpInstance& inst, const QuantileBounds& qb) {
    StrengthenedModel sm;
    sm.global_lower = qb.xi0;
    sm.xibar.assign(inst.n, std::vector<double>(inst.m));
    for (int i = 0; i < inst.n; ++i) {
        for (int k = 0; k < inst.m; ++k) {
            double xi = inst.scenarios[i][k];
            sm.xibar[i][k] = std::max(xi, qb.xi0[k]);
            StrengthenedEntry e;
            e.scenario = i;
            e.row = k;
            if (xi <= qb.xi0[k] + kTolFeas) {
                e.dropped = true;
                e.rhs = e.slope = 0.0;
            } else {
                e.dropped = false;
                e.rhs = xi;
                e.slope = xi - qb.xi0[k];
            }
            sm.entries.push_back(e);
        }
    }
    return sm;
}

namespace {

// componentwise a <= b under the feasibility tolerance
bool leq_rows(const std::vector<double>& a, const std::vector<double>& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k] + kTolFeas) return false;
    return true;
}

bool eq_rows(const std::vector<double>& a, const std::vector<double>& b) {
    return leq_rows(a, b) && leq_rows(b, a);
}

}  // namespace

DominanceGraph build_dominance_graph(const CcpInstance& inst, const QuantileBounds& qb,
                                     bool use_bar) {
    DominanceGraph g;
    g.used_bar = use_bar;
    if (use_bar) {
        g.matrix = strengthen_coefficients(inst, qb).xibar;
    } else {
        g.matrix = inst.scenarios;
    }
    int n = inst.n;
    g.below.assign(n, {});
    g.above.assign(n, {});
    for (int i = 0; i < n; ++i) {
        g.below[i].push_back(i);
        g.above[i].push_back(i);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!leq_rows(g.matrix[i], g.matrix[j])) continue;
            if (eq_rows(g.matrix[i], g.matrix[j]) && i > j) continue;  // orient equals by index
            g.pairs.emplace_back(i, j);
            g.below[j].push_back(i);
            g.above[i].push_back(j);
        }
    }
    for (auto& s : g.below) std::sort(s.begin(), s.end());
    for (auto& s : g.above) std::sort(s.begin(), s.end());
    return g;
}

void transitive_reduction(DominanceGraph& g) {
    g.reduced.clear();
    const auto& mat = g.matrix;
    int n = (int)mat.size();

    // group equal scenario rows; chain each group by index
    std::vector<int> group(n, -1);
    std::vector<std::vector<int>> members;
    for (int i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        group[i] = (int)members.size();
        members.push_back({i});
        for (int j = i + 1; j < n; ++j)
            if (group[j] < 0 && eq_rows(mat[i], mat[j])) {
                group[j] = group[i];
                members.back().push_back(j);
            }
    }
    for (const auto& grp : members)
        for (size_t t = 0; t + 1 < grp.size(); ++t)
            g.reduced.emplace_back(grp[t], grp[t + 1]);

    // cross-class edges kept unless some strictly-between class exists
    for (auto [i, j] : g.pairs) {
        if (group[i] == group[j]) continue;
        if (members[group[i]].back() != i || members[group[j]].front() != j)
            continue;  // connect chains top-to-bottom only
        bool middled = false;
        for (int s = 0; s < n && !middled; ++s) {
            if (group[s] == group[i] || group[s] == group[j]) continue;
            if (leq_rows(mat[i], mat[s]) && leq_rows(mat[s], mat[j])) middled = true;
        }
        if (!middled) g.reduced.emplace_back(i, j);
    }
    std::sort(g.reduced.begin(), g.reduced.end());
}

void dump_dominance(const DominanceGraph& g, int n, std::ostream& out) {
    for (auto [i, j] : g.pairs) out << (i + 1) << " -> " << (j + 1) << "\n";
    double mdp = n * (n - 1) / 2.0;
    out << "#DP " << g.pairs.size() << "\n";
    out << "#NDI " << g.reduced.size() << "\n";
    out << "%DP " << (mdp > 0 ? 100.0 * g.pairs.size() / mdp : 0.0) << "\n";
    out << "%NDI " << (mdp > 0 ? 100.0 * g.reduced.size() / mdp : 0.0) << "\n";
}

Preprocessed preprocess(const CcpInstance& inst) {
    Preprocessed p;
    p.qb = quantile_bounds(inst);
    p.strong = strengthen_coefficients(inst, p.qb);
    p.graph = build_dominance_graph(inst, p.qb, true);
    transitive_reduction(p.graph);
    return p;
}

}  // namespace ccps
