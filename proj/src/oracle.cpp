#include "ccps/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccps/lp.hpp"
#include "ccps/milp_model.hpp"

namespace ccps {

MilpLayout build_big_m_lp(const CcpInstance& inst, const Preprocessed& prep, bool strengthened,
                          LpModel& lp) {
    MilpLayout lay;
    lay.x0 = 0;
    for (int j = 0; j < inst.d; ++j) lp.add_col(inst.lower[j], inst.upper[j], inst.c[j]);
    lay.v0 = inst.d;
    for (int k = 0; k < inst.m; ++k)
        lp.add_col(strengthened ? prep.qb.xi0[k] : 0.0, kInf, 0.0);
    lay.z0 = inst.d + inst.m;
    for (int i = 0; i < inst.n; ++i) lp.add_col(0.0, 1.0, 0.0);
    lay.num_cols = inst.d + inst.m + inst.n;

    for (int k = 0; k < inst.m; ++k) {  // Tx - v = 0
        std::vector<std::pair<int, double>> row;
        for (int j = 0; j < inst.d; ++j)
            if (inst.T[k][j] != 0.0) row.emplace_back(lay.x(j), inst.T[k][j]);
        row.emplace_back(lay.v(k), -1.0);
        lp.add_row(row, 0.0, 0.0);
    }
    for (const auto& con : inst.polyX) {
        std::vector<std::pair<int, double>> row;
        for (int j = 0; j < inst.d; ++j)
            if (con.coeffs[j] != 0.0) row.emplace_back(lay.x(j), con.coeffs[j]);
        double lo = -kInf, hi = kInf;
        if (con.sense == Sense::LessEqual) hi = con.rhs;
        else if (con.sense == Sense::GreaterEqual) lo = con.rhs;
        else lo = hi = con.rhs;
        lp.add_row(row, lo, hi);
    }
    for (int i = 0; i < inst.n; ++i) {
        for (int k = 0; k < inst.m; ++k) {
            if (strengthened) {
                const auto& e = prep.strong.entries[i * inst.m + k];
                if (e.dropped) continue;
                lp.add_row({{lay.v(k), 1.0}, {lay.z(i), e.slope}}, e.rhs, kInf);
            } else {
                double xi = inst.scenarios[i][k];
                if (xi <= 0.0) continue;
                lp.add_row({{lay.v(k), 1.0}, {lay.z(i), xi}}, xi, kInf);
            }
        }
    }
    std::vector<std::pair<int, double>> knap;
    for (int i = 0; i < inst.n; ++i) knap.emplace_back(lay.z(i), inst.probs[i].to_double());
    lp.add_row(knap, -kInf, inst.epsilon.to_double());
    return lay;
}

OracleResult brute_force_optimum(const CcpInstance& inst) {
    if (inst.n > 20) throw std::invalid_argument("brute_force_optimum: n > 20");
    OracleResult out;

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
    std::vector<int> cover_row(inst.m);
    for (int k = 0; k < inst.m; ++k) {
        std::vector<std::pair<int, double>> row;
        for (int j = 0; j < inst.d; ++j)
            if (inst.T[k][j] != 0.0) row.emplace_back(j, inst.T[k][j]);
        cover_row[k] = lp.add_row(row, 0.0, kInf);
    }

    Simplex sx;
    Basis warm;
    double best = kInf;
    std::uint32_t best_mask = 0;
    std::vector<double> best_x;
    const std::uint32_t total = 1u << inst.n;
    for (std::uint32_t step = 0; step < total; ++step) {
        std::uint32_t mask = step ^ (step >> 1);  // Gray order keeps the warm basis close
        Rational mass(0);
        for (int i = 0; i < inst.n; ++i)
            if (mask & (1u << i)) mass += inst.probs[i];
        if (mass > inst.epsilon) continue;

        LpMark mark = lp.checkpoint();
        for (int k = 0; k < inst.m; ++k) {
            double b = 0.0;
            for (int i = 0; i < inst.n; ++i)
                if (!(mask & (1u << i))) b = std::max(b, inst.scenarios[i][k]);
            lp.change_row_bounds(cover_row[k], b, kInf);
        }
        LpResult res = sx.solve(lp, warm.empty() ? nullptr : &warm);
        lp.revert_bounds(mark);
        if (res.status == LpStatus::IterLimit) {
            res = sx.solve(lp);  // cold retry without warm basis
        }
        if (res.status == LpStatus::Unbounded) throw std::runtime_error("unbounded support LP");
        if (res.status != LpStatus::Optimal) continue;
        warm = res.basis;
        ++out.feasible_supports;
        if (res.objective < best - 1e-9) {
            best = res.objective;
            best_mask = mask;
            best_x = res.primal;
        }
    }
    if (out.feasible_supports == 0) return out;

    out.objective = best;
    out.solution.x = best_x;
    out.solution.objective = best;
    out.solution.v.assign(inst.m, 0.0);
    for (int k = 0; k < inst.m; ++k) out.solution.v[k] = inst.row_activity(k, best_x);
    out.solution.z.assign(inst.n, 0);
    for (int i = 0; i < inst.n; ++i) {
        if (best_mask & (1u << i)) out.solution.z[i] = 1;
        else out.support0.push_back(i);
    }
    return out;
}

std::pair<double, double> lp_equivalence_probe(const CcpInstance& inst, const DominanceGraph& g) {
    Preprocessed prep;  // raw model: quantile data unused
    prep.qb = quantile_bounds(inst);
    prep.strong = strengthen_coefficients(inst, prep.qb);

    LpModel lp;
    MilpLayout lay = build_big_m_lp(inst, prep, false, lp);
    Simplex sx;
    LpResult plain = sx.solve(lp);
    for (auto [i, j] : g.reduced)  // z_i <= z_j
        lp.add_row({{lay.z(i), 1.0}, {lay.z(j), -1.0}}, -kInf, 0.0);
    LpResult with_rows = sx.solve(lp, &plain.basis);
    return {plain.objective, with_rows.objective};
}

}  // namespace ccps
