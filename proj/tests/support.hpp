#pragma once

// Shared helpers for the unit and acceptance suites.

#include <cstdint>
#include <vector>

#include "ccps/instance.hpp"
#include "ccps/lp.hpp"
#include "ccps/toolkit.hpp"

namespace ccps::testing {

/// Small random CCP used to compare the solver against brute force: bounded
/// box X, nonnegative integer-ish data, scenarios on a half-integral grid so
/// ties and dominance pairs actually occur.
inline CcpInstance random_small_instance(std::uint64_t seed, int max_n = 12, int max_m = 4,
                                         int max_d = 4) {
    Rng rng(seed);
    CcpInstance inst;
    inst.name = "rand" + std::to_string(seed);
    inst.d = (int)rng.uniform_int(2, max_d);
    inst.m = (int)rng.uniform_int(1, max_m);
    inst.n = (int)rng.uniform_int(4, max_n);
    inst.c.resize(inst.d);
    for (auto& v : inst.c) v = (double)rng.uniform_int(1, 9);
    inst.T.assign(inst.m, std::vector<double>(inst.d, 0.0));
    for (int k = 0; k < inst.m; ++k) {
        bool has = false;
        for (int j = 0; j < inst.d; ++j) {
            inst.T[k][j] = (double)rng.uniform_int(0, 3);
            if (inst.T[k][j] > 0) has = true;
        }
        if (!has) inst.T[k][rng.uniform_int(0, inst.d - 1)] = (double)rng.uniform_int(1, 3);
    }
    inst.lower.assign(inst.d, 0.0);
    inst.upper.resize(inst.d);
    for (auto& u : inst.upper) u = (double)rng.uniform_int(3, 8);
    if (rng.uniform_int(0, 2) == 0) {
        LinearConstraint con;
        con.coeffs.assign(inst.d, 1.0);
        double total = 0.0;
        for (double u : inst.upper) total += u;
        con.sense = Sense::LessEqual;
        con.rhs = rng.uniform(0.5, 1.0) * total;
        inst.polyX.push_back(con);
    }
    std::vector<double> vmax(inst.m, 0.0);
    for (int k = 0; k < inst.m; ++k)
        for (int j = 0; j < inst.d; ++j) vmax[k] += inst.T[k][j] * inst.upper[j];
    inst.scenarios.assign(inst.n, std::vector<double>(inst.m));
    for (int i = 0; i < inst.n; ++i)
        for (int k = 0; k < inst.m; ++k)
            inst.scenarios[i][k] = rng.uniform_int(0, (std::int64_t)(1.8 * vmax[k])) / 2.0;
    if (rng.uniform_int(0, 9) < 7) {
        inst.probs.assign(inst.n, Rational(1, inst.n));
    } else {
        std::vector<std::int64_t> w(inst.n);
        std::int64_t total = 0;
        for (auto& x : w) {
            x = rng.uniform_int(1, 4);
            total += x;
        }
        inst.probs.clear();
        for (auto x : w) inst.probs.emplace_back(x, total);
    }
    std::int64_t den = rng.uniform_int(4, 12);
    std::int64_t lo = std::max<std::int64_t>(1, den / 6);
    std::int64_t hi = std::max(lo, (2 * den) / 3);
    inst.epsilon = Rational(rng.uniform_int(lo, hi), den);
    inst.validate();
    return inst;
}

/// Random bounded LP for solver cross-checks (nonnegative costs and finite
/// lower bounds keep it bounded below).
inline LpModel random_lp(std::uint64_t seed, int max_rows = 8, int max_cols = 6) {
    Rng rng(seed);
    LpModel lp;
    int cols = (int)rng.uniform_int(2, max_cols);
    int rows = (int)rng.uniform_int(1, max_rows);
    for (int j = 0; j < cols; ++j) {
        double lo = (double)rng.uniform_int(0, 2);
        double hi = lo + (double)rng.uniform_int(0, 6);
        if (rng.uniform_int(0, 4) == 0) hi = kInf;
        lp.add_col(lo, hi, (double)rng.uniform_int(0, 5));
    }
    for (int i = 0; i < rows; ++i) {
        std::vector<std::pair<int, double>> row;
        for (int j = 0; j < cols; ++j) {
            double a = (double)rng.uniform_int(-2, 3);
            if (a != 0.0) row.emplace_back(j, a);
        }
        if (row.empty()) row.emplace_back((int)rng.uniform_int(0, cols - 1), 1.0);
        double b = (double)rng.uniform_int(-4, 12);
        switch (rng.uniform_int(0, 2)) {
            case 0: lp.add_row(row, -kInf, b); break;
            case 1: lp.add_row(row, b, kInf); break;
            default: lp.add_row(row, b, b); break;
        }
    }
    return lp;
}

}  // namespace ccps::testing
