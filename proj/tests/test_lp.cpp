#include <cmath>
#include <sstream>

#include "ccps/lp.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ccps;

TEST_CASE("two-variable textbook LP") {
    // min -x - 2y  s.t.  x + y <= 4, y <= 3, x,y >= 0  ->  x=1, y=3, obj=-7
    LpModel lp;
    lp.add_col(0, kInf, -1);
    lp.add_col(0, 3, -2);
    lp.add_row({{0, 1.0}, {1, 1.0}}, -kInf, 4.0);
    Simplex sx;
    auto res = sx.solve(lp);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(-7.0));
    CHECK(res.primal[0] == doctest::Approx(1.0));
    CHECK(res.primal[1] == doctest::Approx(3.0));
}

TEST_CASE("contradictory bounds are infeasible") {
    LpModel lp;
    lp.add_col(0, kInf, 0);
    lp.add_row({{0, 1.0}}, 1.0, kInf);   // x >= 1
    lp.add_row({{0, 1.0}}, -kInf, 0.0);  // x <= 0
    Simplex sx;
    CHECK(sx.solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded direction detected") {
    LpModel lp;
    lp.add_col(0, kInf, -1.0);
    Simplex sx;
    CHECK(sx.solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("equality rows and free variables") {
    // min x + y  s.t.  x - y = 2, y free in [-5,5]  ->  y=-5, x=-3
    LpModel lp;
    lp.add_col(-kInf, kInf, 1.0);
    lp.add_col(-5, 5, 1.0);
    lp.add_row({{0, 1.0}, {1, -1.0}}, 2.0, 2.0);
    Simplex sx;
    auto res = sx.solve(lp);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(-8.0));
}

TEST_CASE("bound edits revert bit-identically") {
    LpModel lp;
    lp.add_col(0, 1, 1.0);
    lp.add_col(0, 1, 2.0);
    lp.add_row({{0, 1.0}, {1, 1.0}}, 1.0, kInf);
    auto mark = lp.checkpoint();
    lp.change_col_bounds(0, 0.0, 0.0);
    lp.change_row_bounds(0, 2.0, kInf);
    lp.revert(mark);
    CHECK(lp.col_upper(0) == 1.0);
    CHECK(lp.row_lower(0) == 1.0);
    CHECK(lp.num_rows() == 1);
}

TEST_CASE("revert drops rows added after the mark") {
    LpModel lp;
    lp.add_col(0, 2, 1.0);
    lp.add_row({{0, 1.0}}, 1.0, kInf);
    auto mark = lp.checkpoint();
    lp.add_row({{0, 1.0}}, 1.5, kInf);
    Simplex sx;
    CHECK(sx.solve(lp).objective == doctest::Approx(1.5));
    lp.revert(mark);
    CHECK(lp.num_rows() == 1);
    CHECK(sx.solve(lp).objective == doctest::Approx(1.0));
}

TEST_CASE("adding a row never improves a minimization") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        LpModel lp = testing::random_lp(seed);
        Simplex sx;
        auto before = sx.solve(lp);
        if (before.status != LpStatus::Optimal) continue;
        lp.add_row({{0, 1.0}}, lp.col_lower(0) + 0.5, kInf);
        auto after = sx.solve(lp, &before.basis);
        if (after.status == LpStatus::Optimal)
            CHECK(after.objective >= before.objective - 1e-7);
    }
}

TEST_CASE("tightening a lower bound never improves a minimization") {
    // raw illustration model: push v_1 >= 4 and compare
    CcpInstance inst = example_instance();
    LpModel lp;
    for (int k = 0; k < 3; ++k) lp.add_col(0.0, kInf, inst.c[k]);
    for (int i = 0; i < 7; ++i) lp.add_col(0.0, 1.0, 0.0);
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 3; ++k)
            lp.add_row({{k, 1.0}, {3 + i, inst.scenarios[i][k]}}, inst.scenarios[i][k], kInf);
    std::vector<std::pair<int, double>> knap;
    for (int i = 0; i < 7; ++i) knap.emplace_back(3 + i, 1.0 / 7);
    lp.add_row(knap, -kInf, 4.0 / 7);
    Simplex sx;
    double before = sx.solve(lp).objective;
    CHECK(before == doctest::Approx(30.2915601).epsilon(1e-6));
    lp.change_col_bounds(0, 4.0, kInf);
    double after = sx.solve(lp).objective;
    CHECK(after >= before - 1e-9);
}

TEST_CASE("warm restart equals cold solve after bound changes") {
    int compared = 0;
    for (std::uint64_t seed = 500; seed < 560; ++seed) {
        LpModel lp = testing::random_lp(seed);
        Simplex sx;
        auto first = sx.solve(lp);
        if (first.status != LpStatus::Optimal) continue;
        Rng rng(seed);
        int j = (int)rng.uniform_int(0, lp.num_cols() - 1);
        double lo = lp.col_lower(j) + 1.0;
        double hi = lp.col_upper(j) == kInf ? kInf : std::max(lo, lp.col_upper(j));
        lp.change_col_bounds(j, lo, hi);
        auto warm = sx.solve(lp, &first.basis);
        auto cold = sx.solve(lp);
        REQUIRE(warm.status == cold.status);
        if (warm.status == LpStatus::Optimal) {
            CHECK(warm.objective == doctest::Approx(cold.objective).epsilon(1e-7));
            ++compared;
        }
    }
    CHECK(compared > 10);
}

TEST_CASE("floating solver matches exact rational pivoting on random models") {
    int optimal = 0, infeasible = 0;
    for (std::uint64_t seed = 1000; seed < 1110; ++seed) {
        LpModel lp = testing::random_lp(seed);
        Simplex sx;
        auto fl = sx.solve(lp);
        auto ex = Simplex::solve_exact(lp);
        REQUIRE(fl.status == ex.status);
        if (fl.status == LpStatus::Optimal) {
            CHECK(fl.objective == doctest::Approx(ex.objective).epsilon(1e-9));
            ++optimal;
        } else if (fl.status == LpStatus::Infeasible) {
            ++infeasible;
        }
    }
    CHECK(optimal > 30);
    CHECK(infeasible > 3);
}

TEST_CASE("returned duals satisfy dual feasibility and complementary slackness") {
    for (std::uint64_t seed = 2000; seed < 2040; ++seed) {
        LpModel lp = testing::random_lp(seed);
        Simplex sx;
        auto res = sx.solve(lp);
        if (res.status != LpStatus::Optimal) continue;
        for (int j = 0; j < lp.num_cols(); ++j) {
            double dj = lp.col_obj(j);
            for (auto [i, a] : lp.col(j)) dj -= res.duals[i] * a;
            CHECK(dj == doctest::Approx(res.reduced_costs[j]).epsilon(1e-6));
            bool at_lower = std::abs(res.primal[j] - lp.col_lower(j)) < 1e-6;
            bool at_upper =
                lp.col_upper(j) < kInf && std::abs(res.primal[j] - lp.col_upper(j)) < 1e-6;
            if (!at_lower && !at_upper) CHECK(std::abs(dj) < 1e-6);
        }
        for (int i = 0; i < lp.num_rows(); ++i) {
            double act = 0.0;
            for (int j = 0; j < lp.num_cols(); ++j)
                for (auto [r, a] : lp.col(j))
                    if (r == i) act += a * res.primal[j];
            CHECK(act >= lp.row_lower(i) - 1e-6);
            CHECK(act <= lp.row_upper(i) + 1e-6);
            bool tight_lo = std::abs(act - lp.row_lower(i)) < 1e-6;
            bool tight_hi = std::abs(act - lp.row_upper(i)) < 1e-6;
            if (!tight_lo && !tight_hi) CHECK(std::abs(res.duals[i]) < 1e-6);
        }
    }
}

TEST_CASE("mps dump contains the expected sections") {
    LpModel lp;
    lp.add_col(0, 4, 1.0);
    lp.add_col(1, kInf, -2.0);
    lp.add_row({{0, 1.0}, {1, 2.0}}, -kInf, 7.0);
    lp.add_row({{0, 3.0}}, 2.0, 2.0);
    std::ostringstream out;
    lp.write_mps(out, "PROBE");
    std::string text = out.str();
    for (const char* section : {"NAME", "ROWS", "COLUMNS", "RHS", "BOUNDS", "ENDATA"})
        CHECK(text.find(section) != std::string::npos);
}
