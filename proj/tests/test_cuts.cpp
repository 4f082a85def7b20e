#include "ccps/cuts.hpp"

#include "ccps/milp_model.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ccps;

TEST_CASE("the row-1 sequence (7,6,5) on the illustration instance") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    // xibar column 1 is (4,4,4,5,6,7,12), xi0_1 = 4; picking z* so the
    // staircase selects scenarios 7, 6, 5 top down
    std::vector<double> z = {1, 1, 1, 1, 0.1, 0.3, 0.6};
    std::vector<double> v = {4, 1, 6};
    auto cuts = separate_mixing(inst, prep, v, z, 10);
    REQUIRE_FALSE(cuts.empty());
    const MixingCut* found = nullptr;
    for (const auto& c : cuts)
        if (c.row == 0) found = &c;
    REQUIRE(found != nullptr);
    CHECK(found->sequence == std::vector<int>{6, 5, 4});
    CHECK(found->coeffs == std::vector<double>{5, 1, 2});  // 12-7, 7-6, 6-4
    CHECK(found->rhs == 12.0);
    CHECK(validate_cut(inst, prep, *found));
}

TEST_CASE("integral points yield no violated cuts") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    std::vector<double> z = {1, 1, 0, 0, 0, 1, 1};
    std::vector<double> v = {6, 2, 7};
    CHECK(separate_mixing(inst, prep, v, z, 10).empty());
}

TEST_CASE("corrupting the right-hand side breaks validity") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    MixingCut cut;
    cut.row = 0;
    cut.sequence = {6, 5, 4};
    cut.coeffs = {5, 1, 2};
    cut.rhs = 12.0;
    CHECK(validate_cut(inst, prep, cut));
    cut.rhs = 13.0;
    CHECK_FALSE(validate_cut(inst, prep, cut));
}

TEST_CASE("an empty sequence is just the quantile bound") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    MixingCut cut;
    cut.row = 2;
    cut.rhs = prep.qb.xi0[2];
    CHECK(validate_cut(inst, prep, cut));
}

TEST_CASE("separated cuts are valid and never emitted twice") {
    for (std::uint64_t seed = 4000; seed < 4025; ++seed) {
        CcpInstance inst = testing::random_small_instance(seed);
        Preprocessed prep = preprocess(inst);
        Rng rng(seed + 1);
        CutPool pool;
        std::vector<double> z(inst.n), v = prep.qb.xi0;
        for (auto& x : z) x = rng.uniform(0.0, 1.0);
        auto cuts = separate_mixing(inst, prep, v, z, 2 * inst.m);
        for (const auto& cut : cuts) {
            CHECK(validate_cut(inst, prep, cut));
            CHECK(cut.violation(v, z) > 1e-6);
            CHECK(pool.insert(cut));
            CHECK_FALSE(pool.insert(cut));
            for (double c : cut.coeffs) CHECK(c > 0.0);
        }
    }
}

TEST_CASE("adding a separated cut never lowers the LP optimum") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    LpModel lp;
    MilpLayout lay = build_big_m_lp(inst, prep, true, lp);
    Simplex sx;
    LpResult base = sx.solve(lp);
    REQUIRE(base.status == LpStatus::Optimal);
    std::vector<double> v(base.primal.begin() + lay.v0, base.primal.begin() + lay.v0 + inst.m);
    std::vector<double> z(base.primal.begin() + lay.z0, base.primal.end());
    auto cuts = separate_mixing(inst, prep, v, z, 2 * inst.m);
    for (const auto& cut : cuts) {
        std::vector<std::pair<int, double>> row{{lay.v(cut.row), 1.0}};
        for (size_t t = 0; t < cut.sequence.size(); ++t)
            row.emplace_back(lay.z(cut.sequence[t]), cut.coeffs[t]);
        lp.add_row(row, cut.rhs, kInf);
    }
    if (!cuts.empty()) {
        LpResult after = sx.solve(lp, &base.basis);
        REQUIRE(after.status == LpStatus::Optimal);
        CHECK(after.objective >= base.objective - 1e-9);
    }
}
