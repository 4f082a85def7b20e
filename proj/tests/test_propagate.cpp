#include "ccps/propagate.hpp"

#include "ccps/node.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ccps;

namespace {

// disjoint random fixing sets over a seeded instance
struct Sample {
    CcpInstance inst;
    Preprocessed prep;
    std::vector<int> N0, N1;
};

Sample random_node(std::uint64_t seed, int max_n = 10) {
    Sample s;
    s.inst = testing::random_small_instance(seed, max_n);
    s.prep = preprocess(s.inst);
    Rng rng(seed ^ 0x5eed);
    for (int i = 0; i < s.inst.n; ++i) {
        switch (rng.uniform_int(0, 5)) {
            case 0: s.N0.push_back(i); break;
            case 1: s.N1.push_back(i); break;
            default: break;
        }
    }
    return s;
}

}  // namespace

TEST_CASE("the illustration node (N0={4}, N1={5}) step by step") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    std::vector<PropagationTraceStep> trace;
    ReductionResult res = propagate_approx(inst, prep, {3}, {4}, &trace);
    CHECK_FALSE(res.pruned);
    CHECK(res.fixed_zero == std::vector<int>{1, 2});  // scenarios 2 and 3
    CHECK(res.fixed_one == std::vector<int>{5, 6});   // scenarios 6 and 7
    REQUIRE(trace.size() >= 2);
    CHECK(trace[0].bounds == std::vector<double>{5, 2, 6});
    CHECK(trace[0].r1 == std::vector<int>{5, 6});
    CHECK(trace[0].r0.empty());
    CHECK(trace[1].bounds == std::vector<double>{5, 2, 10});
    CHECK(trace[1].r0 == std::vector<int>{1, 2});
    CHECK(res.bounds == std::vector<double>{5, 2, 10});
}

TEST_CASE("knapsack overflow prunes immediately") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    ReductionResult res = propagate_approx(inst, prep, {}, {0, 1, 2, 3, 4});  // 5/7 > 4/7
    CHECK(res.pruned);
    CHECK(res.fixed_zero.empty());
    CHECK(res.fixed_one.empty());
}

TEST_CASE("the root node only recovers the quantile bounds") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    ReductionResult res = propagate_approx(inst, prep, {}, {});
    CHECK_FALSE(res.pruned);
    CHECK(res.bounds == std::vector<double>{4, 1, 6});
    CHECK(res.fixed_zero.empty());
    CHECK(res.fixed_one.empty());
}

TEST_CASE("figure-3 style deep node is infeasible") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    // (N0={4,5}, N1={1,2,3,6,7}): five scenarios violated, 5/7 > 4/7
    ReductionResult res = propagate_approx(inst, prep, {3, 4}, {0, 1, 2, 5, 6});
    CHECK(res.pruned);
}

TEST_CASE("exact feasibility MILP on the illustration instance") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    ExactBudget budget;
    auto o = exact_feasibility_value(inst, prep, {3}, {4}, budget);
    REQUIRE(o.has_value());
    CHECK(*o == Rational(2, 7));
    CHECK(exact_nonempty(inst, prep, {3}, {4}, budget));
    CHECK_FALSE(exact_nonempty(inst, prep, {3, 5}, {4}, budget));  // C({4,6},{5}) empty
    CHECK(exact_nonempty(inst, prep, {}, {}, budget));             // no constraints at all

    ReductionResult fixes = exact_fixings(inst, prep, {3}, {4}, budget);
    CHECK_FALSE(fixes.pruned);
    CHECK(fixes.fixed_zero == std::vector<int>{1, 2});
    CHECK(fixes.fixed_one == std::vector<int>{5, 6});
    CHECK_FALSE(budget.exceeded);
}

TEST_CASE("a scenario heavier than epsilon is forced to zero") {
    CcpInstance inst;
    inst.name = "heavy";
    inst.d = inst.m = 1;
    inst.n = 3;
    inst.c = {1};
    inst.T = {{1}};
    inst.lower = {0};
    inst.upper = {100};
    inst.scenarios = {{9}, {5}, {1}};
    inst.probs = {Rational(1, 2), Rational(1, 4), Rational(1, 4)};
    inst.epsilon = Rational(1, 3);  // p_1 = 1/2 > 1/3
    Preprocessed prep = preprocess(inst);
    ExactBudget budget;
    CHECK_FALSE(exact_nonempty(inst, prep, {}, {0}, budget));
    ReductionResult fixes = exact_fixings(inst, prep, {}, {}, budget);
    CHECK(set_contains(fixes.fixed_zero, 0));
    ReductionResult approx = propagate_approx(inst, prep, {}, {});
    CHECK(set_contains(approx.fixed_zero, 0));
}

TEST_CASE("oracle precondition rejects overlapping sets") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    CHECK_THROWS_AS(oracle_nonempty(inst, prep, {2}, {2}), std::invalid_argument);
}

TEST_CASE("exact emptiness matches the enumeration oracle") {
    int checked = 0;
    for (std::uint64_t seed = 700; seed < 820; ++seed) {
        Sample s = random_node(seed);
        ExactBudget budget;
        bool exact = exact_nonempty(s.inst, s.prep, s.N0, s.N1, budget);
        bool oracle = oracle_nonempty(s.inst, s.prep, s.N0, s.N1);
        CHECK(exact == oracle);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("approximate fixings are contained in the exact maximal sets") {
    for (std::uint64_t seed = 900; seed < 960; ++seed) {
        Sample s = random_node(seed);
        ReductionResult approx = propagate_approx(s.inst, s.prep, s.N0, s.N1);
        if (approx.pruned) {
            CHECK_FALSE(oracle_nonempty(s.inst, s.prep, s.N0, s.N1));
            continue;
        }
        ExactBudget budget;
        if (!exact_nonempty(s.inst, s.prep, s.N0, s.N1, budget)) continue;
        ReductionResult exact = exact_fixings(s.inst, s.prep, s.N0, s.N1, budget);
        for (int i : approx.fixed_zero) CHECK(set_contains(exact.fixed_zero, i));
        for (int i : approx.fixed_one) CHECK(set_contains(exact.fixed_one, i));
        // fixing must not change the node set
        CHECK(oracle_nonempty(s.inst, s.prep, set_union(s.N0, approx.fixed_zero),
                              set_union(s.N1, approx.fixed_one)) ==
              oracle_nonempty(s.inst, s.prep, s.N0, s.N1));
    }
}

TEST_CASE("iteration count stays within the free-variable bound") {
    for (std::uint64_t seed = 1100; seed < 1160; ++seed) {
        Sample s = random_node(seed);
        ReductionResult res = propagate_approx(s.inst, s.prep, s.N0, s.N1);
        int nf = s.inst.n - (int)s.N0.size() - (int)s.N1.size();
        CHECK(res.iterations <= nf + 1);
    }
}
