#include <set>
#include <sstream>

#include "ccps/preprocess.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ccps;

namespace {

std::set<std::pair<int, int>> pair_set(const std::vector<std::pair<int, int>>& v) {
    return {v.begin(), v.end()};
}

// closure of reduced edges plus equal-scenario cliques
std::set<std::pair<int, int>> closure(const DominanceGraph& g, int n) {
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (auto [i, j] : g.reduced) reach[i][j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool eq = true;
            for (size_t k = 0; k < g.matrix[i].size() && eq; ++k)
                if (std::abs(g.matrix[i][k] - g.matrix[j][k]) > kTolFeas) eq = false;
            if (eq) reach[i][j] = 1;
        }
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i)
            if (reach[i][s])
                for (int j = 0; j < n; ++j)
                    if (reach[s][j]) reach[i][j] = 1;
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && reach[i][j]) out.insert({i, j});
    return out;
}

}  // namespace

TEST_CASE("quantile bounds of the illustration instance") {
    CcpInstance inst = example_instance();
    QuantileBounds qb = quantile_bounds(inst);
    CHECK(qb.xi0 == std::vector<double>{4, 1, 6});
    CHECK(qb.tau == std::vector<int>{5, 5, 5});
    // prefix of each permutation exceeds eps exactly at tau, not before
    for (int k = 0; k < inst.m; ++k) {
        Rational acc(0);
        for (int s = 0; s < qb.tau[k]; ++s) acc += inst.probs[qb.perm[k][s]];
        CHECK(acc > inst.epsilon);
        CHECK(acc - inst.probs[qb.perm[k][qb.tau[k] - 1]] <= inst.epsilon);
    }
}

TEST_CASE("single scenario forces tau = 1") {
    CcpInstance inst;
    inst.name = "one";
    inst.d = inst.m = 1;
    inst.n = 1;
    inst.c = {1};
    inst.T = {{1}};
    inst.lower = {0};
    inst.upper = {10};
    inst.scenarios = {{5}};
    inst.probs = {Rational(1)};
    inst.epsilon = Rational(1, 2);
    QuantileBounds qb = quantile_bounds(inst);
    CHECK(qb.tau[0] == 1);
    CHECK(qb.xi0[0] == 5);
}

TEST_CASE("quantile bound is valid for every knapsack-feasible support") {
    for (std::uint64_t seed = 40; seed < 52; ++seed) {
        CcpInstance inst = testing::random_small_instance(seed, 8);
        QuantileBounds qb = quantile_bounds(inst);
        for (std::uint32_t mask = 0; mask < (1u << inst.n); ++mask) {
            Rational mass(0);
            for (int i = 0; i < inst.n; ++i)
                if (mask & (1u << i)) mass += inst.probs[i];
            if (mass > inst.epsilon) continue;
            // v = componentwise max over kept scenarios must dominate xi0
            for (int k = 0; k < inst.m; ++k) {
                double v = 0.0;
                for (int i = 0; i < inst.n; ++i)
                    if (!(mask & (1u << i))) v = std::max(v, inst.scenarios[i][k]);
                CHECK(v >= qb.xi0[k] - kTolFeas);
            }
        }
    }
}

TEST_CASE("coefficient strengthening on the illustration instance") {
    CcpInstance inst = example_instance();
    QuantileBounds qb = quantile_bounds(inst);
    StrengthenedModel sm = strengthen_coefficients(inst, qb);
    // scenario 1, row 1: 2 <= 4 -> dropped; xibar^1 = (4,1,12)
    CHECK(sm.entries[0 * 3 + 0].dropped);
    CHECK(sm.xibar[0] == std::vector<double>{4, 1, 12});
    // scenario 7, row 1: v_1 >= 12 - 8 z_7
    const auto& e = sm.entries[6 * 3 + 0];
    CHECK_FALSE(e.dropped);
    CHECK(e.rhs == 12.0);
    CHECK(e.slope == 8.0);
    CHECK(sm.xibar[6] == std::vector<double>{12, 1, 6});
    CHECK(sm.global_lower == std::vector<double>{4, 1, 6});
}

TEST_CASE("a row where every scenario sits at the bound drops entirely") {
    CcpInstance inst;
    inst.name = "flat";
    inst.d = inst.m = 1;
    inst.n = 3;
    inst.c = {1};
    inst.T = {{1}};
    inst.lower = {0};
    inst.upper = {10};
    inst.scenarios = {{5}, {5}, {5}};
    inst.probs.assign(3, Rational(1, 3));
    inst.epsilon = Rational(1, 4);
    QuantileBounds qb = quantile_bounds(inst);
    CHECK(qb.xi0[0] == 5);
    StrengthenedModel sm = strengthen_coefficients(inst, qb);
    for (int i = 0; i < 3; ++i) CHECK(sm.entries[i].dropped);
}

TEST_CASE("dominance pairs with and without strengthening") {
    CcpInstance inst = example_instance();
    QuantileBounds qb = quantile_bounds(inst);
    auto raw = build_dominance_graph(inst, qb, false);
    CHECK(pair_set(raw.pairs) == std::set<std::pair<int, int>>{{3, 4}});
    auto bar = build_dominance_graph(inst, qb, true);
    CHECK(pair_set(bar.pairs) == std::set<std::pair<int, int>>{{1, 0}, {3, 4}, {5, 6}});
    CHECK(bar.below[4] == std::vector<int>{3, 4});
    CHECK(bar.above[3] == std::vector<int>{3, 4});
    CHECK(bar.above[5] == std::vector<int>{5, 6});
    CHECK(bar.below[0] == std::vector<int>{0, 1});
    transitive_reduction(bar);
    CHECK(pair_set(bar.reduced) == pair_set(bar.pairs));  // no 3-chains here
}

TEST_CASE("three-element chain reduces to consecutive edges") {
    CcpInstance inst;
    inst.name = "chain";
    inst.d = inst.m = 2;
    inst.n = 3;
    inst.c = {1, 1};
    inst.T = {{1, 0}, {0, 1}};
    inst.lower = {0, 0};
    inst.upper = {20, 20};
    inst.scenarios = {{1, 1}, {2, 2}, {3, 3}};
    inst.probs.assign(3, Rational(1, 3));
    inst.epsilon = Rational(1, 4);
    auto g = build_dominance_graph(inst, quantile_bounds(inst), false);
    CHECK(pair_set(g.pairs) == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    transitive_reduction(g);
    CHECK(pair_set(g.reduced) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("identical scenarios form an index chain") {
    CcpInstance inst;
    inst.name = "equal";
    inst.d = inst.m = 1;
    inst.n = 3;
    inst.c = {1};
    inst.T = {{1}};
    inst.lower = {0};
    inst.upper = {10};
    inst.scenarios = {{4}, {4}, {4}};
    inst.probs.assign(3, Rational(1, 3));
    inst.epsilon = Rational(1, 4);
    auto g = build_dominance_graph(inst, quantile_bounds(inst), false);
    CHECK(g.pairs.size() == 3);  // one orientation per unordered pair
    transitive_reduction(g);
    CHECK(pair_set(g.reduced) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("an antichain reduces to nothing") {
    CcpInstance inst;
    inst.name = "anti";
    inst.d = inst.m = 2;
    inst.n = 3;
    inst.c = {1, 1};
    inst.T = {{1, 0}, {0, 1}};
    inst.lower = {0, 0};
    inst.upper = {20, 20};
    inst.scenarios = {{3, 1}, {2, 2}, {1, 3}};
    inst.probs.assign(3, Rational(1, 3));
    inst.epsilon = Rational(1, 4);
    auto g = build_dominance_graph(inst, quantile_bounds(inst), false);
    CHECK(g.pairs.empty());
    transitive_reduction(g);
    CHECK(g.reduced.empty());
}

TEST_CASE("closure of the reduction recovers all pairs on random instances") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        CcpInstance inst = testing::random_small_instance(seed);
        QuantileBounds qb = quantile_bounds(inst);
        for (bool bar : {false, true}) {
            DominanceGraph g = build_dominance_graph(inst, qb, bar);
            transitive_reduction(g);
            CHECK(closure(g, inst.n) == pair_set(g.pairs));
            for (auto e : g.reduced)
                CHECK(pair_set(g.pairs).count(e));
        }
    }
}

TEST_CASE("dominance dump reports the percentage counters") {
    CcpInstance inst = example_instance();
    Preprocessed prep = preprocess(inst);
    std::ostringstream out;
    dump_dominance(prep.graph, inst.n, out);
    std::string text = out.str();
    CHECK(text.find("2 -> 1") != std::string::npos);
    CHECK(text.find("#DP 3") != std::string::npos);
    CHECK(text.find("%DP 14.2857") != std::string::npos);  // 3 / 21 * 100
}
