#include <sstream>

#include "ccps/instance.hpp"
#include "ccps/toolkit.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ccps;

TEST_CASE("example instance loads through the schema round trip") {
    CcpInstance inst = example_instance();
    std::string text = instance_to_text(inst);
    CcpInstance back = load_instance_text(text);
    CHECK(back.n == 7);
    CHECK(back.m == 3);
    CHECK(back.d == 3);
    CHECK(back.epsilon == Rational(4, 7));
    CHECK(back.scenarios == inst.scenarios);
    CHECK(back.probs == inst.probs);
    CHECK(instance_to_text(back) == text);
}

TEST_CASE("schema and validation failures") {
    CHECK_THROWS_AS(load_instance_text("{not json"), SchemaError);
    CHECK_THROWS_AS(load_instance_text("{\"d\":1}"), SchemaError);

    CcpInstance inst = example_instance();
    SUBCASE("epsilon at zero") {
        inst.epsilon = Rational(0);
        CHECK_THROWS_AS(inst.validate(), ValidationError);
    }
    SUBCASE("epsilon at one") {
        inst.epsilon = Rational(1);
        CHECK_THROWS_AS(inst.validate(), ValidationError);
    }
    SUBCASE("probabilities must sum to one") {
        inst.probs.assign(7, Rational(1, 8));
        CHECK_THROWS_AS(inst.validate(), ValidationError);
    }
    SUBCASE("p = (1/2, 1/3) sums to 5/6") {
        inst.n = 2;
        inst.scenarios = {{1, 1, 1}, {2, 2, 2}};
        inst.probs = {Rational(1, 2), Rational(1, 3)};
        CHECK_THROWS_AS(inst.validate(), ValidationError);
    }
    SUBCASE("negative scenario entry") {
        inst.scenarios[0][0] = -1.0;
        CHECK_THROWS_AS(inst.validate(), ValidationError);
    }
}

TEST_CASE("bounds parse the inf sentinel") {
    CcpInstance inst = example_instance();
    std::string text = instance_to_text(inst);
    CHECK(text.find("\"inf\"") != std::string::npos);
    CcpInstance back = load_instance_text(text);
    CHECK(back.upper[0] == kInf);
}

TEST_CASE("chance violation on the illustration instance") {
    CcpInstance inst = example_instance();
    // v = (6,2,7) leaves scenarios 1, 2, 6, 7 uncovered (scenario 6 needs v1 >= 7)
    CHECK(chance_violation(inst, {6, 2, 7}) == Rational(4, 7));
    // componentwise max of all scenarios violates nothing
    CHECK(chance_violation(inst, {12, 2, 12}) == Rational(0));
    CHECK(chance_violation(inst, {0, 0, 0}) == Rational(1));
    CHECK_THROWS_AS(chance_violation(inst, {1, 2}), DimensionError);
}

TEST_CASE("chance violation is monotone in v") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CcpInstance inst = testing::random_small_instance(seed);
        Rng rng(seed * 77);
        std::vector<double> v(inst.m), w(inst.m);
        for (int k = 0; k < inst.m; ++k) {
            v[k] = rng.uniform(0.0, 20.0);
            w[k] = v[k] + rng.uniform(0.0, 10.0);
        }
        CHECK(chance_violation(inst, w) <= chance_violation(inst, v));
    }
}

TEST_CASE("feasibility check against the known optimum") {
    CcpInstance inst = example_instance();
    CandidateSolution cand;
    cand.x = {6, 2, 7};
    cand.v = {6, 2, 7};
    cand.z = {1, 1, 0, 0, 0, 1, 1};
    cand.objective = 59.0;
    auto res = check_feasible(inst, cand);
    CHECK(res.feasible);
    CHECK(6 * cand.x[0] + cand.x[1] + 3 * cand.x[2] == doctest::Approx(59.0));

    SUBCASE("covering everything with z = 0 fails on scenario 1") {
        cand.z.assign(7, 0);
        auto bad = check_feasible(inst, cand);
        CHECK_FALSE(bad.feasible);
        bool mentions_bigm = false;
        for (const auto& s : bad.violations)
            if (s.find("big-M") != std::string::npos) mentions_bigm = true;
        CHECK(mentions_bigm);
    }
    SUBCASE("five violated scenarios break the knapsack") {
        cand.x = cand.v = {12, 2, 12};
        cand.z = {1, 1, 1, 0, 0, 1, 1};
        auto bad = check_feasible(inst, cand);
        CHECK_FALSE(bad.feasible);
        bool mentions_knap = false;
        for (const auto& s : bad.violations)
            if (s.find("knapsack") != std::string::npos) mentions_knap = true;
        CHECK(mentions_knap);
    }
    SUBCASE("v must equal Tx") {
        cand.v = {7, 2, 7};
        auto bad = check_feasible(inst, cand);
        CHECK_FALSE(bad.feasible);
    }
}

TEST_CASE("check_feasible agrees with a literal re-evaluation on random points") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        CcpInstance inst = testing::random_small_instance(seed);
        Rng rng(seed * 31 + 5);
        for (int trial = 0; trial < 20; ++trial) {
            CandidateSolution cand;
            cand.x.resize(inst.d);
            for (int j = 0; j < inst.d; ++j)
                cand.x[j] = rng.uniform(0.0, inst.upper[j] + 1.0);
            cand.v.resize(inst.m);
            for (int k = 0; k < inst.m; ++k) cand.v[k] = inst.row_activity(k, cand.x);
            cand.z.resize(inst.n);
            for (int i = 0; i < inst.n; ++i) cand.z[i] = (int)rng.uniform_int(0, 1);

            bool literal = true;
            for (int j = 0; j < inst.d && literal; ++j)
                if (cand.x[j] < inst.lower[j] - kTolFeas || cand.x[j] > inst.upper[j] + kTolFeas)
                    literal = false;
            for (const auto& con : inst.polyX) {
                double lhs = 0.0;
                for (int j = 0; j < inst.d; ++j) lhs += con.coeffs[j] * cand.x[j];
                if (con.sense == Sense::LessEqual && lhs > con.rhs + kTolFeas) literal = false;
                if (con.sense == Sense::GreaterEqual && lhs < con.rhs - kTolFeas) literal = false;
                if (con.sense == Sense::Equal && std::abs(lhs - con.rhs) > kTolFeas)
                    literal = false;
            }
            Rational mass(0);
            for (int i = 0; i < inst.n; ++i) {
                if (cand.z[i] == 1) {
                    mass += inst.probs[i];
                    continue;
                }
                for (int k = 0; k < inst.m; ++k)
                    if (cand.v[k] < inst.scenarios[i][k] - kTolFeas) literal = false;
            }
            if (mass > inst.epsilon) literal = false;
            CHECK(check_feasible(inst, cand).feasible == literal);
        }
    }
}
