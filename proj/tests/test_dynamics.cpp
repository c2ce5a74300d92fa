// Copyright 2026 The isored Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "isored/dynamics.hpp"
#include "isored/weightlang.hpp"

using namespace isored;

namespace {

Rule tau(int i) { return *builtin_rule("tau" + std::to_string(i)); }

}  // namespace

TEST_CASE("rule parsing") {
    CHECK(builtin_rule("tau2")->characteristic == Characteristic::Indegree);
    CHECK_FALSE(builtin_rule("tau4").has_value());

    Rule custom = parse_rule("betweenness:1/4:ge");
    CHECK(custom.characteristic == Characteristic::Betweenness);
    CHECK(custom.fraction == Rational(1, 4));
    CHECK_FALSE(custom.strict);

    CHECK(parse_rule("degree:2:gt").fraction == Rational(2));
    CHECK_THROWS_AS(parse_rule("tau9"), Error);
    CHECK_THROWS_AS(parse_rule("degree:x:gt"), Error);
    CHECK_THROWS_AS(parse_rule("sideways:1/2:gt"), Error);
    CHECK_THROWS_AS(parse_rule("degree:1/2:lt"), Error);
}

TEST_CASE("the three rules select the published subsets on G and H") {
    Graph g = testfix::load("G.net");
    Graph h = testfix::load("H.net");
    CHECK(apply_rule(tau(1), g) == std::set<Label>{"1", "2", "3"});
    CHECK(apply_rule(tau(1), h) == std::set<Label>{"1", "2", "3"});
    CHECK(apply_rule(tau(2), g) == std::set<Label>{"1", "2", "3"});
    CHECK(apply_rule(tau(2), h) == std::set<Label>{"2", "3"});
    CHECK(apply_rule(tau(3), g) == std::set<Label>{"1", "2", "3"});
    CHECK(apply_rule(tau(3), h) == std::set<Label>{"2", "3"});
}

TEST_CASE("tau2 fixes A2") {
    Graph a2 = testfix::load("A2.net");
    CHECK(apply_rule(tau(2), a2) == std::set<Label>{"2", "3"});
}

TEST_CASE("empty selections are an error") {
    // Two-node attractor: no interior vertices, betweenness is all zero.
    Graph a2 = testfix::load("A2.net");
    CHECK_THROWS_AS(apply_rule(parse_rule("betweenness:1/2:gt"), a2), EmptySelection);
}

TEST_CASE("single steps reach the published reductions") {
    CHECK(step(tau(1), testfix::load("G.net")) == testfix::load("A1.net"));
    CHECK(step(tau(1), testfix::load("H.net")) == testfix::load("A1.net"));
    CHECK(step(tau(3), testfix::load("H.net")) == testfix::load("A2.net"));
    Graph a1 = testfix::load("A1.net");
    CHECK(step(tau(1), a1) == a1);
}

TEST_CASE("orbit of G under tau2 passes through A1") {
    auto result = orbit(tau(2), testfix::load("G.net"));
    const Orbit& orb = result.orbit;
    REQUIRE(orb.graphs.size() == 3);
    CHECK(orb.graphs[1] == testfix::load("A1.net"));
    CHECK(orb.graphs[2] == testfix::load("A2.net"));
    CHECK(orb.steps() == 2);
    CHECK(orb.selections[0] == std::set<Label>{"1", "2", "3"});
    CHECK(orb.selections[1] == std::set<Label>{"2", "3"});
    CHECK(orb.selections[2] == std::set<Label>{"2", "3"});  // fixed point
    CHECK(orb.terminated == TerminationReason::FixedPoint);
    CHECK(result.report.steps == 2);
    CHECK_FALSE(result.report.uniform);  // indegrees 1 and 2
}

TEST_CASE("orbit of H under tau1 takes one step") {
    auto result = orbit(tau(1), testfix::load("H.net"));
    CHECK(result.orbit.steps() == 1);
    CHECK(result.orbit.attractor() == testfix::load("A1.net"));
    CHECK(result.report.uniform);  // all degrees 4
    CHECK(result.report.values.values.at("1") == Rational(4));
}

TEST_CASE("an attractor orbits in zero steps") {
    auto result = orbit(tau(2), testfix::load("A2.net"));
    CHECK(result.orbit.steps() == 0);
    CHECK(result.orbit.attractor() == testfix::load("A2.net"));
}

TEST_CASE("attractor flags for A1 and A2") {
    Graph a1 = testfix::load("A1.net");
    Graph a2 = testfix::load("A2.net");
    CHECK(is_attractor(tau(1), a1));
    CHECK_FALSE(is_attractor(tau(2), a1));  // indegree 1 < 3/2
    CHECK(is_attractor(tau(3), a1));
    for (int i : {1, 2, 3}) CHECK(is_attractor(tau(i), a2));
}

TEST_CASE("single-vertex graphs are attractors for any rule") {
    Graph bare({"x"});
    CHECK(is_attractor(tau(1), bare));
    CHECK(is_attractor(parse_rule("betweenness:1:gt"), bare));
    auto result = orbit(tau(1), bare);
    CHECK(result.orbit.terminated == TerminationReason::SingleVertex);
    CHECK(result.orbit.steps() == 0);

    Graph loop({"x"});
    loop.set_weight("x", "x", parse_weight("1/λ"));
    CHECK(orbit(tau(1), loop).orbit.terminated == TerminationReason::FixedPoint);
}

TEST_CASE("uniformity checks") {
    auto a1 = uniformity(Characteristic::Degree, testfix::load("A1.net"));
    CHECK(a1.uniform);
    CHECK(a1.values.values.at("1") == Rational(4));

    Graph fig1 = testfix::load("fig1.net");
    CHECK(uniformity(Characteristic::Degree, fig1).uniform);
    CHECK_FALSE(uniformity(Characteristic::Betweenness, fig1).uniform);

    CHECK_FALSE(uniformity(Characteristic::Indegree, testfix::load("A2.net")).uniform);
}

TEST_CASE("a degree rule fixes the 4-regular fixture") {
    auto result = orbit(parse_rule("degree:1/2:gt"), testfix::load("fig1.net"));
    CHECK(result.orbit.steps() == 0);
    // A betweenness rule reduces it further.
    auto contracted = orbit(parse_rule("betweenness:1/2:gt"), testfix::load("fig1.net"));
    CHECK(contracted.orbit.steps() >= 1);
    CHECK(contracted.orbit.attractor().size() < 11);
}

TEST_CASE("a too-small step cap is an anomaly") {
    CHECK_THROWS_AS(orbit(tau(2), testfix::load("G.net"), 1), StepCapExceeded);
}

TEST_CASE("reduction degeneracies propagate out of step") {
    Graph g({"1", "2"});
    g.set_weight("1", "1", RatFunc(1));
    g.set_weight("2", "1", RatFunc(1));
    g.set_weight("2", "2", RatFunc::lambda());
    CHECK_THROWS_AS(step(parse_rule("indegree:1/2:gt"), g), DivisionByLambda);
}

TEST_CASE("orbits respect the step bound and end on attractors") {
    std::mt19937_64 rng(91);
    std::vector<Rule> rules{tau(1), tau(2), tau(3), parse_rule("betweenness:1/2:ge"),
                            parse_rule("outdegree:1/3:gt")};
    int done = 0;
    while (done < 60) {
        Graph g = testgen::random_graph(rng, 1, 10, testgen::WeightKind::ConstantRational);
        const Rule& rule = rules[rng() % rules.size()];
        try {
            auto result = orbit(rule, g);
            CHECK(result.orbit.steps() <= g.size());
            CHECK(is_attractor(rule, result.orbit.attractor()));
            for (std::size_t k = 0; k + 1 < result.orbit.graphs.size(); ++k) {
                CHECK(result.orbit.graphs[k + 1] ==
                      reduce_to(result.orbit.graphs[k], result.orbit.selections[k]));
                CHECK(result.orbit.graphs[k + 1].size() < result.orbit.graphs[k].size());
            }
            // Determinism: a second run reproduces the orbit exactly.
            auto again = orbit(rule, g);
            CHECK(again.orbit.graphs == result.orbit.graphs);
            CHECK(again.orbit.selections == result.orbit.selections);
            ++done;
        } catch (const EmptySelection&) {
            // Legitimate for strict rules on degenerate graphs; not an orbit.
        }
    }
}
