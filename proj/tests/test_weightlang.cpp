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
#include "isored/weightlang.hpp"

using namespace isored;

namespace {

RatFunc two_over_lambda() {
    return RatFunc(Polynomial(2), Polynomial::variable());
}

}  // namespace

TEST_CASE("parse 2/λ and its spellings") {
    CHECK(parse_weight("2/λ") == two_over_lambda());
    CHECK(parse_weight("2/lambda") == two_over_lambda());
    CHECK(parse_weight("2/L") == two_over_lambda());
    CHECK(parse_weight(" 2 / λ ") == two_over_lambda());
}

TEST_CASE("parse canonicalizes common factors") {
    RatFunc f = parse_weight("(λ^2-1)/(λ-1)");
    CHECK(f == parse_weight("λ+1"));
    CHECK(f.den() == Polynomial(1));
}

TEST_CASE("malformed expression reports the column") {
    try {
        parse_weight("1//λ");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.column == 3);
        CHECK(e.line == 0);
    }
}

TEST_CASE("assorted parse cases") {
    CHECK(parse_weight("0") == RatFunc());
    CHECK(parse_weight("λ") == RatFunc::lambda());
    CHECK(parse_weight("3/4i") == RatFunc(GaussianRational(Rational(0), Rational(3, 4))));
    CHECK(parse_weight("1/2λ+1/2") == parse_weight("(λ+1)/2"));
    CHECK(parse_weight("2*λ^2") == parse_weight("2λ^2"));
    CHECK(parse_weight("(1+2i)λ") == RatFunc(Polynomial::monomial({Rational(1), Rational(2)}, 1)));
    CHECK(parse_weight("-λ") == -RatFunc::lambda());
    CHECK(parse_weight("1/(λ-λ+1)") == RatFunc(1));
    CHECK_THROWS_AS(parse_weight("1/(λ-λ)"), ZeroDenominator);
    CHECK_THROWS_AS(parse_weight("2/λ/3"), SyntaxError);
    CHECK_THROWS_AS(parse_weight(""), SyntaxError);
    CHECK_THROWS_AS(parse_weight("i"), SyntaxError);  // imaginary unit needs a digit
}

TEST_CASE("printing canonical forms") {
    CHECK(print_weight(two_over_lambda()) == "2/λ");
    CHECK(print_weight(parse_weight("λ+1")) == "λ+1");
    CHECK(print_weight(RatFunc()) == "0");
    CHECK(print_weight(RatFunc(1)) == "1");
    CHECK(print_weight(parse_weight("(λ^2+1)/(λ^2+λ)")) == "(λ^2+1)/(λ^2+λ)");
    CHECK(print_weight(parse_weight("-2/λ")) == "-2/λ");
    CHECK(print_weight(parse_weight("(λ+1)/2")) == "1/2λ+1/2");
    CHECK(print_weight(parse_weight("2i")) == "2i");
}

TEST_CASE("round trip on random canonical values") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        RatFunc f = testgen::random_ratfunc(rng, 4);
        CAPTURE(print_weight(f));
        CHECK(parse_weight(print_weight(f)) == f);
    }
}

TEST_CASE("fixture G parses with the expected weights") {
    Graph g = testfix::load("G.net");
    CHECK(g.size() == 6);
    CHECK_FALSE(g.undirected());
    CHECK(g.weight("1", "1") == parse_weight("1/λ"));
    CHECK(g.weight("4", "1") == RatFunc(1));
    CHECK(g.edge_count() == 12);
    CHECK(g.weight("2", "4").is_zero());
}

TEST_CASE("fixture fig1 materializes both arcs per edge") {
    Graph g = testfix::load("fig1.net");
    CHECK(g.size() == 11);
    CHECK(g.undirected());
    CHECK(g.edge_count() == 44);
    CHECK(g.weight("2", "1") == RatFunc(1));
    CHECK(g.weight("1", "2") == RatFunc(1));
}

TEST_CASE("a document without vertices is rejected") {
    CHECK_THROWS_AS(parse_graph("[graph]\nname = x\n\n[vertices]\n\n[edges]\n"), SyntaxError);
    CHECK_THROWS_AS(parse_graph(""), SyntaxError);
}

TEST_CASE("duplicate and dangling edges are rejected") {
    std::string base = "[vertices]\n1\n2\n\n[edges]\n";
    CHECK_THROWS_AS(parse_graph(base + "1 -> 2 : 1\n1 -> 2 : 2\n"), DuplicateEdge);
    CHECK_THROWS_AS(parse_graph(base + "1 -> 3 : 1\n"), UnknownVertex);

    std::string undirected = "[graph]\nundirected = true\n\n[vertices]\n1\n2\n\n[edges]\n";
    CHECK_THROWS_AS(parse_graph(undirected + "1 -- 2 : 1\n2 -- 1 : 1\n"), DuplicateEdge);
}

TEST_CASE("weight errors carry document position") {
    try {
        parse_graph("[vertices]\n1\n\n[edges]\n1 -> 1 : 1//λ\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 5);
        CHECK(e.column == 12);  // second '/' of the weight expression
    }
}

TEST_CASE("zero weights drop out of the graph") {
    Graph g = parse_graph("[vertices]\n1\n2\n\n[edges]\n1 -> 2 : λ-λ\n");
    CHECK(g.edge_count() == 0);
}

TEST_CASE("serialization round trip") {
    for (const char* name : {"G.net", "H.net", "A1.net", "A2.net", "fig1.net",
                             "empty-weights-2node.net"}) {
        Graph g = testfix::load(name);
        CHECK(parse_graph(serialize_graph(g, "roundtrip")) == g);
    }
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testgen::random_graph(rng, 1, 6, testgen::WeightKind::RationalFunction);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
}
