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

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isored/graph.hpp"
#include "isored/reduction.hpp"

namespace isored {

/**
 * A deterministic vertex selector: keep the vertices whose characteristic
 * value clears a fraction of the graph-wide maximum, strictly or not.
 *
 * The built-in rules:
 *   tau1 — degree    > m/2
 *   tau2 — indegree  ≥ m⁻/2
 *   tau3 — indegree  > m⁻/4
 */
struct Rule {
    std::string name;
    Characteristic characteristic = Characteristic::Degree;
    Rational fraction{1, 2};
    bool strict = true;
    PairConvention convention = kDefaultPairConvention;
};

/// "tau1" / "tau2" / "tau3", or nullopt for anything else.
std::optional<Rule> builtin_rule(const std::string& name);

/**
 * Rule from a "characteristic:fraction:comparison" spec, e.g.
 * "indegree:1/2:ge" or "betweenness:1/4:gt". Also accepts the built-in
 * names. Throws Error on a malformed spec.
 */
Rule parse_rule(const std::string& spec);

/// Vertices selected by the rule; throws EmptySelection when no vertex
/// clears the threshold (the dynamics require nonempty selections).
std::set<Label> apply_rule(const Rule& rule, const Graph& g);

/// One move of the dynamical system: reduce g onto the selected subset.
/// The selection need not be structural; sequential elimination covers it.
Graph step(const Rule& rule, const Graph& g);

enum class TerminationReason { FixedPoint, SingleVertex, StepCap, Error };

const char* to_string(TerminationReason reason);

/**
 * The trajectory of a graph under iterated rule application.
 * graphs[k+1] = reduce_to(graphs[k], selections[k]); every step removes at
 * least one vertex, so there are at most |V(graphs[0])| steps. On a fixed
 * point, selections has one final entry equal to the whole vertex set.
 */
struct Orbit {
    std::vector<Graph> graphs;
    std::vector<std::set<Label>> selections;
    TerminationReason terminated = TerminationReason::FixedPoint;

    std::size_t steps() const { return graphs.size() - 1; }
    const Graph& attractor() const { return graphs.back(); }
};

struct AttractorReport {
    Graph attractor;
    std::size_t steps = 0;
    /// Whether every vertex of the attractor shares the characteristic value.
    bool uniform = false;
    CharacteristicVector values;
};

struct OrbitResult {
    Orbit orbit;
    AttractorReport report;
};

/**
 * Iterate `step` until the rule selects every remaining vertex or a single
 * vertex is left. The default step cap is |V(g)|, which the convergence
 * bound makes sufficient; StepCapExceeded on a smaller explicit cap is an
 * anomaly report, not a normal exit.
 */
OrbitResult orbit(const Rule& rule, const Graph& g,
                  std::optional<std::size_t> max_steps = std::nullopt);

/// True when the rule fixes g: it selects all vertices, or only one is left.
/// A rule that selects nothing does not fix anything.
bool is_attractor(const Rule& rule, const Graph& g);

struct UniformityCheck {
    bool uniform = false;
    CharacteristicVector values;
};

/// Whether all vertices share the characteristic's value.
UniformityCheck uniformity(Characteristic which, const Graph& g,
                           PairConvention convention = kDefaultPairConvention);

}  // namespace isored
