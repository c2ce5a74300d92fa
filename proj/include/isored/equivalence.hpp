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

#include <map>
#include <optional>
#include <utility>

#include "isored/dynamics.hpp"
#include "isored/graph.hpp"

namespace isored {

/**
 * A weight-preserving digraph isomorphism (label bijection such that every
 * arc maps to an arc of exactly equal canonical weight), or nullopt.
 * Backtracking search pruned by degree triples and per-vertex sorted weight
 * multisets; intended for the small graphs this library works with.
 */
std::optional<std::map<Label, Label>> isomorphic(const Graph& g, const Graph& h);

/// One-step equivalence: the two graphs reduce to isomorphic graphs in a
/// single application of the rule.
bool strong_equiv(const Rule& rule, const Graph& g, const Graph& h);

/**
 * Multi-step equivalence: the lexicographically least (m, k) such that the
 * m-th orbit graph of g is isomorphic to the k-th orbit graph of h, or
 * nullopt. (0, 0) is admissible: isomorphic inputs are equivalent as they
 * stand. `bound` caps both orbit lengths and defaults to max(|V(g)|, |V(h)|),
 * which the convergence bound makes sufficient.
 */
std::optional<std::pair<std::size_t, std::size_t>> weak_equiv(
    const Rule& rule, const Graph& g, const Graph& h,
    std::optional<std::size_t> bound = std::nullopt);

struct AttractorComparison {
    bool same = false;
    Graph attractor_g;
    Graph attractor_h;
};

/// Whether both orbits end in isomorphic attractors.
AttractorComparison same_attractor(const Rule& rule, const Graph& g, const Graph& h);

}  // namespace isored
