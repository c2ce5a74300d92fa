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

#include <set>
#include <vector>

#include "isored/graph.hpp"

namespace isored {

/**
 * Eliminate one vertex: every remaining pair (i, j) picks up the correction
 * w(i,v)·w(v,j)/(λ − w(v,v)) on top of w(i,j), and weights that cancel to
 * exactly zero delete their edge. Throws DivisionByLambda when the loop
 * weight at v is identically λ.
 */
Graph remove_vertex(const Graph& g, const Label& v);

/// One elimination step as recorded by reduce_to_with_trace: the removed
/// vertex and its loop weight at removal time.
struct RemovalStep {
    Label vertex;
    RatFunc loop_weight;
};

struct ReductionTrace {
    std::vector<RemovalStep> steps;
};

/**
 * Reduce g onto the nonempty subset S by eliminating V∖S one vertex at a
 * time. The result does not depend on the removal order; reduce_to(g, V)
 * is g itself. DivisionByLambda carries the offending vertex and the
 * removal prefix that produced it.
 */
Graph reduce_to(const Graph& g, const std::set<Label>& keep);

/// Same, also returning the per-step loop weights (the determinant
/// correction factors are (loop − λ) per step).
std::pair<Graph, ReductionTrace> reduce_to_with_trace(const Graph& g, const std::set<Label>& keep);

/**
 * Direct reduction by branch summation: entry (i, j) sums the weight of
 * every branch from i to j whose interior vertices all lie outside S.
 * Requires S structural (throws NotStructural otherwise); agrees exactly
 * with reduce_to there.
 */
Graph branch_reduce(const Graph& g, const std::set<Label>& keep);

}  // namespace isored
