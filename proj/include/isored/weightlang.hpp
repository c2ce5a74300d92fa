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

#include <cstddef>
#include <string>
#include <vector>

#include "isored/algebra.hpp"
#include "isored/graph.hpp"

namespace isored {

/**
 * Weight expression grammar (normative):
 *
 *   expr  := sum | sum "/" sum
 *   sum   := ["+"|"-"] term (("+"|"-") term)*
 *   term  := coeff ("*"? var)? | var
 *   var   := ("λ" | "lambda" | "L") ("^" uint)?
 *   coeff := int ("/" uint)? ("i")? | "(" sum ")"
 *
 * Division binds once at the top level, splitting the expression into a
 * single numerator/denominator pair; composite polynomials on either side
 * need parentheses. A "/" directly inside a number ("3/4", "3/4i") is read
 * as a rational coefficient (maximal munch), which coincides in value with
 * the top-level split whenever both readings are possible. Columns in
 * errors count Unicode code points, 1-based.
 */
RatFunc parse_weight(const std::string& text);

/// Canonical text form; parse_weight(print_weight(f)) == f exactly.
/// Constants print without a "/1" suffix.
std::string print_weight(const RatFunc& f);

/// Polynomial part of the printer (used for report output).
std::string print_polynomial(const Polynomial& p);

/**
 * Line-oriented graph document:
 *
 *   # comment
 *   [graph]
 *   name = G
 *   undirected = false
 *
 *   [vertices]
 *   1
 *   2
 *
 *   [edges]
 *   1 -> 2 : 1
 *   1 -> 1 : 1/λ
 *
 * Undirected documents join vertices with "--" instead of "->"; each listed
 * edge then materializes both directed arcs (a loop materializes one).
 */
struct GraphDocument {
    struct Edge {
        Label from;
        Label to;
        std::string weight;
        std::size_t line = 0;    // for diagnostics
        std::size_t column = 0;  // column where the weight expression starts
    };

    std::string name;
    bool undirected = false;
    std::vector<Label> vertices;
    std::vector<Edge> edges;
};

GraphDocument parse_document(const std::string& text);

/// Validates the document and builds the graph with canonical weights.
Graph to_graph(const GraphDocument& doc);

inline Graph parse_graph(const std::string& text) { return to_graph(parse_document(text)); }

/// Canonical serialization; reparses to an identical graph. Undirected
/// graphs are written one edge per unordered pair.
std::string serialize_graph(const Graph& g, const std::string& name = "");

}  // namespace isored
