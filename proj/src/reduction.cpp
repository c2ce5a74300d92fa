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

#include "isored/reduction.hpp"

#include <algorithm>

namespace isored {

namespace {

Graph remove_vertex_impl(const Graph& g, const Label& v, const std::vector<Label>& prefix) {
    g.index_of(v);
    RatFunc pivot = RatFunc::lambda() - g.weight(v, v);
    if (pivot.is_zero()) throw DivisionByLambda(v, prefix);

    std::vector<Label> kept;
    for (const auto& l : g.labels())
        if (l != v) kept.push_back(l);
    Graph out(kept, g.undirected());

    for (const auto& [pair, w] : g.weights())
        if (pair.first != v && pair.second != v) out.set_weight(pair.first, pair.second, w);

    // Only pairs with arcs through v change.
    for (const auto& i : g.in_neighbors(v)) {
        if (i == v) continue;
        for (const auto& j : g.out_neighbors(v)) {
            if (j == v) continue;
            RatFunc corrected = out.weight(i, j) + g.weight(i, v) * g.weight(v, j) / pivot;
            out.set_weight(i, j, std::move(corrected));
        }
    }
    return out;
}

}  // namespace

Graph remove_vertex(const Graph& g, const Label& v) { return remove_vertex_impl(g, v, {}); }

std::pair<Graph, ReductionTrace> reduce_to_with_trace(const Graph& g, const std::set<Label>& keep) {
    if (keep.empty()) throw EmptySelection("reduce_to");
    for (const auto& l : keep) g.index_of(l);

    ReductionTrace trace;
    Graph current = g;
    std::vector<Label> removed;
    for (const auto& l : g.labels()) {
        if (keep.count(l)) continue;
        trace.steps.push_back({l, current.weight(l, l)});
        current = remove_vertex_impl(current, l, removed);
        removed.push_back(l);
    }
    return {std::move(current), std::move(trace)};
}

Graph reduce_to(const Graph& g, const std::set<Label>& keep) {
    return reduce_to_with_trace(g, keep).first;
}

Graph branch_reduce(const Graph& g, const std::set<Label>& keep) {
    StructuralCheck check = is_structural(g, keep);
    if (!check.structural) throw NotStructural(check.reason);

    std::vector<Label> kept;
    for (const auto& l : g.labels())
        if (keep.count(l)) kept.push_back(l);
    Graph out(kept, g.undirected());

    // Depth-first branch enumeration from each start vertex. Interior
    // vertices live outside S and are pairwise distinct, and the induced
    // subgraph on V∖S is acyclic up to loops, so the walk terminates.
    for (const auto& start : kept) {
        std::map<Label, RatFunc> row;
        std::set<Label> on_path;
        auto extend = [&](auto&& self, const Label& u, const RatFunc& acc) -> void {
            // acc is the branch weight accumulated up to interior vertex u,
            // not yet including u's outgoing hop.
            RatFunc interior = RatFunc::lambda() - g.weight(u, u);
            for (const auto& x : g.out_neighbors(u)) {
                if (x == u) continue;
                RatFunc next = acc * (g.weight(u, x) / interior);
                if (keep.count(x)) {
                    row[x] += next;
                } else if (!on_path.count(x)) {
                    on_path.insert(x);
                    self(self, x, next);
                    on_path.erase(x);
                }
            }
        };
        for (const auto& x : g.out_neighbors(start)) {
            if (keep.count(x)) {
                row[x] += g.weight(start, x);  // length-1 branches, loops included
            } else {
                on_path.insert(x);
                extend(extend, x, g.weight(start, x));
                on_path.erase(x);
            }
        }
        for (auto& [to, w] : row) out.set_weight(start, to, std::move(w));
    }
    return out;
}

}  // namespace isored
