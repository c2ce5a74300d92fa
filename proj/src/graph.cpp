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

#include "isored/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace isored {

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<Label> labels, bool undirected) : undirected_(undirected) {
    for (auto& l : labels) add_vertex(l);
}

void Graph::add_vertex(const Label& label) {
    if (index_.count(label)) throw Error("duplicate vertex label '" + label + "'");
    index_[label] = labels_.size();
    labels_.push_back(label);
}

void Graph::set_weight(const Label& from, const Label& to, RatFunc weight) {
    index_of(from);
    index_of(to);
    if (weight.is_zero())
        weights_.erase({from, to});
    else
        weights_[{from, to}] = std::move(weight);
}

std::size_t Graph::index_of(const Label& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownVertex(label);
    return it->second;
}

bool Graph::has_edge(const Label& from, const Label& to) const {
    return weights_.count({from, to}) > 0;
}

const RatFunc& Graph::weight(const Label& from, const Label& to) const {
    static const RatFunc zero;
    auto it = weights_.find({from, to});
    return it == weights_.end() ? zero : it->second;
}

std::vector<Label> Graph::out_neighbors(const Label& from) const {
    std::vector<Label> out;
    auto it = weights_.lower_bound({from, Label()});
    for (; it != weights_.end() && it->first.first == from; ++it) out.push_back(it->first.second);
    return out;
}

std::vector<Label> Graph::in_neighbors(const Label& to) const {
    std::vector<Label> in;
    for (const auto& [pair, w] : weights_)
        if (pair.second == to) in.push_back(pair.first);
    return in;
}

// ---------------------------------------------------------------------------
// Characteristics

const char* to_string(Characteristic c) {
    switch (c) {
        case Characteristic::Indegree: return "indegree";
        case Characteristic::Outdegree: return "outdegree";
        case Characteristic::Degree: return "degree";
        case Characteristic::Betweenness: return "betweenness";
    }
    return "?";
}

std::optional<Characteristic> characteristic_from_string(const std::string& name) {
    if (name == "indegree") return Characteristic::Indegree;
    if (name == "outdegree") return Characteristic::Outdegree;
    if (name == "degree") return Characteristic::Degree;
    if (name == "betweenness") return Characteristic::Betweenness;
    return std::nullopt;
}

std::map<Label, DegreeTriple> degrees(const Graph& g) {
    std::map<Label, DegreeTriple> out;
    for (const auto& l : g.labels()) out[l] = DegreeTriple{};
    if (g.undirected()) {
        // Neighbor count; the two stored arcs of one undirected edge are the
        // same neighbor, and a loop stores a single arc, so counting
        // out-arcs is exactly the neighbor count.
        for (const auto& [pair, w] : g.weights()) {
            (void)w;
            out[pair.first].total += 1;
        }
        for (auto& [l, d] : out) {
            d.indeg = d.outdeg = d.total;
        }
        return out;
    }
    for (const auto& [pair, w] : g.weights()) {
        (void)w;
        out[pair.first].outdeg += 1;
        out[pair.second].indeg += 1;
    }
    for (auto& [l, d] : out) d.total = d.indeg + d.outdeg;
    return out;
}

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

struct Adjacency {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;
};

// Non-loop arcs by vertex index.
Adjacency adjacency(const Graph& g) {
    Adjacency adj;
    adj.out.resize(g.size());
    adj.in.resize(g.size());
    for (const auto& [pair, w] : g.weights()) {
        (void)w;
        if (pair.first == pair.second) continue;
        int u = static_cast<int>(g.index_of(pair.first));
        int v = static_cast<int>(g.index_of(pair.second));
        adj.out[u].push_back(v);
        adj.in[v].push_back(u);
    }
    return adj;
}

// BFS shortest-path distances and path counts from source over `next`.
void count_paths(const std::vector<std::vector<int>>& next, int source,
                 std::vector<std::int64_t>& dist, std::vector<std::int64_t>& sigma) {
    dist.assign(next.size(), kUnreached);
    sigma.assign(next.size(), 0);
    dist[source] = 0;
    sigma[source] = 1;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : next[u]) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
    }
}

}  // namespace

std::map<Label, std::int64_t> betweenness(const Graph& g, PairConvention convention) {
    const int n = static_cast<int>(g.size());
    Adjacency adj = adjacency(g);

    // Forward sweep from every s (σ of s→v) and backward sweep from every t
    // over reversed arcs (σ of v→t).
    std::vector<std::vector<std::int64_t>> dist(n), sigma(n), rdist(n), rsigma(n);
    for (int v = 0; v < n; ++v) {
        count_paths(adj.out, v, dist[v], sigma[v]);
        count_paths(adj.in, v, rdist[v], rsigma[v]);
    }

    const bool once_per_pair = convention == PairConvention::Unordered && g.undirected();
    std::vector<std::int64_t> score(n, 0);
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t || dist[s][t] == kUnreached) continue;
            if (once_per_pair && s > t) continue;
            for (int v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                if (dist[s][v] == kUnreached || rdist[t][v] == kUnreached) continue;
                if (dist[s][v] + rdist[t][v] == dist[s][t]) score[v] += sigma[s][v] * rsigma[t][v];
            }
        }
    }

    std::map<Label, std::int64_t> out;
    for (int v = 0; v < n; ++v) out[g.labels()[static_cast<std::size_t>(v)]] = score[v];
    return out;
}

CharacteristicVector characteristic_values(const Graph& g, Characteristic which,
                                           PairConvention convention) {
    CharacteristicVector cv;
    cv.name = which;
    if (which == Characteristic::Betweenness) {
        for (const auto& [l, value] : betweenness(g, convention)) cv.values[l] = value;
        return cv;
    }
    for (const auto& [l, d] : degrees(g)) {
        switch (which) {
            case Characteristic::Indegree: cv.values[l] = d.indeg; break;
            case Characteristic::Outdegree: cv.values[l] = d.outdeg; break;
            default: cv.values[l] = d.total; break;
        }
    }
    return cv;
}

std::optional<std::vector<Label>> find_nonloop_cycle_avoiding(const Graph& g,
                                                              const std::set<Label>& s) {
    for (const auto& l : s) g.index_of(l);

    // DFS over the subgraph induced on V∖S looking for a back arc that
    // closes a cycle of length ≥ 2.
    enum class Color { White, Gray, Black };
    std::map<Label, Color> color;
    std::map<Label, Label> parent;
    std::vector<Label> order;
    for (const auto& l : g.labels()) {
        if (s.count(l)) continue;
        order.push_back(l);
        color[l] = Color::White;
    }

    std::optional<std::vector<Label>> found;
    auto visit = [&](auto&& self, const Label& u) -> bool {
        color[u] = Color::Gray;
        for (const Label& v : g.out_neighbors(u)) {
            if (v == u || s.count(v)) continue;  // loop arc, or outside V∖S
            if (color[v] == Color::Gray) {
                // Cycle v → … → u → v along the current DFS path.
                std::vector<Label> tail;
                for (Label w = u; w != v; w = parent.at(w)) tail.push_back(w);
                std::vector<Label> cycle{v};
                for (auto it = tail.rbegin(); it != tail.rend(); ++it) cycle.push_back(*it);
                cycle.push_back(v);
                found = std::move(cycle);
                return true;
            }
            if (color[v] == Color::White) {
                parent[v] = u;
                if (self(self, v)) return true;
            }
        }
        color[u] = Color::Black;
        return false;
    };

    for (const auto& root : order)
        if (color[root] == Color::White && visit(visit, root)) return found;
    return std::nullopt;
}

namespace {

StructuralCheck structural_impl(const Graph& g, const std::set<Label>& s,
                                const GaussianRational* lambda0) {
    if (s.empty()) return {false, "the set is empty"};
    for (const auto& l : s) g.index_of(l);

    if (auto cycle = find_nonloop_cycle_avoiding(g, s)) {
        std::string path;
        for (std::size_t i = 0; i < cycle->size(); ++i) {
            if (i) path += ",";
            path += (*cycle)[i];
        }
        return {false, "non-loop cycle (" + path + ") avoids the set"};
    }

    const RatFunc lambda = RatFunc::lambda();
    for (const auto& l : g.labels()) {
        if (s.count(l)) continue;
        if (g.weight(l, l) == lambda)
            return {false, "loop weight at excluded vertex '" + l + "' is identically λ"};
        if (lambda0 && g.weight(l, l) == RatFunc(*lambda0))
            return {false, "loop weight at excluded vertex '" + l + "' equals the excluded constant"};
    }
    return {true, "structural"};
}

}  // namespace

StructuralCheck is_structural(const Graph& g, const std::set<Label>& s) {
    return structural_impl(g, s, nullptr);
}

StructuralCheck is_lambda0_structural(const Graph& g, const std::set<Label>& s,
                                      const GaussianRational& lambda0) {
    return structural_impl(g, s, &lambda0);
}

}  // namespace isored
