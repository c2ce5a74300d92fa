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

#include "isored/equivalence.hpp"

#include <algorithm>
#include <vector>

namespace isored {

namespace {

// Per-vertex invariant used to prune the search: mapped vertices must agree
// on all of it.
struct VertexSignature {
    DegreeTriple degree;
    RatFunc loop;
    std::vector<RatFunc> out_weights;  // sorted
    std::vector<RatFunc> in_weights;   // sorted
    bool operator==(const VertexSignature&) const = default;
};

std::vector<VertexSignature> signatures(const Graph& g) {
    auto degree_map = degrees(g);
    std::vector<VertexSignature> out;
    out.reserve(g.size());
    for (const auto& l : g.labels()) {
        VertexSignature sig;
        sig.degree = degree_map.at(l);
        sig.loop = g.weight(l, l);
        for (const auto& v : g.out_neighbors(l)) sig.out_weights.push_back(g.weight(l, v));
        for (const auto& v : g.in_neighbors(l)) sig.in_weights.push_back(g.weight(v, l));
        std::sort(sig.out_weights.begin(), sig.out_weights.end());
        std::sort(sig.in_weights.begin(), sig.in_weights.end());
        out.push_back(std::move(sig));
    }
    return out;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& g, const Graph& h)
        : g_(g), h_(h), sig_g_(signatures(g)), sig_h_(signatures(h)) {}

    std::optional<std::map<Label, Label>> run() {
        const std::size_t n = g_.size();
        mapping_.assign(n, kUnset);
        used_.assign(n, false);
        if (!search(0)) return std::nullopt;
        std::map<Label, Label> out;
        for (std::size_t i = 0; i < n; ++i) out[g_.labels()[i]] = h_.labels()[mapping_[i]];
        return out;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    // Arcs between already-mapped vertices must match in both directions
    // with exactly equal weights.
    bool consistent(std::size_t i, std::size_t j) const {
        if (!(sig_g_[i] == sig_h_[j])) return false;
        for (std::size_t k = 0; k < mapping_.size(); ++k) {
            if (mapping_[k] == kUnset) continue;
            const Label& gi = g_.labels()[i];
            const Label& gk = g_.labels()[k];
            const Label& hj = h_.labels()[j];
            const Label& hk = h_.labels()[mapping_[k]];
            if (g_.weight(gi, gk) != h_.weight(hj, hk)) return false;
            if (g_.weight(gk, gi) != h_.weight(hk, hj)) return false;
        }
        return true;
    }

    bool search(std::size_t i) {
        if (i == mapping_.size()) return true;
        for (std::size_t j = 0; j < mapping_.size(); ++j) {
            if (used_[j] || !consistent(i, j)) continue;
            mapping_[i] = j;
            used_[j] = true;
            if (search(i + 1)) return true;
            mapping_[i] = kUnset;
            used_[j] = false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<VertexSignature> sig_g_;
    std::vector<VertexSignature> sig_h_;
    std::vector<std::size_t> mapping_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::map<Label, Label>> isomorphic(const Graph& g, const Graph& h) {
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
    return IsomorphismSearch(g, h).run();
}

bool strong_equiv(const Rule& rule, const Graph& g, const Graph& h) {
    return isomorphic(step(rule, g), step(rule, h)).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> weak_equiv(
    const Rule& rule, const Graph& g, const Graph& h, std::optional<std::size_t> bound) {
    std::size_t cap = bound.value_or(std::max(g.size(), h.size()));
    if (cap < std::max(g.size(), h.size()))
        throw std::invalid_argument("weak equivalence bound below the orbit-length bound");
    auto orbit_g = orbit(rule, g, cap).orbit.graphs;
    auto orbit_h = orbit(rule, h, cap).orbit.graphs;
    for (std::size_t m = 0; m < orbit_g.size(); ++m)
        for (std::size_t k = 0; k < orbit_h.size(); ++k)
            if (isomorphic(orbit_g[m], orbit_h[k])) return std::pair{m, k};
    return std::nullopt;
}

AttractorComparison same_attractor(const Rule& rule, const Graph& g, const Graph& h) {
    AttractorComparison out;
    out.attractor_g = orbit(rule, g).orbit.attractor();
    out.attractor_h = orbit(rule, h).orbit.attractor();
    out.same = isomorphic(out.attractor_g, out.attractor_h).has_value();
    return out;
}

}  // namespace isored
