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

// Deterministic random-value generators shared by the test suites.

#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "isored/algebra.hpp"
#include "isored/graph.hpp"

namespace testgen {

using isored::GaussianRational;
using isored::Graph;
using isored::Label;
using isored::Polynomial;
using isored::RatFunc;
using isored::Rational;

inline std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational random_rational(std::mt19937_64& rng, int span = 6) {
    return Rational(pick(rng, -span, span), pick(rng, 1, span));
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, bool allow_imaginary = true) {
    Rational re = random_rational(rng);
    Rational im = allow_imaginary && rng() % 3 == 0 ? random_rational(rng) : Rational(0);
    return {re, im};
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, bool allow_zero = true) {
    if (allow_zero && rng() % 8 == 0) return {};
    int deg = static_cast<int>(pick(rng, 0, max_degree));
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : coeffs) c = random_gaussian(rng);
    if (coeffs.back().is_zero()) coeffs.back() = GaussianRational(1);
    return Polynomial(std::move(coeffs));
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, int max_deg = 3) {
    Polynomial num = random_polynomial(rng, max_deg);
    Polynomial den = random_polynomial(rng, max_deg, /*allow_zero=*/false);
    return RatFunc(num, den);
}

inline RatFunc random_nonzero_ratfunc(std::mt19937_64& rng, int max_deg = 3) {
    for (;;) {
        RatFunc f = random_ratfunc(rng, max_deg);
        if (!f.is_zero()) return f;
    }
}

enum class WeightKind { ConstantRational, RationalFunction };

inline RatFunc random_weight(std::mt19937_64& rng, WeightKind kind) {
    if (kind == WeightKind::ConstantRational) {
        Rational r = random_rational(rng);
        if (r == 0) r = 1;
        return RatFunc(GaussianRational(r));
    }
    // Small pool biased toward the weight shapes that show up in practice:
    // constants, c/λ, and low-degree fractions.
    switch (rng() % 4) {
        case 0: return RatFunc(GaussianRational(random_rational(rng))) + RatFunc(1);
        case 1: return RatFunc(Polynomial(GaussianRational(Rational(pick(rng, 1, 3)))), Polynomial::variable());
        default: return random_nonzero_ratfunc(rng, 1);
    }
}

/// Random digraph on labels "1".."n" with ~30% arc density.
inline Graph random_graph(std::mt19937_64& rng, int min_n, int max_n, WeightKind kind,
                          int loop_percent = 30) {
    int n = static_cast<int>(pick(rng, min_n, max_n));
    std::vector<Label> labels;
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    Graph g(labels);
    for (const auto& u : labels) {
        for (const auto& v : labels) {
            int threshold = u == v ? loop_percent : 30;
            if (static_cast<int>(rng() % 100) < threshold) g.set_weight(u, v, random_weight(rng, kind));
        }
    }
    return g;
}

/// All structural subsets of g (n must be small; 2^n scan).
inline std::vector<std::set<Label>> structural_subsets(const Graph& g, bool proper_only) {
    const auto& labels = g.labels();
    std::vector<std::set<Label>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << labels.size()); ++mask) {
        if (proper_only && mask == (std::uint64_t(1) << labels.size()) - 1) continue;
        std::set<Label> s;
        for (std::size_t b = 0; b < labels.size(); ++b)
            if (mask & (std::uint64_t(1) << b)) s.insert(labels[b]);
        if (isored::is_structural(g, s).structural) out.push_back(std::move(s));
    }
    return out;
}

inline std::set<Label> random_structural_subset(std::mt19937_64& rng, const Graph& g,
                                                bool proper_only = true) {
    auto all = structural_subsets(g, proper_only);
    // The complement of a single vertex with loop ≠ λ is always structural,
    // so this only trips on adversarial inputs.
    if (all.empty()) throw std::runtime_error("graph has no structural subset");
    return all[rng() % all.size()];
}

}  // namespace testgen
