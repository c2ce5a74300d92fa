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

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "isored/graph.hpp"
#include "isored/reduction.hpp"

namespace isored {

/**
 * Exact determinant of M_G(λ) − λI. Row denominators are cleared first and
 * the resulting polynomial matrix goes through fraction-free (Bareiss)
 * elimination, so every intermediate division is exact.
 */
RatFunc char_det(const Graph& g);

struct SpectrumReport {
    /// Canonical det(M(λ) − λI).
    RatFunc determinant;
    /// Clustered roots of the canonical numerator, with multiplicity.
    std::vector<Root> eigenvalues;
    /// Roots of the canonical denominator: λ values where the determinant
    /// is undefined. Canonicality keeps these disjoint from the eigenvalues.
    std::vector<Root> pole_roots;
};

/// Eigenvalue multiset of the graph; throws DegenerateDeterminant when
/// det(M(λ) − λI) ≡ 0.
SpectrumReport spectrum(const Graph& g, double cluster_tol = 1e-6);

struct VerificationSample {
    GaussianRational point;
    bool equal = false;
};

/**
 * Outcome of checking det(M_G(λ)−λI) = det(M_R(λ)−λI) · Π(w̃_k − λ), where
 * w̃_k is the loop weight of the k-th eliminated vertex at its removal time.
 * Both sides are evaluated in exact rational arithmetic at integer sample
 * points, so `verified` is a certificate up to sample count, not a float
 * comparison.
 */
struct VerificationRecord {
    bool verified = false;
    std::vector<VerificationSample> samples;
    /// Per removed vertex: the factor (w̃_k − λ).
    std::vector<std::pair<Label, RatFunc>> factors;
    Graph reduced;
};

/**
 * Sample-point verification of the reduction identity for reduce_to(g, keep).
 * Sample points are drawn uniformly from the integers in [−10⁶, 10⁶]; points
 * hitting a pole of either side are redrawn (bounded retries). `jobs` > 1
 * evaluates samples concurrently; results are deterministic for a fixed
 * seed either way.
 */
VerificationRecord verify_reduction_identity(const Graph& g, const std::set<Label>& keep,
                                             int n_samples = 20, std::uint64_t seed = 1729,
                                             int jobs = 1);

}  // namespace isored
