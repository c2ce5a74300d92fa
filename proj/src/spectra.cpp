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

#include "isored/spectra.hpp"

#include <future>
#include <random>
#include <utility>

namespace isored {

namespace {

std::vector<std::vector<RatFunc>> characteristic_matrix(const Graph& g) {
    const auto& labels = g.labels();
    const std::size_t n = labels.size();
    std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = g.weight(labels[i], labels[j]);
            if (i == j) m[i][j] -= RatFunc::lambda();
        }
    return m;
}

// Fraction-free determinant of a polynomial matrix (Bareiss): every
// division below is exact by the Sylvester identity.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> a) {
    const std::size_t n = a.size();
    if (n == 0) return Polynomial(1);
    bool negate = false;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = {};
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// Exact determinant of a numeric matrix by Gaussian elimination over the
// rational-complex field.
GaussianRational exact_determinant(std::vector<std::vector<GaussianRational>> a) {
    const std::size_t n = a.size();
    GaussianRational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a[r][k].is_zero()) ++r;
        if (r == n) return GaussianRational();
        if (r != k) {
            std::swap(a[k], a[r]);
            det = -det;
        }
        det *= a[k][k];
        GaussianRational inv = GaussianRational(1) / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            GaussianRational f = a[i][k] * inv;
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
            a[i][k] = GaussianRational();
        }
    }
    return det;
}

// det(M_G(z) − zI) by exact evaluation; PoleError propagates.
GaussianRational char_det_at(const Graph& g, const GaussianRational& z) {
    const auto& labels = g.labels();
    const std::size_t n = labels.size();
    std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const RatFunc& w = g.weight(labels[i], labels[j]);
            if (!w.is_zero()) m[i][j] = w.eval_exact(z);
            if (i == j) m[i][j] -= z;
        }
    }
    return exact_determinant(std::move(m));
}

}  // namespace

RatFunc char_det(const Graph& g) {
    auto m = characteristic_matrix(g);
    const std::size_t n = m.size();
    if (n == 0) return RatFunc(1);

    std::vector<std::vector<Polynomial>> cleared(n, std::vector<Polynomial>(n));
    Polynomial scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial row_lcm(1);
        for (std::size_t j = 0; j < n; ++j) row_lcm = lcm(row_lcm, m[i][j].den());
        for (std::size_t j = 0; j < n; ++j)
            cleared[i][j] = m[i][j].num() * exact_div(row_lcm, m[i][j].den());
        scale = scale * row_lcm;
    }
    return RatFunc(bareiss_determinant(std::move(cleared)), std::move(scale));
}

SpectrumReport spectrum(const Graph& g, double cluster_tol) {
    SpectrumReport report;
    report.determinant = char_det(g);
    if (report.determinant.is_zero()) throw DegenerateDeterminant();
    report.eigenvalues = roots(report.determinant.num(), cluster_tol);
    if (report.determinant.den().degree() > 0)
        report.pole_roots = roots(report.determinant.den(), cluster_tol);
    return report;
}

VerificationRecord verify_reduction_identity(const Graph& g, const std::set<Label>& keep,
                                             int n_samples, std::uint64_t seed, int jobs) {
    if (n_samples <= 0) throw std::invalid_argument("sample count must be positive");
    auto [reduced, trace] = reduce_to_with_trace(g, keep);

    VerificationRecord record;
    record.reduced = reduced;
    for (const auto& step : trace.steps)
        record.factors.emplace_back(step.vertex, step.loop_weight - RatFunc::lambda());

    // Pre-drawn per-sample seeds keep the result identical regardless of
    // how samples are spread over jobs.
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> sample_seeds(static_cast<std::size_t>(n_samples));
    for (auto& s : sample_seeds) s = rng();

    const Graph& reduced_ref = record.reduced;
    auto evaluate_one = [&g, &reduced_ref, &record](std::uint64_t sample_seed) {
        std::mt19937_64 local(sample_seed);
        for (int attempt = 0; attempt < 64; ++attempt) {
            GaussianRational z(Rational(static_cast<std::int64_t>(local() % 2000001) - 1000000));
            try {
                GaussianRational lhs = char_det_at(g, z);
                GaussianRational rhs = char_det_at(reduced_ref, z);
                for (const auto& [vertex, factor] : record.factors) rhs *= factor.eval_exact(z);
                return VerificationSample{z, lhs == rhs};
            } catch (const PoleError&) {
                // redraw
            }
        }
        throw Error("could not find a pole-free sample point after 64 draws");
    };

    record.samples.resize(static_cast<std::size_t>(n_samples));
    if (jobs <= 1) {
        for (int i = 0; i < n_samples; ++i)
            record.samples[static_cast<std::size_t>(i)] = evaluate_one(sample_seeds[static_cast<std::size_t>(i)]);
    } else {
        std::vector<std::future<VerificationSample>> futures;
        futures.reserve(static_cast<std::size_t>(n_samples));
        for (int i = 0; i < n_samples; ++i)
            futures.push_back(std::async(std::launch::async, evaluate_one,
                                         sample_seeds[static_cast<std::size_t>(i)]));
        for (int i = 0; i < n_samples; ++i)
            record.samples[static_cast<std::size_t>(i)] = futures[static_cast<std::size_t>(i)].get();
    }

    record.verified = true;
    for (const auto& s : record.samples) record.verified = record.verified && s.equal;
    return record;
}

}  // namespace isored
