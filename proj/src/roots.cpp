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

#include <algorithm>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "isored/algebra.hpp"

namespace isored {

namespace {

// Newton refinement target; companion eigenvalues are close enough that a
// handful of steps reaches it on square-free (simple-root) factors.
constexpr double kRefineTol = 1e-9;

// Yun's square-free decomposition: p = Π factor_i ^ multiplicity_i with each
// factor square-free. Exact over the rational-complex coefficient field, so
// multiplicities carry no numeric ambiguity.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = p.monic();
    Polynomial df = f.derivative();
    Polynomial a0 = gcd(f, df);
    if (a0.degree() == 0) {
        out.emplace_back(std::move(f), 1);
        return out;
    }
    Polynomial b = exact_div(f, a0);
    Polynomial c = exact_div(df, a0);
    Polynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    return out;
}

std::vector<std::complex<double>> companion_eigenvalues(const Polynomial& monic) {
    const int n = monic.degree();
    if (n == 1) return {-monic.coeff(0).to_complex()};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) m(i + 1, i) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -monic.coeff(static_cast<std::size_t>(i)).to_complex();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

std::complex<double> polish(const Polynomial& p, const Polynomial& dp, std::complex<double> z) {
    for (int iter = 0; iter < 60; ++iter) {
        std::complex<double> d = dp.eval(z);
        if (std::abs(d) == 0.0) break;
        std::complex<double> delta = p.eval(z) / d;
        z -= delta;
        if (std::abs(delta) <= kRefineTol * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

}  // namespace

std::vector<Root> roots(const Polynomial& p, double cluster_tol) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (cluster_tol <= 0) throw std::invalid_argument("cluster tolerance must be positive");
    std::vector<Root> found;
    if (p.degree() == 0) return found;

    for (const auto& [factor, multiplicity] : square_free_decomposition(p)) {
        Polynomial dfactor = factor.derivative();
        for (std::complex<double> z : companion_eigenvalues(factor))
            found.push_back({polish(factor, dfactor, z), multiplicity});
    }

    // Merge roots that land within cluster_tol of an existing cluster,
    // tracking multiplicity-weighted means. Quadratic, fine at desk scale.
    std::vector<Root> clusters;
    std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
        return std::pair(a.value.real(), a.value.imag()) < std::pair(b.value.real(), b.value.imag());
    });
    for (const Root& r : found) {
        bool merged = false;
        for (Root& c : clusters) {
            if (std::abs(r.value - c.value) <= cluster_tol) {
                double total = static_cast<double>(c.multiplicity + r.multiplicity);
                c.value = (c.value * static_cast<double>(c.multiplicity) +
                           r.value * static_cast<double>(r.multiplicity)) /
                          total;
                c.multiplicity += r.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back(r);
    }
    std::sort(clusters.begin(), clusters.end(), [](const Root& a, const Root& b) {
        return std::pair(a.value.real(), a.value.imag()) < std::pair(b.value.real(), b.value.imag());
    });
    return clusters;
}

}  // namespace isored
