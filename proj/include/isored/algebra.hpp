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

#include <compare>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "isored/errors.hpp"

namespace isored {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Exact complex number a + bi with rational a, b.
 *
 * Both components are kept in lowest terms with positive denominators
 * (the backing rational type maintains that invariant). Equality is exact,
 * which is what makes weight comparison, isomorphism checking and
 * fixed-point detection decidable further up the stack.
 */
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int value) : re_(value) {}  // NOLINT: implicit by design
    GaussianRational(long long value) : re_(value) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Exact conversion of a complex double (dyadic components).
    /// Throws std::invalid_argument for non-finite input.
    static GaussianRational from_complex(std::complex<double> z);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    Integer re_num() const { return numerator(re_); }
    Integer re_den() const { return denominator(re_); }
    Integer im_num() const { return numerator(im_); }
    Integer im_den() const { return denominator(im_); }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conjugate() const { return {re_, -im_}; }
    /// |z|^2, an exact nonnegative rational.
    Rational squared_norm() const { return re_ * re_ + im_ * im_; }

    /// Rounds each component once.
    std::complex<double> to_complex() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);  // throws DivisionByZeroFunction

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    bool operator==(const GaussianRational&) const = default;
    /// Canonical ordering for sorting and map keys; not an algebraic order.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ < b.re_) return std::strong_ordering::less;
        if (b.re_ < a.re_) return std::strong_ordering::greater;
        if (a.im_ < b.im_) return std::strong_ordering::less;
        if (b.im_ < a.im_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/**
 * Dense polynomial in λ over GaussianRational, stored lowest degree first.
 * The zero polynomial is the empty coefficient list; otherwise the leading
 * (last) coefficient is nonzero.
 */
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(GaussianRational constant);  // NOLINT: implicit by design
    Polynomial(int constant) : Polynomial(GaussianRational(constant)) {}
    explicit Polynomial(std::vector<GaussianRational> coefficients);

    /// The monomial λ.
    static Polynomial variable();
    /// c · λ^k
    static Polynomial monomial(GaussianRational c, std::size_t k);

    const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Coefficient of λ^k (zero when k exceeds the degree).
    const GaussianRational& coeff(std::size_t k) const;
    const GaussianRational& leading() const;  // requires nonzero

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const GaussianRational& s, const Polynomial& p);

    /// Euclidean division by a nonzero divisor: returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
    /// Exact quotient; throws Error when the division leaves a remainder.
    friend Polynomial exact_div(const Polynomial& num, const Polynomial& den);

    Polynomial derivative() const;
    /// Leading coefficient scaled to 1 (zero polynomial stays zero).
    Polynomial monic() const;

    GaussianRational eval(const GaussianRational& z) const;
    std::complex<double> eval(std::complex<double> z) const;

    bool operator==(const Polynomial&) const = default;
    friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

/// Monic greatest common divisor (Euclid); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Monic least common multiple; zero when either argument is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/**
 * Canonical rational function p(λ)/q(λ): numerator and denominator share no
 * common factor, the denominator is monic and never zero, and the zero
 * function is 0/1. Equality of canonical forms is plain structural equality.
 */
class RatFunc {
public:
    RatFunc() : num_(), den_(GaussianRational(1)) {}
    RatFunc(int constant) : RatFunc(Polynomial(constant), Polynomial(1)) {}  // NOLINT
    RatFunc(GaussianRational constant) : RatFunc(Polynomial(std::move(constant)), Polynomial(1)) {}  // NOLINT
    RatFunc(Polynomial numerator) : RatFunc(std::move(numerator), Polynomial(1)) {}  // NOLINT
    /// Canonicalizes; throws ZeroDenominator when den ≡ 0.
    RatFunc(Polynomial numerator, Polynomial denominator);

    /// The function λ itself.
    static RatFunc lambda() { return RatFunc(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// deg(num) ≤ deg(den): membership in the subset closed under reduction.
    bool is_proper() const { return num_.degree() <= den_.degree(); }

    RatFunc operator-() const;
    RatFunc reciprocal() const;  // throws DivisionByZeroFunction on 0
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /// Exact evaluation; throws PoleError when the denominator vanishes at z.
    GaussianRational eval_exact(const GaussianRational& z) const;
    /// Exact rational evaluation followed by a single rounding per component.
    std::complex<double> eval(std::complex<double> z) const;

    bool operator==(const RatFunc&) const = default;
    friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

private:
    Polynomial num_;
    Polynomial den_;
};

/// The canonical representative of num/den (same as the two-argument
/// constructor, provided as a named operation).
inline RatFunc normalize(Polynomial num, Polynomial den) {
    return RatFunc(std::move(num), std::move(den));
}

/// One numeric root with its multiplicity.
struct Root {
    std::complex<double> value;
    int multiplicity = 1;
};

/**
 * All complex roots of p with multiplicity (their count equals deg p).
 *
 * Multiplicities are resolved exactly by square-free decomposition; the
 * square-free parts go through a companion-matrix eigensolve with Newton
 * polishing. Roots closer than cluster_tol are merged, summing
 * multiplicities. Results are sorted by (re, im). Throws ZeroPolynomial
 * for p ≡ 0.
 */
std::vector<Root> roots(const Polynomial& p, double cluster_tol = 1e-6);

}  // namespace isored
