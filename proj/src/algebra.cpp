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

#include "isored/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace isored {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::from_complex(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("non-finite sample point");
    // Doubles are dyadic rationals; the conversion below is exact.
    return {Rational(z.real()), Rational(z.imag())};
}

std::complex<double> GaussianRational::to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.squared_norm();
    if (n == 0) throw DivisionByZeroFunction();
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(GaussianRational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::variable() { return monomial(GaussianRational(1), 1); }

Polynomial Polynomial::monomial(GaussianRational c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<GaussianRational> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const GaussianRational& Polynomial::coeff(std::size_t k) const {
    static const GaussianRational zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

const GaussianRational& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
    if (s.is_zero()) return {};
    Polynomial r(p);
    for (auto& c : r.coeffs_) c *= s;
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw Error("polynomial division by zero");
    Polynomial q;
    Polynomial r = num;
    const int dd = den.degree();
    const GaussianRational& lead = den.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        GaussianRational c = r.leading() / lead;
        std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
        Polynomial t = Polynomial::monomial(std::move(c), shift);
        q += t;
        r -= t * den;
    }
    return {std::move(q), std::move(r)};
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw Error("polynomial division was expected to be exact");
    return q;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussianRational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = GaussianRational(Rational(k)) * coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    Polynomial r(*this);
    GaussianRational inv = GaussianRational(1) / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

GaussianRational Polynomial::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> z) const {
    std::complex<double> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
        auto c = a.coeffs_[k] <=> b.coeffs_[k];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        // Keeping remainders monic bounds coefficient growth in Euclid's loop.
        y = r.monic();
    }
    return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial g = gcd(a, b);
    return (exact_div(a, g) * b).monic();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    // A constant on either side already shares no factor with the other.
    if (num_.degree() > 0 && den_.degree() > 0) {
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    if (!den_.leading().is_one()) {
        GaussianRational inv = GaussianRational(1) / den_.leading();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw DivisionByZeroFunction();
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZeroFunction();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

GaussianRational RatFunc::eval_exact(const GaussianRational& z) const {
    GaussianRational d = den_.eval(z);
    if (d.is_zero()) throw PoleError();
    return num_.eval(z) / d;
}

std::complex<double> RatFunc::eval(std::complex<double> z) const {
    return eval_exact(GaussianRational::from_complex(z)).to_complex();
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
    auto c = a.num_ <=> b.num_;
    if (c != std::strong_ordering::equal) return c;
    return a.den_ <=> b.den_;
}

}  // namespace isored
