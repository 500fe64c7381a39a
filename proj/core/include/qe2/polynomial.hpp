// Copyright 2026 The qe2 Authors
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

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qe2/exact_scalar.hpp"
#include "qe2/lattice.hpp"

namespace qe2 {

/// Polynomial in the lattice coordinates x_0..x_{d-1} with ExactScalar
/// coefficients. Used as the polynomial part of a weighted-shift coefficient.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, ExactScalar>;

  Polynomial() = default;
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial constant(int dim, const ExactScalar& c);
  static Polynomial variable(int dim, int k);
  static Polynomial monomial(int dim, const Exponents& e, const ExactScalar& c = 1);
  /// sum_k coeffs[k] x_k + c.
  static Polynomial affine(int dim, std::span<const int> coeffs, std::int64_t c);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_constant() const { return degree() <= 0; }
  ExactScalar constant_term() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const ExactScalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const ExactScalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// x -> p(map(x)).
  Polynomial substitute(const AffineMap& map) const;
  /// Re-indexes variable k to slots[k] in a dim-dimensional space.
  Polynomial embedded(int dim, std::span<const int> slots) const;
  Polynomial conj() const;

  ExactScalar evaluate(const BasisIndex& x) const;
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const ExactScalar& c);

  int dim_ = 0;
  TermMap terms_;
};

/// Integer polynomial without constant term, used as the exponent of
/// q^{1/2} or qbar^{1/2} in a weighted-shift coefficient. Affine lattice maps
/// keep the degree, so quadratic phases such as zeta^{jl} stay in the class.
class ExponentForm {
 public:
  using Exponents = Polynomial::Exponents;
  using TermMap = std::map<Exponents, std::int64_t>;

  ExponentForm() = default;
  explicit ExponentForm(int dim) : dim_(dim) {}
  /// sum_k coeffs[k] x_k.
  static ExponentForm linear(std::span<const int> coeffs);
  /// c * x_a * x_b.
  static ExponentForm product(int dim, int a, int b, std::int64_t c);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExponentForm& operator+=(const ExponentForm& other);
  friend ExponentForm operator+(ExponentForm a, const ExponentForm& b) { return a += b; }
  ExponentForm operator-() const;
  friend auto operator<=>(const ExponentForm&, const ExponentForm&) = default;
  friend bool operator==(const ExponentForm&, const ExponentForm&) = default;

  std::int64_t evaluate(const BasisIndex& x) const;
  /// Returns the form of x -> f(map(x)) and its constant term separately.
  std::pair<ExponentForm, std::int64_t> substitute(const AffineMap& map) const;
  ExponentForm embedded(int dim, std::span<const int> slots) const;
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, std::int64_t c);

  int dim_ = 0;
  TermMap terms_;
};

/// Float-mode image of a Polynomial at a fixed q.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  CompiledPolynomial(const Polynomial& p, const QParameter& q);

  std::complex<double> evaluate(const BasisIndex& x) const;
  bool is_constant() const { return constant_only_; }

 private:
  struct Term {
    std::vector<std::pair<int, int>> powers;  // (variable, exponent), exponent > 0
    std::complex<double> coeff;
  };
  std::vector<Term> terms_;
  bool constant_only_ = true;
};

}  // namespace qe2
