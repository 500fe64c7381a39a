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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qe2/exact_scalar.hpp"
#include "qe2/lattice.hpp"
#include "qe2/polynomial.hpp"

namespace qe2 {

/// Weighted lattice shift e_x -> c(x) e_{map(x)} with
///   c(x) = poly(x) * q^{q_form(x)/2} * qbar^{qbar_form(x)/2}.
/// Constant exponents live in the ExactScalar coefficients of `poly`, which
/// makes the representation canonical.
struct ShiftMonomial {
  AffineMap map;
  Polynomial poly;
  ExponentForm q_form;
  ExponentForm qbar_form;

  int dim() const { return map.dim(); }
  ExactScalar coefficient(const BasisIndex& x) const;
  bool is_translation() const { return map.is_translation(); }
  std::vector<int> translation() const { return map.offset_data(); }

  friend bool operator==(const ShiftMonomial&, const ShiftMonomial&) = default;
};

/// Finite sum of ShiftMonomials, kept grouped by (map, q_form, qbar_form).
class OpExpr {
 public:
  OpExpr() = default;
  explicit OpExpr(int dim) : dim_(dim) {}
  OpExpr(const ShiftMonomial& m);  // NOLINT: a monomial is an expression

  static OpExpr identity(int dim);
  static OpExpr scalar(int dim, const ExactScalar& c);
  /// Diagonal operator with coefficient poly(x) q^{qf(x)/2} qbar^{qbf(x)/2}.
  static OpExpr diagonal(const Polynomial& poly, const ExponentForm& q_form, const ExponentForm& qbar_form);
  static OpExpr shift(const AffineMap& map, const Polynomial& poly, const ExponentForm& q_form,
                      const ExponentForm& qbar_form);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<ShiftMonomial> monomials() const;
  std::optional<ShiftMonomial> single_monomial() const;
  /// Largest total degree of any polynomial part.
  int degree() const;

  OpExpr& operator+=(const OpExpr& other);
  OpExpr& operator-=(const OpExpr& other);
  OpExpr& operator*=(const ExactScalar& s);
  friend OpExpr operator+(OpExpr a, const OpExpr& b) { return a += b; }
  friend OpExpr operator-(OpExpr a, const OpExpr& b) { return a -= b; }
  friend OpExpr operator*(OpExpr a, const ExactScalar& s) { return a *= s; }
  friend OpExpr operator*(const ExactScalar& s, OpExpr a) { return a *= s; }
  /// Operator product: (a * b) v = a (b v).
  friend OpExpr operator*(const OpExpr& a, const OpExpr& b);
  /// Structural equality of canonical forms; an exact operator equality.
  friend bool operator==(const OpExpr&, const OpExpr&) = default;

  std::string to_string() const;

 private:
  struct Key {
    AffineMap map;
    ExponentForm q_form;
    ExponentForm qbar_form;
    auto operator<=>(const Key&) const = default;
    bool operator==(const Key&) const = default;
  };
  void add(const Key& key, const Polynomial& poly);

  int dim_ = 0;
  std::map<Key, Polynomial> terms_;
};

OpExpr compose(const OpExpr& a, const OpExpr& b);
OpExpr adjoint(const OpExpr& op);
ShiftMonomial adjoint(const ShiftMonomial& m);
ShiftMonomial compose(const ShiftMonomial& a, const ShiftMonomial& b);

/// Leg embedding. `legs` are 1-based and strictly increasing; `ambient_dims`
/// lists the lattice dimension of every tensor factor (2 for H_L, 1 for H).
OpExpr embed_leg(const OpExpr& op, std::span<const int> legs, std::span<const int> ambient_dims);
ShiftMonomial embed_leg(const ShiftMonomial& m, std::span<const int> legs, std::span<const int> ambient_dims);
/// a (x) b on the two-fold tensor product.
OpExpr tensor(const OpExpr& a, const OpExpr& b);

/// Inverse of a monomial with invertible map and non-vanishing single-term
/// coefficient; throws std::domain_error otherwise.
ShiftMonomial inverse(const ShiftMonomial& m);
/// u a u^{-1}; for the unitaries of the catalog this is u a u*.
OpExpr conjugate(const OpExpr& u, const OpExpr& a);

ExactVector apply(const OpExpr& op, const ExactVector& vec);
ComplexVector apply(const OpExpr& op, const ComplexVector& vec, const QParameter& q);

/// Default certification window: max polynomial degree + 2.
int default_window(const OpExpr& a, const OpExpr& b);
/// Compares a e_x and b e_x exactly for every x in [-window, window]^d.
bool equal_exact(const OpExpr& a, const OpExpr& b, std::optional<int> window = std::nullopt);
/// First basis index in the window where a and b differ, if any.
std::optional<BasisIndex> first_difference(const OpExpr& a, const OpExpr& b, int window);

/// Float-mode image of an OpExpr at fixed q.
class CompiledOp {
 public:
  CompiledOp() = default;
  CompiledOp(const OpExpr& op, const QParameter& q);

  int dim() const { return dim_; }
  ComplexVector apply(const ComplexVector& vec) const;

 private:
  struct Term {
    AffineMap map;
    CompiledPolynomial poly;
    ExponentForm q_form;
    ExponentForm qbar_form;
  };
  int dim_ = 0;
  QParameter q_{std::complex<double>(0.5, 0.0)};
  std::vector<Term> terms_;
};

/// Numeric coefficient of a monomial at x.
std::complex<double> coefficient(const ShiftMonomial& m, const BasisIndex& x, const QParameter& q);

}  // namespace qe2
