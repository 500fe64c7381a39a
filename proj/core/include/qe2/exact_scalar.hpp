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
#include <cstdint>
#include <map>
#include <string>

#include <boost/rational.hpp>

namespace qe2 {

using Rational = boost::rational<std::int64_t>;

/// Numeric value of the deformation parameter together with the fixed
/// half-power branch s = sqrt(q) (principal root). Every q^{m/2} in the
/// library means s^m.
class QParameter {
 public:
  explicit QParameter(std::complex<double> q);

  std::complex<double> q() const { return q_; }
  std::complex<double> sqrt_q() const { return s_; }
  double abs_q() const { return std::abs(q_); }
  std::complex<double> zeta() const { return q_ / std::conj(q_); }

  /// s^a * conj(s)^b.
  std::complex<double> half_power(std::int64_t a, std::int64_t b) const;

 private:
  std::complex<double> q_;
  std::complex<double> s_;
  double log_abs_s_;
  double arg_s_;
};

/// Finite sum of terms r * q^{a/2} * qbar^{b/2} with r rational. Equality is
/// canonical-form equality, i.e. equality of Laurent polynomials in the two
/// independent symbols q^{1/2} and qbar^{1/2}.
class ExactScalar {
 public:
  struct Exponent {
    std::int64_t q_half = 0;
    std::int64_t qbar_half = 0;
    auto operator<=>(const Exponent&) const = default;
  };
  using TermMap = std::map<Exponent, Rational>;

  ExactScalar() = default;
  ExactScalar(std::int64_t value);  // NOLINT: integers embed implicitly
  ExactScalar(Rational value);      // NOLINT

  /// r * q^{a/2} * qbar^{b/2}.
  static ExactScalar monomial(std::int64_t a, std::int64_t b, Rational r = 1);
  static ExactScalar q_pow(std::int64_t m) { return monomial(2 * m, 0); }
  static ExactScalar qbar_pow(std::int64_t m) { return monomial(0, 2 * m); }
  /// zeta^m with zeta = q / qbar.
  static ExactScalar zeta_pow(std::int64_t m) { return monomial(2 * m, -2 * m); }
  /// |q|^m.
  static ExactScalar abs_q_pow(std::int64_t m) { return monomial(m, m); }
  /// (q/|q|)^m.
  static ExactScalar phase_q_pow(std::int64_t m) { return monomial(m, -m); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  ExactScalar conj() const;
  /// Multiplies by q^{a/2} qbar^{b/2}.
  ExactScalar shifted(std::int64_t a, std::int64_t b) const;

  std::complex<double> evaluate(const QParameter& q) const;
  std::string to_string() const;

  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);
  ExactScalar& operator*=(const ExactScalar& other);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator-(ExactScalar a);
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponent& e, const Rational& r);

  TermMap terms_;
};

}  // namespace qe2
