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

#include "qe2/exact_scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qe2 {

QParameter::QParameter(std::complex<double> q) : q_(q), s_(std::sqrt(q)) {
  if (q == std::complex<double>(0.0, 0.0)) {
    throw std::domain_error("deformation parameter q must be non-zero");
  }
  log_abs_s_ = std::log(std::abs(s_));
  arg_s_ = std::arg(s_);
}

std::complex<double> QParameter::half_power(std::int64_t a, std::int64_t b) const {
  if (a == 0 && b == 0) return {1.0, 0.0};
  const double modulus = std::exp(static_cast<double>(a + b) * log_abs_s_);
  return std::polar(modulus, static_cast<double>(a - b) * arg_s_);
}

ExactScalar::ExactScalar(std::int64_t value) : ExactScalar(Rational(value)) {}

ExactScalar::ExactScalar(Rational value) {
  if (value.numerator() != 0) terms_.emplace(Exponent{}, value);
}

ExactScalar ExactScalar::monomial(std::int64_t a, std::int64_t b, Rational r) {
  ExactScalar out;
  if (r.numerator() != 0) out.terms_.emplace(Exponent{a, b}, r);
  return out;
}

bool ExactScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out;
  for (const auto& [e, r] : terms_) out.terms_.emplace(Exponent{e.qbar_half, e.q_half}, r);
  return out;
}

ExactScalar ExactScalar::shifted(std::int64_t a, std::int64_t b) const {
  if (a == 0 && b == 0) return *this;
  ExactScalar out;
  for (const auto& [e, r] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), Exponent{e.q_half + a, e.qbar_half + b}, r);
  }
  return out;
}

std::complex<double> ExactScalar::evaluate(const QParameter& q) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, r] : terms_) {
    const double value = static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    sum += value * q.half_power(e.q_half, e.qbar_half);
  }
  return sum;
}

std::string ExactScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, r] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    if (e.q_half != 0) os << "*q^(" << e.q_half << "/2)";
    if (e.qbar_half != 0) os << "*qbar^(" << e.qbar_half << "/2)";
  }
  return os.str();
}

void ExactScalar::add_term(const Exponent& e, const Rational& r) {
  if (r.numerator() == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, r);
  if (!inserted) {
    it->second += r;
    if (it->second.numerator() == 0) terms_.erase(it);
  }
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  for (const auto& [e, r] : other.terms_) add_term(e, r);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) {
  for (const auto& [e, r] : other.terms_) add_term(e, -r);
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& other) {
  ExactScalar out;
  for (const auto& [ea, ra] : terms_) {
    for (const auto& [eb, rb] : other.terms_) {
      out.add_term(Exponent{ea.q_half + eb.q_half, ea.qbar_half + eb.qbar_half}, ra * rb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

ExactScalar operator-(ExactScalar a) {
  for (auto& [e, r] : a.terms_) r = -r;
  return a;
}

}  // namespace qe2
