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

#include "qe2/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qe2 {

Polynomial Polynomial::constant(int dim, const ExactScalar& c) {
  Polynomial p(dim);
  p.add_term(Exponents(static_cast<std::size_t>(dim), 0), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int k) {
  Polynomial p(dim);
  Exponents e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(k)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(int dim, const Exponents& e, const ExactScalar& c) {
  if (static_cast<int>(e.size()) != dim) throw std::invalid_argument("exponent vector size mismatch");
  Polynomial p(dim);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::affine(int dim, std::span<const int> coeffs, std::int64_t c) {
  Polynomial p = constant(dim, c);
  for (int k = 0; k < dim; ++k) {
    const int a = coeffs[static_cast<std::size_t>(k)];
    if (a != 0) p += variable(dim, k) * ExactScalar(a);
  }
  return p;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

ExactScalar Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(static_cast<std::size_t>(dim_), 0));
  return it == terms_.end() ? ExactScalar() : it->second;
}

void Polynomial::add_term(const Exponents& e, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("polynomial dimensions differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("polynomial dimensions differ");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("polynomial dimensions differ");
  Polynomial out(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::substitute(const AffineMap& map) const {
  if (map.dim() != dim_) throw std::invalid_argument("substitution dimension mismatch");
  if (is_constant()) return *this;
  // Images of the coordinate functions, memoised by power.
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(dim_));
  auto power = [&](int k, int e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(k)];
    if (cache.empty()) {
      cache.push_back(constant(dim_, 1));
      std::vector<int> row(static_cast<std::size_t>(dim_));
      for (int c = 0; c < dim_; ++c) row[static_cast<std::size_t>(c)] = map.matrix(k, c);
      cache.push_back(affine(dim_, row, map.offset(k)));
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(dim_, c);
    for (int k = 0; k < dim_; ++k) {
      if (e[static_cast<std::size_t>(k)] > 0) term = term * power(k, e[static_cast<std::size_t>(k)]);
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::embedded(int dim, std::span<const int> slots) const {
  if (static_cast<int>(slots.size()) != dim_) throw std::invalid_argument("slot count mismatch");
  Polynomial out(dim);
  for (const auto& [e, c] : terms_) {
    Exponents f(static_cast<std::size_t>(dim), 0);
    for (int k = 0; k < dim_; ++k) f[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)])] = e[static_cast<std::size_t>(k)];
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::conj() const {
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
  return out;
}

ExactScalar Polynomial::evaluate(const BasisIndex& x) const {
  ExactScalar sum;
  for (const auto& [e, c] : terms_) {
    std::int64_t value = 1;
    for (int k = 0; k < dim_; ++k) {
      for (int p = 0; p < e[static_cast<std::size_t>(k)]; ++p) value *= x[k];
    }
    if (value != 0) sum += c * ExactScalar(value);
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    for (int k = 0; k < dim_; ++k) {
      const int p = e[static_cast<std::size_t>(k)];
      if (p == 1) os << "*x" << k;
      if (p > 1) os << "*x" << k << '^' << p;
    }
  }
  return os.str();
}

ExponentForm ExponentForm::linear(std::span<const int> coeffs) {
  ExponentForm f(static_cast<int>(coeffs.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponents e(coeffs.size(), 0);
    e[k] = 1;
    f.add_term(e, coeffs[k]);
  }
  return f;
}

ExponentForm ExponentForm::product(int dim, int a, int b, std::int64_t c) {
  ExponentForm f(dim);
  Exponents e(static_cast<std::size_t>(dim), 0);
  ++e[static_cast<std::size_t>(a)];
  ++e[static_cast<std::size_t>(b)];
  f.add_term(e, c);
  return f;
}

void ExponentForm::add_term(const Exponents& e, std::int64_t c) {
  if (c == 0) return;
  if (std::all_of(e.begin(), e.end(), [](int p) { return p == 0; })) {
    throw std::invalid_argument("exponent forms carry no constant term");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExponentForm& ExponentForm::operator+=(const ExponentForm& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("exponent form dimensions differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ExponentForm ExponentForm::operator-() const {
  ExponentForm out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::int64_t ExponentForm::evaluate(const BasisIndex& x) const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t value = c;
    for (int k = 0; k < dim_; ++k) {
      for (int p = 0; p < e[static_cast<std::size_t>(k)]; ++p) value *= x[k];
    }
    sum += value;
  }
  return sum;
}

std::pair<ExponentForm, std::int64_t> ExponentForm::substitute(const AffineMap& map) const {
  Polynomial p(dim_);
  for (const auto& [e, c] : terms_) p += Polynomial::monomial(dim_, e, c);
  const Polynomial image = p.substitute(map);
  ExponentForm out(dim_);
  std::int64_t constant = 0;
  for (const auto& [e, c] : image.terms()) {
    if (!c.is_rational() || c.terms().begin()->second.denominator() != 1) {
      throw std::logic_error("integer exponent form acquired a non-integer coefficient");
    }
    const std::int64_t value = c.terms().begin()->second.numerator();
    if (std::all_of(e.begin(), e.end(), [](int q) { return q == 0; })) {
      constant = value;
    } else {
      out.add_term(e, value);
    }
  }
  return {out, constant};
}

ExponentForm ExponentForm::embedded(int dim, std::span<const int> slots) const {
  if (static_cast<int>(slots.size()) != dim_) throw std::invalid_argument("slot count mismatch");
  ExponentForm out(dim);
  for (const auto& [e, c] : terms_) {
    Exponents f(static_cast<std::size_t>(dim), 0);
    for (int k = 0; k < dim_; ++k) f[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)])] = e[static_cast<std::size_t>(k)];
    out.add_term(f, c);
  }
  return out;
}

std::string ExponentForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << '+';
    first = false;
    os << c;
    for (int k = 0; k < dim_; ++k) {
      const int p = e[static_cast<std::size_t>(k)];
      if (p == 1) os << "*x" << k;
      if (p > 1) os << "*x" << k << '^' << p;
    }
  }
  return os.str();
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p, const QParameter& q) {
  for (const auto& [e, c] : p.terms()) {
    Term t;
    t.coeff = c.evaluate(q);
    for (int k = 0; k < p.dim(); ++k) {
      if (e[static_cast<std::size_t>(k)] > 0) t.powers.emplace_back(k, e[static_cast<std::size_t>(k)]);
    }
    if (!t.powers.empty()) constant_only_ = false;
    terms_.push_back(std::move(t));
  }
}

std::complex<double> CompiledPolynomial::evaluate(const BasisIndex& x) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& t : terms_) {
    double value = 1.0;
    for (const auto& [k, p] : t.powers) value *= std::pow(static_cast<double>(x[k]), p);
    sum += value * t.coeff;
  }
  return sum;
}

}  // namespace qe2
