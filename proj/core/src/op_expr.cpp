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

#include "qe2/op_expr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qe2 {
namespace {

struct Coefficient {
  Polynomial poly;
  ExponentForm q_form;
  ExponentForm qbar_form;
};

// Coefficient data of x -> c(map(x)).
Coefficient pullback(const Polynomial& poly, const ExponentForm& qf, const ExponentForm& qbf, const AffineMap& map) {
  auto [q_form, q_const] = qf.substitute(map);
  auto [qbar_form, qbar_const] = qbf.substitute(map);
  return Coefficient{poly.substitute(map) * ExactScalar::monomial(q_const, qbar_const), std::move(q_form),
                     std::move(qbar_form)};
}

std::vector<int> leg_slots(std::span<const int> legs, std::span<const int> ambient_dims, int op_dim) {
  std::vector<int> starts(ambient_dims.size() + 1, 0);
  for (std::size_t k = 0; k < ambient_dims.size(); ++k) {
    if (ambient_dims[k] <= 0) throw std::invalid_argument("leg dimensions must be positive");
    starts[k + 1] = starts[k] + ambient_dims[k];
  }
  std::vector<int> slots;
  int prev = 0;
  for (int leg : legs) {
    if (leg <= prev) throw std::invalid_argument("legs must be strictly increasing and 1-based");
    if (leg > static_cast<int>(ambient_dims.size())) throw std::invalid_argument("leg outside ambient space");
    prev = leg;
    for (int c = starts[static_cast<std::size_t>(leg - 1)]; c < starts[static_cast<std::size_t>(leg)]; ++c) slots.push_back(c);
  }
  if (static_cast<int>(slots.size()) != op_dim) {
    throw std::invalid_argument("operator dimension does not match the selected legs");
  }
  if (starts.back() > kMaxLatticeDim) throw std::invalid_argument("ambient space exceeds the lattice dimension limit");
  return slots;
}

}  // namespace

ExactScalar ShiftMonomial::coefficient(const BasisIndex& x) const {
  return poly.evaluate(x).shifted(q_form.evaluate(x), qbar_form.evaluate(x));
}

std::complex<double> coefficient(const ShiftMonomial& m, const BasisIndex& x, const QParameter& q) {
  return m.poly.evaluate(x).evaluate(q) * q.half_power(m.q_form.evaluate(x), m.qbar_form.evaluate(x));
}

OpExpr::OpExpr(const ShiftMonomial& m) : dim_(m.dim()) {
  add(Key{m.map, m.q_form, m.qbar_form}, m.poly);
}

OpExpr OpExpr::identity(int dim) { return scalar(dim, 1); }

OpExpr OpExpr::scalar(int dim, const ExactScalar& c) {
  return shift(AffineMap::identity(dim), Polynomial::constant(dim, c), ExponentForm(dim), ExponentForm(dim));
}

OpExpr OpExpr::diagonal(const Polynomial& poly, const ExponentForm& q_form, const ExponentForm& qbar_form) {
  return shift(AffineMap::identity(poly.dim()), poly, q_form, qbar_form);
}

OpExpr OpExpr::shift(const AffineMap& map, const Polynomial& poly, const ExponentForm& q_form,
                     const ExponentForm& qbar_form) {
  if (poly.dim() != map.dim() || q_form.dim() != map.dim() || qbar_form.dim() != map.dim()) {
    throw std::invalid_argument("shift monomial parts have inconsistent dimensions");
  }
  return OpExpr(ShiftMonomial{map, poly, q_form, qbar_form});
}

void OpExpr::add(const Key& key, const Polynomial& poly) {
  if (poly.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, poly);
  if (!inserted) {
    it->second += poly;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<ShiftMonomial> OpExpr::monomials() const {
  std::vector<ShiftMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, poly] : terms_) out.push_back(ShiftMonomial{key.map, poly, key.q_form, key.qbar_form});
  return out;
}

std::optional<ShiftMonomial> OpExpr::single_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return monomials().front();
}

int OpExpr::degree() const {
  int deg = 0;
  for (const auto& [key, poly] : terms_) deg = std::max(deg, poly.degree());
  return deg;
}

OpExpr& OpExpr::operator+=(const OpExpr& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("operator dimensions differ");
  for (const auto& [key, poly] : other.terms_) add(key, poly);
  return *this;
}

OpExpr& OpExpr::operator-=(const OpExpr& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("operator dimensions differ");
  for (const auto& [key, poly] : other.terms_) add(key, poly * ExactScalar(-1));
  return *this;
}

OpExpr& OpExpr::operator*=(const ExactScalar& s) {
  std::map<Key, Polynomial> scaled;
  for (const auto& [key, poly] : terms_) {
    Polynomial p = poly * s;
    if (!p.is_zero()) scaled.emplace(key, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

ShiftMonomial compose(const ShiftMonomial& a, const ShiftMonomial& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimensions differ");
  Coefficient outer = pullback(a.poly, a.q_form, a.qbar_form, b.map);
  return ShiftMonomial{a.map.after(b.map), b.poly * outer.poly, b.q_form + outer.q_form,
                       b.qbar_form + outer.qbar_form};
}

OpExpr operator*(const OpExpr& a, const OpExpr& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("operator dimensions differ");
  OpExpr out(a.dim_);
  for (const auto& ma : a.monomials()) {
    for (const auto& mb : b.monomials()) out += OpExpr(compose(ma, mb));
  }
  return out;
}

OpExpr compose(const OpExpr& a, const OpExpr& b) { return a * b; }

ShiftMonomial adjoint(const ShiftMonomial& m) {
  // (A* e_y) = conj(c(f^{-1} y)) e_{f^{-1} y}.
  const AffineMap inv = m.map.inverse();
  Coefficient c = pullback(m.poly.conj(), m.qbar_form, m.q_form, inv);
  return ShiftMonomial{inv, std::move(c.poly), std::move(c.q_form), std::move(c.qbar_form)};
}

OpExpr adjoint(const OpExpr& op) {
  OpExpr out(op.dim());
  for (const auto& m : op.monomials()) out += OpExpr(adjoint(m));
  return out;
}

ShiftMonomial inverse(const ShiftMonomial& m) {
  if (m.poly.terms().size() != 1 || !m.poly.is_constant()) {
    throw std::domain_error("operator coefficient may vanish; no inverse in the weighted-shift class");
  }
  const ExactScalar c = m.poly.constant_term();
  if (c.terms().size() != 1) throw std::domain_error("coefficient is not an invertible monomial");
  const auto& [exponent, r] = *c.terms().begin();
  const ExactScalar c_inv = ExactScalar::monomial(-exponent.q_half, -exponent.qbar_half, Rational(1) / r);
  const AffineMap inv = m.map.inverse();
  Coefficient pulled = pullback(Polynomial::constant(m.dim(), c_inv), -m.q_form, -m.qbar_form, inv);
  return ShiftMonomial{inv, std::move(pulled.poly), std::move(pulled.q_form), std::move(pulled.qbar_form)};
}

OpExpr conjugate(const OpExpr& u, const OpExpr& a) {
  auto m = u.single_monomial();
  if (!m) throw std::domain_error("conjugating operator must be a single invertible weighted shift");
  return OpExpr(*m) * a * OpExpr(inverse(*m));
}

ShiftMonomial embed_leg(const ShiftMonomial& m, std::span<const int> legs, std::span<const int> ambient_dims) {
  const std::vector<int> slots = leg_slots(legs, ambient_dims, m.dim());
  const int dim = std::accumulate(ambient_dims.begin(), ambient_dims.end(), 0);
  return ShiftMonomial{m.map.embedded(dim, slots), m.poly.embedded(dim, slots), m.q_form.embedded(dim, slots),
                       m.qbar_form.embedded(dim, slots)};
}

OpExpr embed_leg(const OpExpr& op, std::span<const int> legs, std::span<const int> ambient_dims) {
  const int dim = std::accumulate(ambient_dims.begin(), ambient_dims.end(), 0);
  (void)leg_slots(legs, ambient_dims, op.dim());
  OpExpr out(dim);
  for (const auto& m : op.monomials()) out += OpExpr(embed_leg(m, legs, ambient_dims));
  return out;
}

OpExpr tensor(const OpExpr& a, const OpExpr& b) {
  const std::vector<int> dims{a.dim(), b.dim()};
  const std::vector<int> first{1}, second{2};
  return embed_leg(a, first, dims) * embed_leg(b, second, dims);
}

ExactVector apply(const OpExpr& op, const ExactVector& vec) {
  if (op.dim() != vec.dim()) throw std::invalid_argument("operator and vector dimensions differ");
  ExactVector out(vec.dim());
  const auto monomials = op.monomials();
  for (const auto& [x, value] : vec.entries()) {
    for (const auto& m : monomials) {
      const ExactScalar c = m.coefficient(x);
      if (!c.is_zero()) out.add(m.map.apply(x), c * value);
    }
  }
  return out;
}

ComplexVector apply(const OpExpr& op, const ComplexVector& vec, const QParameter& q) {
  return CompiledOp(op, q).apply(vec);
}

int default_window(const OpExpr& a, const OpExpr& b) { return std::max(a.degree(), b.degree()) + 2; }

std::optional<BasisIndex> first_difference(const OpExpr& a, const OpExpr& b, int window) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimensions differ");
  for (const auto& x : lattice_box(a.dim(), window)) {
    const ExactVector e = ExactVector::basis(x);
    if (!(apply(a, e) == apply(b, e))) return x;
  }
  return std::nullopt;
}

bool equal_exact(const OpExpr& a, const OpExpr& b, std::optional<int> window) {
  return !first_difference(a, b, window.value_or(default_window(a, b))).has_value();
}

std::string OpExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, poly] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '[' << poly.to_string() << "] q^{(" << key.q_form.to_string() << ")/2} qbar^{("
       << key.qbar_form.to_string() << ")/2} shift(";
    for (std::size_t k = 0; k < key.map.offset_data().size(); ++k) os << (k ? "," : "") << key.map.offset(static_cast<int>(k));
    os << (key.map.is_translation() ? ")" : ")+linear");
  }
  return os.str();
}

CompiledOp::CompiledOp(const OpExpr& op, const QParameter& q) : dim_(op.dim()), q_(q) {
  for (const auto& m : op.monomials()) terms_.push_back(Term{m.map, CompiledPolynomial(m.poly, q), m.q_form, m.qbar_form});
}

ComplexVector CompiledOp::apply(const ComplexVector& vec) const {
  if (vec.dim() != dim_) throw std::invalid_argument("operator and vector dimensions differ");
  ComplexVector out(dim_);
  out.reserve(vec.size() * terms_.size());
  for (const auto& [x, value] : vec.entries()) {
    for (const auto& t : terms_) {
      const std::complex<double> c = t.poly.evaluate(x) * q_.half_power(t.q_form.evaluate(x), t.qbar_form.evaluate(x));
      out.add(t.map.apply(x), c * value);
    }
  }
  return out;
}

}  // namespace qe2
