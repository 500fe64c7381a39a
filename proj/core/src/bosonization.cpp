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


#include "qe2/bosonization.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace qe2 {
namespace {

constexpr int kBlock = kDimH + kDimL;
constexpr int kFourLegs[] = {kDimH, kDimL, kDimH, kDimL};
constexpr int kSixLegs[] = {1, 1, 1, 1, 1, 1};
constexpr int kTwoBlocks[] = {kBlock, kBlock};
constexpr int kThreeBlocks[] = {kBlock, kBlock, kBlock};

template <class T>
T on(const T& x, std::initializer_list<int> legs, std::span<const int> dims) {
  return embed_leg(x, std::span<const int>(legs.begin(), legs.size()), dims);
}

OperatorChain on(const OperatorChain& c, std::initializer_list<int> legs, std::span<const int> dims) {
  return c.embedded(std::span<const int>(legs.begin(), legs.size()), dims);
}

ShiftMonomial single(const OpExpr& op, const char* what) {
  auto m = op.single_monomial();
  if (!m) throw std::logic_error(std::string(what) + " must be a single weighted shift");
  return *m;
}

OperatorChain definition_route(const WtildeHandle& h) {
  const GeneratorCatalog& c = *h.catalog;
  const OpExpr W13 = on(c.get("W"), {1, 3}, kFourLegs);
  if (h.variant == BosonVariant::circle_only) return OperatorChain(W13);
  const OpExpr U23 = on(c.get("U"), {2, 3}, kFourLegs);
  const OpExpr V34 = on(c.get("Vhat'"), {3, 4}, kFourLegs);
  DualUnitaryHandle dual;
  dual.catalog = h.catalog;
  if (h.variant == BosonVariant::dual_identity) dual.variant = UnitaryVariant::identity;
  const OperatorChain F24 = on(dual.chain(), {2, 4}, kFourLegs);
  return OperatorChain(W13 * U23 * adjoint(V34)) * F24 * OperatorChain(V34);
}

OperatorChain conjugated_route(const WtildeHandle& h) {
  const GeneratorCatalog& c = *h.catalog;
  const OpExpr W14 = on(c.get("W"), {1, 4}, kSixLegs);
  if (h.variant == BosonVariant::circle_only) return OperatorChain(W14);
  const OpExpr W34 = on(c.get("W"), {3, 4}, kSixLegs);
  const OpExpr V456 = on(c.get("Vhat'"), {4, 5, 6}, kSixLegs);
  const OpExpr Y = on(c.get("What"), {2, 5}, kSixLegs) * on(c.get("What"), {2, 6}, kSixLegs);
  // Fhat = F_q(Xhat)* Yhat is dropped as a whole, i.e. together with What_25 What_26.
  if (h.variant == BosonVariant::dual_identity) return OperatorChain(W14 * W34);
  const FqFactor fq{on(single(c.get("Xhat"), "Xhat"), {2, 3, 5, 6}, kSixLegs), {1.0, 0.0}, true};
  return OperatorChain(W14 * W34 * adjoint(V456)) * OperatorChain(fq) * OperatorChain(Y * V456);
}

OperatorChain rewritten_route(const WtildeHandle& h) {
  const GeneratorCatalog& c = *h.catalog;
  const OpExpr W14 = on(c.get("W"), {1, 4}, kSixLegs);
  if (h.variant == BosonVariant::circle_only) return OperatorChain(W14);
  const OpExpr W34 = on(c.get("W"), {3, 4}, kSixLegs);
  const OpExpr Y = on(c.get("What"), {2, 5}, kSixLegs) * on(c.get("What"), {2, 6}, kSixLegs);
  if (h.variant == BosonVariant::dual_identity) return OperatorChain(W14 * W34);
  const OpExpr first = c.get("P") * c.get("b^-1") * c.get("q^(Ntilde/2)");
  const OpExpr last = c.get("q^(Ntilde/2)") * c.get("b");
  const OpExpr arg = on(first, {2}, kFourLegs) * on(c.get("P'"), {3}, kFourLegs) * on(last, {4}, kFourLegs);
  const FqFactor fq{single(arg, "bosonization argument"), {1.0, 0.0}, true};
  return OperatorChain(W14 * W34) * OperatorChain(fq) * OperatorChain(Y);
}

ResidualReport exact_report(const IdentityRecord& rec, const QParameter& q) {
  ResidualReport r;
  r.identity = rec.name;
  const ExactCheck check = check_exact(rec, q);
  r.residual = check.passed ? 0.0 : 1.0;
  r.vector = check.counterexample ? "e" + check.counterexample->to_string() : "window " + std::to_string(check.window);
  r.aux.emplace_back("numeric-deviation", check.numeric_deviation);
  return r;
}

// Formal words in the generators; "qN'" stands for q^{N'}.
using Word = std::vector<std::string>;
using TensorSum = std::vector<std::pair<Word, Word>>;

std::optional<Word> project(const Word& w) {
  Word out;
  for (const auto& g : w) {
    if (g == "N'" || g == "b'") return std::nullopt;
    if (g != "qN'") out.push_back(g);  // q^{N'} -> q^0 = 1
  }
  return out;
}

TensorSum project(const TensorSum& s) {
  TensorSum out;
  for (const auto& [a, b] : s) {
    auto pa = project(a), pb = project(b);
    if (pa && pb) out.emplace_back(*pa, *pb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TensorSum formal_comult(const std::string& g) {
  if (g == "u") return {{{"u"}, {"u"}}};
  if (g == "N'") return {{{"N'"}, {}}, {{}, {"N'"}}};
  if (g == "b'") return {{{"b'"}, {}}, {{"qN'"}, {"b'"}}};
  return {};
}

}  // namespace

BosonCatalog::BosonCatalog(const GeneratorCatalog& c) {
  const OpExpr& V = c.get("Vhat'");
  const OpExpr& idH = c.get("identity_H");
  u = tensor(c.get("z"), c.get("identity_L"));
  n_prime = adjoint(V) * tensor(idH, c.get("N")) * V;
  b_prime = adjoint(V) * tensor(idH, c.get("btilde")) * V;
  b_prime_closed = tensor(c.get("P'"), c.get("btilde"));
  q_pow_n_prime = tensor(idH, c.get("q^N"));
}

OperatorChain WtildeHandle::chain(bool inverse) const {
  OperatorChain w(2 * kBlock);
  switch (route) {
    case WtildeRoute::definition: w = definition_route(*this); break;
    case WtildeRoute::conjugated: w = conjugated_route(*this); break;
    case WtildeRoute::rewritten: w = rewritten_route(*this); break;
  }
  return inverse ? w.adjoint() : w;
}

ComplexVector apply_Wtilde(const ComplexVector& vec, bool inverse, const WtildeHandle& handle,
                           const Evaluator& eval, ApplyStats* stats) {
  if (!vec.empty() && vec.dim() != 2 * kBlock) throw std::invalid_argument("Wtilde acts on Z^6");
  return eval.apply(handle.chain(inverse), vec, stats);
}

ResidualReport ordinary_pentagon_residual(const ComplexVector& vec, const WtildeHandle& handle,
                                          const Evaluator& eval) {
  if (!vec.empty() && vec.dim() != 3 * kBlock) throw std::invalid_argument("ordinary pentagon acts on Z^9");
  const OperatorChain W = handle.chain();
  const OperatorChain W12 = on(W, {1, 2}, kThreeBlocks);
  const OperatorChain W13 = on(W, {1, 3}, kThreeBlocks);
  const OperatorChain W23 = on(W, {2, 3}, kThreeBlocks);
  return chain_residual("ordinary-pentagon", W23 * W12, W12 * W13 * W23, vec, eval);
}

std::vector<IdentityRecord> boson_relation_registry(const GeneratorCatalog& c) {
  const BosonCatalog b(c);
  const OpExpr id = OpExpr::identity(kBlock);
  const ExactScalar zeta = ExactScalar::zeta_pow(1);
  std::vector<IdentityRecord> out;
  auto add = [&](std::string name, std::string formula, OpExpr lhs, OpExpr rhs, bool expect = true) {
    out.push_back({std::move(name), std::move(formula), "bosonized generators", CheckMode::exact, std::move(lhs),
                   std::move(rhs), expect});
  };
  add("boson-uN'", "uN'=N'u", b.u * b.n_prime, b.n_prime * b.u);
  add("boson-ub'", "ub'=zeta b'u", b.u * b.b_prime, zeta * (b.b_prime * b.u));
  add("boson-N'b'", "N'b'=b'(N'-2I)", b.n_prime * b.b_prime, b.b_prime * (b.n_prime - ExactScalar(2) * id));
  add("boson-b'-closed", "Vhat'*(1(x)btilde)Vhat'=P'(x)btilde", b.b_prime, b.b_prime_closed);
  add("boson-N'-closed", "Vhat'*(1(x)N)Vhat'=1(x)N", b.n_prime, tensor(c.get("identity_H"), c.get("N")));
  add("boson-u-unitary", "u*u=I", adjoint(b.u) * b.u, id);
  add("boson-ub'-control", "ub'!=b'u", b.u * b.b_prime, b.b_prime * b.u, false);
  return out;
}

std::vector<ResidualReport> boson_relations_check(const QParameter& q, const GeneratorCatalog& catalog) {
  std::vector<ResidualReport> out;
  for (const auto& rec : boson_relation_registry(catalog)) out.push_back(exact_report(rec, q));
  return out;
}

ResidualReport boson_spectrum_check(int window, const GeneratorCatalog& catalog) {
  const BosonCatalog b(catalog);
  ResidualReport r;
  r.identity = "boson-spectrum";
  r.vector = "window " + std::to_string(window);
  const ShiftMonomial n = single(b.n_prime, "N'");
  const ShiftMonomial m = single(adjoint(b.b_prime) * b.b_prime, "b'*b'");
  if (!(n.map == AffineMap::identity(kBlock)) || !(m.map == AffineMap::identity(kBlock))) {
    r.residual = 1.0;
    r.failure = "N' or b'*b' is not diagonal";
    return r;
  }
  for (const auto& x : lattice_box(kBlock, window)) {
    const ExactScalar en = n.coefficient(x);
    const bool n_ok = en.is_zero() || (en.terms().size() == 1 && en.terms().begin()->first.q_half == 0 &&
                                       en.terms().begin()->first.qbar_half == 0 &&
                                       en.terms().begin()->second.denominator() == 1);
    const ExactScalar eb = m.coefficient(x);
    bool b_ok = eb.terms().size() == 1;
    if (b_ok) {
      const auto& [e, r0] = *eb.terms().begin();
      b_ok = e.q_half == e.qbar_half && e.q_half % 2 == 0 && r0.numerator() == 1 && r0.denominator() == 1;
    }
    if (!n_ok || !b_ok) {
      r.residual = 1.0;
      r.vector = "e" + x.to_string();
      return r;
    }
  }
  return r;
}

std::vector<ResidualReport> projection_check() {
  std::vector<ResidualReport> out;
  for (const std::string g : {"u", "N'", "b'"}) {
    const auto pg = project(Word{g});
    const TensorSum lhs = project(formal_comult(g));
    TensorSum rhs = pg && !pg->empty() ? formal_comult(pg->front()) : TensorSum{};
    std::sort(rhs.begin(), rhs.end());
    const auto ppg = pg ? project(*pg) : std::nullopt;
    ResidualReport r;
    r.identity = "projection-" + g;
    r.vector = "generator " + g;
    r.residual = (lhs == rhs && ppg == pg) ? 0.0 : 1.0;
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_string(BosonGenerator gen) {
  switch (gen) {
    case BosonGenerator::u: return "u";
    case BosonGenerator::n_prime: return "N'";
    case BosonGenerator::b_prime: return "b'";
    case BosonGenerator::b_prime_adjoint: return "b'*";
  }
  return "?";
}

ResidualReport boson_comult_check(BosonGenerator gen, const ComplexVector& vec, const WtildeHandle& handle,
                                  const Evaluator& eval) {
  if (!vec.empty() && vec.dim() != 2 * kBlock) throw std::invalid_argument("boson comultiplication acts on Z^6");
  const BosonCatalog b(*handle.catalog);
  const OpExpr id = OpExpr::identity(kBlock);
  OpExpr g(kBlock), closed(2 * kBlock);
  std::optional<OpExpr> corrected;
  switch (gen) {
    case BosonGenerator::u:
      g = b.u;
      closed = tensor(b.u, b.u);
      break;
    case BosonGenerator::n_prime:
      g = b.n_prime;
      closed = tensor(b.n_prime, id) + tensor(id, b.n_prime);
      break;
    case BosonGenerator::b_prime:
      g = b.b_prime;
      closed = tensor(b.b_prime, id) + tensor(b.q_pow_n_prime, b.b_prime);
      corrected = tensor(b.b_prime, adjoint(b.u)) + tensor(b.q_pow_n_prime, b.b_prime);
      break;
    case BosonGenerator::b_prime_adjoint:
      g = adjoint(b.b_prime);
      closed = tensor(adjoint(b.b_prime), id) + tensor(adjoint(b.q_pow_n_prime), adjoint(b.b_prime));
      corrected = tensor(adjoint(b.b_prime), b.u) + tensor(adjoint(b.q_pow_n_prime), adjoint(b.b_prime));
      break;
  }
  const OperatorChain lhs = handle.chain() * OperatorChain(tensor(g, id)) * handle.chain(true);
  ResidualReport r = chain_residual("boson-comult-" + to_string(gen), lhs, OperatorChain(closed), vec, eval);
  if (corrected) {
    const ResidualReport aux = chain_residual("corrected", lhs, OperatorChain(*corrected), vec, eval);
    r.aux.emplace_back("corrected", aux.failure.empty() ? aux.residual : std::numeric_limits<double>::quiet_NaN());
  }
  return r;
}

}  // namespace qe2
