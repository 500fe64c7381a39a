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

#include "qe2/dual_group.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace qe2 {
namespace {

constexpr int kLL[] = {kDimL, kDimL};
constexpr int kLLL[] = {kDimL, kDimL, kDimL};

OperatorChain on_legs3(const OperatorChain& c, std::initializer_list<int> legs) {
  return c.embedded(std::span<const int>(legs.begin(), legs.size()), kLLL);
}

OpExpr on_legs3(const OpExpr& op, std::initializer_list<int> legs) {
  return embed_leg(op, std::span<const int>(legs.begin(), legs.size()), kLLL);
}

ShiftMonomial xhat_monomial(const GeneratorCatalog& catalog) {
  auto m = catalog.get("Xhat").single_monomial();
  if (!m) throw std::logic_error("Xhat must be a single weighted shift");
  return *m;
}

}  // namespace

double ResidualReport::aux_value(const std::string& name) const {
  for (const auto& [key, value] : aux) {
    if (key == name) return value;
  }
  throw std::out_of_range("no auxiliary reading named " + name);
}

std::string describe(const ComplexVector& vec) {
  if (vec.empty()) return "0";
  if (vec.size() == 1) {
    const auto& [x, c] = *vec.entries().begin();
    if (c == std::complex<double>(1.0, 0.0)) return "e" + x.to_string();
  }
  std::ostringstream os;
  os << "vector(" << vec.size() << " entries)";
  return os.str();
}

OperatorChain DualUnitaryHandle::chain(bool inverse) const {
  const OpExpr& Y = catalog->get("Yhat");
  if (variant == UnitaryVariant::identity) return OperatorChain(OpExpr::identity(Y.dim()));
  const FqFactor fq{xhat_monomial(*catalog), lambda, true};
  const OperatorChain f = OperatorChain(fq) * OperatorChain(Y);
  return inverse ? f.adjoint() : f;
}

ComplexVector apply_Fhat(const ComplexVector& vec, bool inverse, const DualUnitaryHandle& handle,
                         const Evaluator& eval, ApplyStats* stats) {
  return eval.apply(handle.chain(inverse), vec, stats);
}

OpExpr dual_braiding(const GeneratorCatalog& catalog) { return catalog.get("Zhat") * catalog.get("Sigma_LL"); }

ResidualReport chain_residual(std::string identity, const OperatorChain& lhs, const OperatorChain& rhs,
                              const ComplexVector& vec, const Evaluator& eval) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.vector = describe(vec);
  try {
    ApplyStats sl, sr;
    const ComplexVector a = eval.apply(lhs, vec, &sl);
    const ComplexVector b = eval.apply(rhs, vec, &sr);
    r.residual = distance(a, b);
    r.reference_norm = b.norm();
    sl.merge(sr);
    r.error_estimate = sl.error_estimate;
    r.critical_hits = sl.critical_hits;
    r.max_support = sl.max_support;
  } catch (const std::exception& e) {
    r.failure = e.what();
  }
  return r;
}

ResidualReport braided_pentagon_residual(const ComplexVector& vec, const DualUnitaryHandle& handle,
                                         const Evaluator& eval) {
  if (vec.dim() != 3 * kDimL) throw std::invalid_argument("braided pentagon acts on H_L^{(x)3}");
  const OperatorChain F = handle.chain();
  const OperatorChain F12 = on_legs3(F, {1, 2});
  const OperatorChain F23 = on_legs3(F, {2, 3});
  const OpExpr psi23 = on_legs3(dual_braiding(*handle.catalog), {2, 3});
  const OperatorChain lhs = F23 * F12;
  const OperatorChain rhs = F12 * OperatorChain(psi23) * F12 * OperatorChain(adjoint(psi23)) * F23;
  return chain_residual("braided-pentagon", lhs, rhs, vec, eval);
}

ResidualReport comult_check(CoproductGenerator gen, const ComplexVector& vec, const DualUnitaryHandle& handle,
                            const Evaluator& eval) {
  if (vec.dim() != 2 * kDimL) throw std::invalid_argument("comultiplication acts on H_L (x) H_L");
  const GeneratorCatalog& c = *handle.catalog;
  const OpExpr& N = c.get("N");
  const OpExpr& bt = c.get("btilde");
  const OpExpr& qN = c.get("q^N");
  OpExpr g(kDimL), closed(2 * kDimL);
  std::string name;
  switch (gen) {
    case CoproductGenerator::N:
      name = "comult-N";
      g = N;
      closed = embedding_j(1, N, c) + embedding_j(2, N, c);
      break;
    case CoproductGenerator::btilde:
      name = "comult-btilde";
      g = bt;
      closed = embedding_j(1, bt, c) + embedding_j(1, qN, c) * embedding_j(2, bt, c);
      break;
    case CoproductGenerator::btilde_adjoint:
      name = "comult-btilde*";
      g = adjoint(bt);
      closed = adjoint(embedding_j(1, bt, c)) + adjoint(embedding_j(1, qN, c)) * adjoint(embedding_j(2, bt, c));
      break;
  }
  const OperatorChain lhs = handle.chain() * OperatorChain(tensor(g, OpExpr::identity(kDimL))) * handle.chain(true);
  return chain_residual(name, lhs, OperatorChain(closed), vec, eval);
}

OperatorChain slice_operator(std::complex<double> lambda, const OpExpr& middle, const GeneratorCatalog& c) {
  const OpExpr first = c.get("P") * c.get("b^-1") * c.get("q^(Ntilde/2)");
  const OpExpr last = c.get("q^(Ntilde/2)") * c.get("b");
  const OpExpr arg = on_legs3(first, {1}) * on_legs3(middle, {2}) * on_legs3(last, {3});
  auto m = arg.single_monomial();
  if (!m) throw std::logic_error("slice argument must be a single weighted shift");
  return OperatorChain(FqFactor{*m, lambda, true}) * OperatorChain(on_legs3(c.get("Yhat"), {1, 3}));
}

ResidualReport slice_identity_residual(std::complex<double> lambda, const ComplexVector& vec,
                                       const DualUnitaryHandle& handle, const Evaluator& eval) {
  if (vec.dim() != 3 * kDimL) throw std::invalid_argument("slice identity acts on H_L^{(x)3}");
  const GeneratorCatalog& c = *handle.catalog;
  DualUnitaryHandle scaled = handle;
  scaled.lambda = lambda;
  DualUnitaryHandle plain = handle;
  plain.lambda = {1.0, 0.0};

  const OperatorChain lhs = on_legs3(scaled.chain(true), {1, 2}) * on_legs3(plain.chain(), {2, 3}) *
                            on_legs3(scaled.chain(), {1, 2}) * on_legs3(plain.chain(true), {2, 3});
  const OpExpr& P = c.get("P");
  ResidualReport r = chain_residual("slice-identity", lhs, slice_operator(lambda, adjoint(P), c), vec, eval);

  const OpExpr psi_hat23 = on_legs3(dual_braiding(c), {2, 3});
  const OpExpr psi23 = on_legs3(c.get("Z") * c.get("Sigma_LL"), {2, 3});
  const OperatorChain F12 = on_legs3(scaled.chain(), {1, 2});
  const std::vector<std::pair<std::string, OperatorChain>> readings{
      {"P-middle", slice_operator(lambda, P, c)},
      {"braided", OperatorChain(psi_hat23) * F12 * OperatorChain(adjoint(psi_hat23))},
      {"mixed-braiding", OperatorChain(psi_hat23) * F12 * OperatorChain(psi23)},
  };
  for (const auto& [name, rhs] : readings) {
    const ResidualReport aux = chain_residual(name, lhs, rhs, vec, eval);
    r.aux.emplace_back(name, aux.failure.empty() ? aux.residual : std::numeric_limits<double>::quiet_NaN());
  }
  if (lambda == std::complex<double>(0.0, 0.0)) {
    const ResidualReport aux = chain_residual("Yhat13", lhs, OperatorChain(on_legs3(c.get("Yhat"), {1, 3})), vec, eval);
    r.aux.emplace_back("Yhat13", aux.failure.empty() ? aux.residual : std::numeric_limits<double>::quiet_NaN());
  }
  return r;
}

}  // namespace qe2
