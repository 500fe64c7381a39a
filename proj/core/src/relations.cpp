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

#include "qe2/relations.hpp"

#include <algorithm>
#include <cmath>

namespace qe2 {
namespace {

OpExpr on_legs(const OpExpr& op, std::initializer_list<int> legs, std::initializer_list<int> dims) {
  return embed_leg(op, std::span<const int>(legs.begin(), legs.size()), std::span<const int>(dims.begin(), dims.size()));
}

}  // namespace

std::vector<IdentityRecord> relation_registry(const GeneratorCatalog& c) {
  const OpExpr& v = c.get("v");
  const OpExpr& vs = c.get("v*");
  const OpExpr& n = c.get("n");
  const OpExpr& ninv = c.get("n^-1");
  const OpExpr& N = c.get("N");
  const OpExpr& Nt = c.get("Ntilde");
  const OpExpr& b = c.get("b");
  const OpExpr& binv = c.get("b^-1");
  const OpExpr& P = c.get("P");
  const OpExpr& qhN = c.get("q^(N/2)");
  const OpExpr& qmhN = c.get("q^(-N/2)");
  const OpExpr& qhNt = c.get("q^(Ntilde/2)");
  const OpExpr& qN = c.get("q^N");
  const OpExpr& bt = c.get("btilde");
  const OpExpr& ph = c.get("phase(btilde)");
  const OpExpr& mod = c.get("modulus(btilde)");
  const OpExpr& z = c.get("z");
  const OpExpr& Pp = c.get("P'");
  const OpExpr& W = c.get("W");
  const OpExpr& What = c.get("What");
  const OpExpr& X = c.get("Xhat");
  const OpExpr& Y = c.get("Yhat");
  const OpExpr& Zh = c.get("Zhat");
  const OpExpr& Z = c.get("Z");
  const OpExpr& U = c.get("U");
  const OpExpr& V = c.get("Vhat'");
  const OpExpr& SLL = c.get("Sigma_LL");
  const OpExpr& SHH = c.get("Sigma_HH");
  const OpExpr idL = OpExpr::identity(kDimL);
  const OpExpr idH = OpExpr::identity(kDimH);

  std::vector<IdentityRecord> r;
  auto add = [&r](std::string name, std::string formula, std::string context, OpExpr lhs, OpExpr rhs) {
    r.push_back(IdentityRecord{std::move(name), std::move(formula), std::move(context), CheckMode::exact,
                               std::move(lhs), std::move(rhs), true});
  };

  add("identity-refl", "1=1", "sanity", idL, idL);
  add("v-n-comm", "vnv*=qn", "H_L generators", v * n * vs, ExactScalar::q_pow(1) * n);
  add("n-inverse", "n^-1 n=1", "H_L generators", ninv * n, idL);
  add("N-Ntilde", "N-Ntilde=-2I", "shifted number operator", N - Nt, OpExpr::scalar(kDimL, -2));
  add("Nb-comm", "Nb=b(N-2I)", "number operator and b", N * b, b * (N - OpExpr::scalar(kDimL, 2)));
  add("Nbinv-comm", "Nb^-1=b^-1(N+2I)", "number operator and b^-1", N * binv,
      binv * (N + OpExpr::scalar(kDimL, 2)));
  add("b-inverse", "b b^-1=1", "H_L generators", b * binv, idL);
  add("ninv-v", "n^-1 v=q^(-N/2) b", "H_L generators", ninv * v, qmhN * b);
  add("vstar-n", "v*n=b^-1 q^(N/2)", "H_L generators", vs * n, binv * qhN);
  add("qN-binv", "q^N b^-1=q^2 b^-1 q^N", "H_L generators", qN * binv, ExactScalar::q_pow(2) * binv * qN);
  add("qN-square", "q^N=q^(N/2) q^(N/2)", "H_L generators", qN, qhN * qhN);
  add("btilde-built", "q^(Ntilde/2) b e_{k,l}=q^l e_{k-1,l-1}", "definition of btilde", c.btilde_built(), bt);
  add("btilde-scaling", "btilde* btilde=|q|^-2 btilde btilde*", "btilde relations", adjoint(bt) * bt,
      ExactScalar::abs_q_pow(-2) * bt * adjoint(bt));
  add("btilde-polar", "phase(btilde) modulus(btilde)=btilde", "polar decomposition", ph * mod, bt);
  add("phase-modulus", "phase(btilde) modulus(btilde) phase(btilde)*=|q| modulus(btilde)", "polar decomposition",
      ph * mod * adjoint(ph), ExactScalar::abs_q_pow(1) * mod);
  add("Xhat-built", "Pb^-1 q^(Ntilde/2) (x) q^(Ntilde/2) b = stated Xhat action", "definition of Xhat",
      c.xhat_built(), X);
  add("Xhat-normal", "Xhat Xhat*=Xhat* Xhat", "normality of Xhat", X * adjoint(X), adjoint(X) * X);
  const OpExpr total_N = tensor(N, idL) + tensor(idL, N);
  add("Xhat-total-N", "Xhat (N(x)1+1(x)N)=(N(x)1+1(x)N) Xhat", "Xhat commutes with the total number", X * total_N,
      total_N * X);
  add("Zhat-conj-vn", "Zhat(vn(x)n^-1vP)Zhat*=Pvn(x)n^-1v", "dual braiding", conjugate(Zh, tensor(v * n, ninv * v * P)),
      tensor(P * v * n, ninv * v));
  add("Yhat-conj", "Yhat(Pvn(x)n^-1v)Yhat*=Pv*n(x)q^2 q^(N/2)b", "dual multiplicative unitary",
      conjugate(Y, tensor(P * v * n, ninv * v)), tensor(P * vs * n, ExactScalar::q_pow(2) * qhN * b));
  add("Zhat-Yhat-commute", "Zhat Yhat=Yhat Zhat", "dual multiplicative unitary", Zh * Y, Y * Zh);
  add("Zhat-conj-btilde", "Zhat(1(x)q^(Ntilde/2)b)Zhat*=P(x)q^(Ntilde/2)b", "second embedding",
      conjugate(Zh, tensor(idL, qhNt * b)), tensor(P, qhNt * b));
  add("Z-diagonal", "Sigma Zhat* Sigma e_{ij}(x)e_{kl}=zeta^(-jl) e_{ij}(x)e_{kl}", "braiding",
      Z, OpExpr::diagonal(Polynomial::constant(4, 1), ExponentForm::product(4, 1, 3, -2),
                          ExponentForm::product(4, 1, 3, 2)));
  add("j2-N", "j2(N)=1(x)N", "second embedding", embedding_j(2, N, c), tensor(idL, N));
  add("j2-btilde", "j2(btilde)=P(x)btilde", "second embedding", embedding_j(2, bt, c), tensor(P, bt));
  add("U-conj-N", "U(N(x)1)U*=N(x)1", "dual action", conjugate(U, tensor(N, idH)), tensor(N, idH));
  add("U-conj-btilde", "U(btilde(x)1)U*=btilde(x)z*", "dual action", conjugate(U, tensor(bt, idH)),
      tensor(bt, adjoint(z)));
  add("What-def", "What=Sigma W* Sigma, What e_a(x)e_b=e_{a-b}(x)e_b", "dual of W", SHH * adjoint(W) * SHH, What);
  add("Yhat-legs", "Yhat=What_13 What_14", "dual multiplicative unitary",
      on_legs(What, {1, 3}, {1, 1, 1, 1}) * on_legs(What, {1, 4}, {1, 1, 1, 1}), Y);
  add("W-pentagon", "W_23 W_12=W_12 W_13 W_23", "multiplicative unitary of the circle",
      on_legs(W, {2, 3}, {1, 1, 1}) * on_legs(W, {1, 2}, {1, 1, 1}),
      on_legs(W, {1, 2}, {1, 1, 1}) * on_legs(W, {1, 3}, {1, 1, 1}) * on_legs(W, {2, 3}, {1, 1, 1}));
  add("Vhat'-conj-N", "Vhat'*(1(x)N)Vhat'=1(x)N", "bosonization embedding", adjoint(V) * tensor(idH, N) * V,
      tensor(idH, N));
  add("Vhat'-conj-btilde", "Vhat'*(1(x)q^(Ntilde/2)b)Vhat'=P'(x)q^(Ntilde/2)b", "bosonization embedding",
      adjoint(V) * tensor(idH, qhNt * b) * V, tensor(Pp, qhNt * b));

  const std::vector<std::pair<std::string, const OpExpr*>> unitaries{
      {"v", &v},     {"P", &P},   {"phase(btilde)", &ph}, {"z", &z},       {"P'", &Pp},      {"W", &W},
      {"What", &What}, {"U", &U}, {"Vhat'", &V},          {"Yhat", &Y},    {"Zhat", &Zh},    {"Z", &Z},
      {"Sigma_LL", &SLL}, {"Sigma_HH", &SHH}};
  for (const auto& [name, op] : unitaries) {
    const OpExpr id = OpExpr::identity(op->dim());
    add("unitary-" + name, name + " " + name + "*=1", "unitarity", *op * adjoint(*op), id);
    add("counitary-" + name, name + "* " + name + "=1", "unitarity", adjoint(*op) * *op, id);
  }
  return r;
}

ExactCheck check_exact(const IdentityRecord& record, const QParameter& q, std::optional<int> window) {
  ExactCheck out;
  if (record.mode != CheckMode::exact || !record.lhs || !record.rhs) {
    throw std::invalid_argument("record '" + record.name + "' is not an exact identity");
  }
  const OpExpr& a = *record.lhs;
  const OpExpr& b = *record.rhs;
  out.window = window.value_or(default_window(a, b));
  out.counterexample = first_difference(a, b, out.window);
  out.equal = !out.counterexample.has_value();

  const CompiledOp ca(a, q), cb(b, q);
  for (const auto& x : lattice_box(a.dim(), out.window)) {
    const ComplexVector e = ComplexVector::basis(x);
    const ComplexVector la = ca.apply(e);
    const double scale = std::max(1.0, la.norm());
    out.numeric_deviation = std::max(out.numeric_deviation, distance(la, cb.apply(e)) / scale);
  }
  const bool numeric_ok = out.numeric_deviation < 1e-10;
  out.passed = record.expect_equal ? (out.equal && numeric_ok) : !out.equal;
  return out;
}

}  // namespace qe2
