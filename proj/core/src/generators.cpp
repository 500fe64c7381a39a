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

#include "qe2/generators.hpp"

#include <stdexcept>

namespace qe2 {
namespace {

ExponentForm linear(std::initializer_list<int> coeffs) {
  return ExponentForm::linear(std::span<const int>(coeffs.begin(), coeffs.size()));
}

AffineMap translation(std::initializer_list<int> offset) {
  return AffineMap::translation(std::span<const int>(offset.begin(), offset.size()));
}

Polynomial one(int dim) { return Polynomial::constant(dim, 1); }

// e_x -> c q^{qf(x)/2} qbar^{qbf(x)/2} e_{x + offset}.
OpExpr weighted_translation(std::initializer_list<int> offset, const ExactScalar& c, const ExponentForm& qf,
                            const ExponentForm& qbf) {
  const int dim = static_cast<int>(offset.size());
  return OpExpr::shift(translation(offset), Polynomial::constant(dim, c), qf, qbf);
}

// zeta^{c * x_a * x_b} as a diagonal operator.
OpExpr zeta_bilinear(int dim, int a, int b, int c) {
  return OpExpr::diagonal(one(dim), ExponentForm::product(dim, a, b, 2 * c), ExponentForm::product(dim, a, b, -2 * c));
}

}  // namespace

OpExpr swap_legs(int dim_a, int dim_b) {
  const int dim = dim_a + dim_b;
  std::vector<int> m(static_cast<std::size_t>(dim * dim), 0);
  // Output coordinates: the b-block followed by the a-block.
  for (int r = 0; r < dim_b; ++r) m[static_cast<std::size_t>(r * dim + dim_a + r)] = 1;
  for (int r = 0; r < dim_a; ++r) m[static_cast<std::size_t>((dim_b + r) * dim + r)] = 1;
  return OpExpr::shift(AffineMap(dim, std::move(m), std::vector<int>(static_cast<std::size_t>(dim), 0)), one(dim),
                       ExponentForm(dim), ExponentForm(dim));
}

GeneratorCatalog::GeneratorCatalog(std::optional<Perturbation> perturbation)
    : perturbation_(std::move(perturbation)) {
  const ExponentForm zero2(kDimL);
  auto& o = ops_;

  o["identity_L"] = OpExpr::identity(kDimL);
  o["identity_H"] = OpExpr::identity(kDimH);
  o["v"] = weighted_translation({-1, 0}, 1, zero2, zero2);
  o["v*"] = weighted_translation({1, 0}, 1, zero2, zero2);
  o["n"] = weighted_translation({0, 1}, 1, linear({2, 0}), zero2);
  o["n^-1"] = weighted_translation({0, -1}, 1, linear({-2, 0}), zero2);
  o["N"] = OpExpr::diagonal(Polynomial::affine(kDimL, std::vector<int>{1, 1}, 0), zero2, zero2);
  o["Ntilde"] = OpExpr::diagonal(Polynomial::affine(kDimL, std::vector<int>{1, 1}, 2), zero2, zero2);
  o["b"] = weighted_translation({-1, -1}, 1, linear({-1, 1}), zero2);
  o["b^-1"] = weighted_translation({1, 1}, 1, linear({1, -1}), zero2);
  o["P"] = OpExpr::diagonal(one(kDimL), linear({0, -2}), linear({0, 2}));
  o["q^(N/2)"] = OpExpr::diagonal(one(kDimL), linear({1, 1}), zero2);
  o["q^(-N/2)"] = OpExpr::diagonal(one(kDimL), linear({-1, -1}), zero2);
  o["q^(Ntilde/2)"] = OpExpr::diagonal(Polynomial::constant(kDimL, ExactScalar::q_pow(1)), linear({1, 1}), zero2);
  o["q^N"] = OpExpr::diagonal(one(kDimL), linear({2, 2}), zero2);
  // Stated action btilde e_{k,l} = q^l e_{k-1,l-1}; registry checks it against q^{Ntilde/2} b.
  o["btilde"] = weighted_translation({-1, -1}, 1, linear({0, 2}), zero2);
  o["phase(btilde)"] = weighted_translation({-1, -1}, 1, linear({0, 1}), linear({0, -1}));
  o["modulus(btilde)"] = OpExpr::diagonal(one(kDimL), linear({0, 1}), linear({0, 1}));

  o["z"] = weighted_translation({1}, 1, ExponentForm(kDimH), ExponentForm(kDimH));
  o["P'"] = OpExpr::diagonal(one(kDimH), linear({-2}), linear({2}));

  o["Sigma_HH"] = swap_legs(kDimH, kDimH);
  o["Sigma_LL"] = swap_legs(kDimL, kDimL);
  // W e_p (x) e_k = e_p (x) e_{k+p}.
  o["W"] = OpExpr::shift(AffineMap(2, {1, 0, 1, 1}, {0, 0}), one(2), ExponentForm(2), ExponentForm(2));
  o["What"] = o["Sigma_HH"] * adjoint(o["W"]) * o["Sigma_HH"];

  // Xhat e_{ij} (x) e_{kl} = zeta^{-j-1} q^{i+l+1} e_{i+1,j+1} (x) e_{k-1,l-1}; zeta^{-1} q = qbar.
  o["Xhat"] = weighted_translation({1, 1, -1, -1}, ExactScalar::qbar_pow(1), linear({2, -2, 0, 2}), linear({0, 2, 0, 0}));
  // Yhat e_{ij} (x) e_{kl} = e_{i-k-l,j} (x) e_{kl}.
  o["Yhat"] = OpExpr::shift(AffineMap(4, {1, 0, -1, -1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}, {0, 0, 0, 0}), one(4),
                            ExponentForm(4), ExponentForm(4));
  o["Zhat"] = zeta_bilinear(4, 1, 3, 1);
  o["Z"] = o["Sigma_LL"] * adjoint(o["Zhat"]) * o["Sigma_LL"];
  // U e_{ij} (x) e_k = e_{ij} (x) e_{j+k}.
  o["U"] = OpExpr::shift(AffineMap(3, {1, 0, 0, 0, 1, 0, 0, 1, 1}, {0, 0, 0}), one(3), ExponentForm(3), ExponentForm(3));
  // Vhat' e_p (x) e_{ij} = zeta^{-pj} e_p (x) e_{ij}.
  o["Vhat'"] = zeta_bilinear(3, 0, 2, -1);

  if (perturbation_) {
    auto it = ops_.find(perturbation_->generator);
    if (it == ops_.end()) throw std::out_of_range("unknown generator: " + perturbation_->generator);
    it->second *= ExactScalar(perturbation_->factor);
  }
}

const OpExpr& GeneratorCatalog::get(std::string_view name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw std::out_of_range("unknown generator: " + std::string(name));
  return it->second;
}

bool GeneratorCatalog::contains(std::string_view name) const { return ops_.find(name) != ops_.end(); }

std::vector<std::string> GeneratorCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, op] : ops_) out.push_back(name);
  return out;
}

OpExpr GeneratorCatalog::btilde_built() const { return get("q^(Ntilde/2)") * get("b"); }

OpExpr GeneratorCatalog::xhat_built() const {
  return tensor(get("P") * get("b^-1") * get("q^(Ntilde/2)"), get("q^(Ntilde/2)") * get("b"));
}

const GeneratorCatalog& default_catalog() {
  static const GeneratorCatalog catalog;
  return catalog;
}

OpExpr generator(std::string_view name) { return default_catalog().get(name); }

OpExpr embedding_j(int which, const OpExpr& gen, const GeneratorCatalog& catalog) {
  if (gen.dim() != kDimL) throw std::invalid_argument("embedding_j expects an operator on H_L");
  const OpExpr id = OpExpr::identity(kDimL);
  switch (which) {
    case 1:
      return tensor(gen, id);
    case 2:
      return conjugate(catalog.get("Zhat"), tensor(id, gen));
    default:
      throw std::invalid_argument("embedding index must be 1 or 2");
  }
}

}  // namespace qe2
