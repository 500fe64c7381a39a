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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qe2/exact_scalar.hpp"
#include "qe2/op_expr.hpp"

namespace qe2 {

/// Lattice dimension of one copy of H_L = l^2(Z^2) and of H = l^2(Z).
inline constexpr int kDimL = 2;
inline constexpr int kDimH = 1;

/// Multiplies every coefficient of one named generator by `factor`. Used to
/// check that the verification suites are sensitive to the definitions.
struct Perturbation {
  std::string generator;
  Rational factor{1001, 1000};
};

/// Every named operator on H, H_L and their tensor products. Coordinates are
/// (i, j) on H_L, p on H; multi-leg operators list legs consecutively.
///
///   H_L:          v n n^-1 N Ntilde b b^-1 P q^(N/2) q^(-N/2) q^(Ntilde/2)
///                 q^N btilde phase(btilde) modulus(btilde) v* identity_L
///   H:            z P' identity_H
///   H (x) H:      W What Sigma_HH
///   H_L (x) H_L:  Xhat Yhat Zhat Z Sigma_LL
///   H_L (x) H:    U
///   H (x) H_L:    Vhat'
class GeneratorCatalog {
 public:
  explicit GeneratorCatalog(std::optional<Perturbation> perturbation = std::nullopt);

  /// Throws std::out_of_range for unknown names.
  const OpExpr& get(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;
  const std::optional<Perturbation>& perturbation() const { return perturbation_; }

  /// Pb^{-1}q^{Ntilde/2} (x) q^{Ntilde/2}b assembled from the catalog entries.
  OpExpr xhat_built() const;
  /// q^{Ntilde/2} b assembled from the catalog entries.
  OpExpr btilde_built() const;

 private:
  std::map<std::string, OpExpr, std::less<>> ops_;
  std::optional<Perturbation> perturbation_;
};

/// Unperturbed catalog shared by the library.
const GeneratorCatalog& default_catalog();
OpExpr generator(std::string_view name);

/// Leg swap on a two-fold tensor product with leg dimensions (a, b).
OpExpr swap_legs(int dim_a, int dim_b);

/// j_1(g) = g (x) 1 and j_2(g) = Zhat (1 (x) g) Zhat* on H_L (x) H_L.
OpExpr embedding_j(int which, const OpExpr& gen, const GeneratorCatalog& catalog = default_catalog());

}  // namespace qe2
