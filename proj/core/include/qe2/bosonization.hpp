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

#include <string>
#include <vector>

#include "qe2/dual_group.hpp"
#include "qe2/relations.hpp"

namespace qe2 {

/// Generators of the bosonized algebra on H (x) H_L, coordinates (p, i, j).
struct BosonCatalog {
  explicit BosonCatalog(const GeneratorCatalog& catalog = default_catalog());

  OpExpr u;        ///< z (x) 1
  OpExpr n_prime;  ///< Vhat'*(1 (x) N)Vhat' = 1 (x) N
  OpExpr b_prime;  ///< Vhat'*(1 (x) btilde)Vhat'
  /// P' (x) btilde, the closed form of b_prime.
  OpExpr b_prime_closed;
  /// q^{N'} = 1 (x) q^N.
  OpExpr q_pow_n_prime;
};

/// Which of the equivalent factorisations of Wtilde is applied. Legs of
/// Z^6 = (p, i, j, p', k, l) are H, H_L, H, H_L.
enum class WtildeRoute {
  /// W_13 U_23 Vhat'*_34 Fhat_24 Vhat'_34 on H (x) H_L (x) H (x) H_L.
  definition,
  /// W_14 W_34 V'*_456 F_q(Xhat)*_2356 What_25 What_26 V'_456 on H^{(x)6}.
  conjugated,
  /// W_14 W_34 F_q(Pb^{-1}q^{Ntilde/2} (x) P' (x) q^{Ntilde/2}b)*_23456 What_25 What_26.
  rewritten,
};

enum class BosonVariant {
  full,
  /// Fhat replaced by the identity: Wtilde = W_13 U_23.
  dual_identity,
  /// Only W_13; negative control for the pentagon harness.
  circle_only,
};

struct WtildeHandle {
  BosonVariant variant = BosonVariant::full;
  WtildeRoute route = WtildeRoute::definition;
  const GeneratorCatalog* catalog = &default_catalog();

  OperatorChain chain(bool inverse = false) const;
};

ComplexVector apply_Wtilde(const ComplexVector& vec, bool inverse, const WtildeHandle& handle,
                           const Evaluator& eval, ApplyStats* stats = nullptr);

/// Wtilde_23 Wtilde_12 = Wtilde_12 Wtilde_13 Wtilde_23 on (H (x) H_L)^{(x)3} = Z^9.
ResidualReport ordinary_pentagon_residual(const ComplexVector& vec, const WtildeHandle& handle,
                                          const Evaluator& eval);

/// Exact relations between u, N', b' (with the negative control ub' != b'u).
std::vector<IdentityRecord> boson_relation_registry(const GeneratorCatalog& catalog = default_catalog());
/// Runs every boson relation through check_exact; residual is 0 on success
/// and 1 otherwise, with the counterexample in `vector`.
std::vector<ResidualReport> boson_relations_check(const QParameter& q,
                                                  const GeneratorCatalog& catalog = default_catalog());

/// N' is diagonal with integer eigenvalues and b'*b' is diagonal with
/// eigenvalues in |q|^{2Z}, checked on every basis vector of the window.
ResidualReport boson_spectrum_check(int window, const GeneratorCatalog& catalog = default_catalog());

/// Generator-level consistency of the projection g (u -> u, N', b' -> 0):
/// (g (x) g) Delta(x) = Delta(g(x)) and g(g(x)) = g(x) on every generator.
std::vector<ResidualReport> projection_check();

enum class BosonGenerator { u, n_prime, b_prime, b_prime_adjoint };

std::string to_string(BosonGenerator gen);

/// Wtilde (g (x) 1) Wtilde* against the stated closed forms
///   u:   u (x) u
///   N':  N' (x) 1 + 1 (x) N'
///   b':  b' (x) 1 + q^{N'} (x) b'
///   b'*: b'* (x) 1 + qbar^{N'} (x) b'*
/// For b' and b'* the aux reading "corrected" replaces the first term by
/// b' (x) u* (resp. b'* (x) u).
ResidualReport boson_comult_check(BosonGenerator gen, const ComplexVector& vec, const WtildeHandle& handle,
                                  const Evaluator& eval);

}  // namespace qe2
