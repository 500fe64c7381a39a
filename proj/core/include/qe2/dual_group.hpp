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
#include <string>
#include <utility>
#include <vector>

#include "qe2/generators.hpp"
#include "qe2/operator_chain.hpp"

namespace qe2 {

enum class UnitaryVariant {
  full,
  /// Replaces the unitary by the identity; negative control for the harness.
  identity,
};

/// Fhat^lambda = F_q(lambda Xhat)* Yhat on H_L (x) H_L; lambda = 1 is Fhat.
/// Numerical parameters are carried by the Evaluator the handle is used with.
struct DualUnitaryHandle {
  std::complex<double> lambda{1.0, 0.0};
  UnitaryVariant variant = UnitaryVariant::full;
  const GeneratorCatalog* catalog = &default_catalog();

  OperatorChain chain(bool inverse = false) const;
};

/// Residual of one identity on one vector.
struct ResidualReport {
  std::string identity;
  std::string vector;
  double residual = 0.0;
  double error_estimate = 0.0;
  double reference_norm = 0.0;
  std::size_t critical_hits = 0;
  std::size_t max_support = 0;
  /// Further readings of the same identity, reported alongside.
  std::vector<std::pair<std::string, double>> aux;
  /// Non-empty when the computation itself failed (e.g. a domain error).
  std::string failure;

  bool passed(double tol) const { return failure.empty() && residual <= tol + error_estimate; }
  double aux_value(const std::string& name) const;
};

std::string describe(const ComplexVector& vec);

/// l2 residual of lhs v - rhs v with merged error estimates.
ResidualReport chain_residual(std::string identity, const OperatorChain& lhs, const OperatorChain& rhs,
                              const ComplexVector& vec, const Evaluator& eval);

ComplexVector apply_Fhat(const ComplexVector& vec, bool inverse, const DualUnitaryHandle& handle,
                         const Evaluator& eval, ApplyStats* stats = nullptr);

/// Psi_hat = Zhat o Sigma on H_L (x) H_L.
OpExpr dual_braiding(const GeneratorCatalog& catalog = default_catalog());

/// Fhat_23 Fhat_12 = Fhat_12 Psihat_23 Fhat_12 Psihat_23* Fhat_23 on H_L^{(x)3}.
ResidualReport braided_pentagon_residual(const ComplexVector& vec, const DualUnitaryHandle& handle,
                                         const Evaluator& eval);

enum class CoproductGenerator { N, btilde, btilde_adjoint };

/// Fhat (g (x) 1) Fhat* against the closed forms
///   N:       j1(N) + j2(N)
///   btilde:  j1(btilde) + j1(q^N) j2(btilde)
///   btilde*: j1(btilde)* + j1(q^N)* j2(btilde)*
ResidualReport comult_check(CoproductGenerator gen, const ComplexVector& vec, const DualUnitaryHandle& handle,
                            const Evaluator& eval);

/// (Fhat^lambda)*_12 Fhat_23 Fhat^lambda_12 Fhat*_23 against
/// S'(lambda) = F_q(lambda Pb^{-1}q^{Ntilde/2} (x) P* (x) q^{Ntilde/2}b)* Yhat_13.
/// Aux readings: "P-middle" (middle leg P), "braided" (Psihat_23 Fhat^lambda_12
/// Psihat_23*), "mixed-braiding" (Psihat_23 Fhat^lambda_12 Psi_23) and, for
/// lambda = 0, "Yhat13".
ResidualReport slice_identity_residual(std::complex<double> lambda, const ComplexVector& vec,
                                       const DualUnitaryHandle& handle, const Evaluator& eval);

/// S'(lambda) with the middle leg `middle` (P* as printed, or P).
OperatorChain slice_operator(std::complex<double> lambda, const OpExpr& middle,
                             const GeneratorCatalog& catalog = default_catalog());

}  // namespace qe2
