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
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "qe2/op_expr.hpp"
#include "qe2/qexp.hpp"

namespace qe2 {

/// F_q(lambda * argument), or its adjoint.
struct FqFactor {
  ShiftMonomial argument;
  std::complex<double> lambda{1.0, 0.0};
  bool adjoint = false;
};

using ChainFactor = std::variant<OpExpr, FqFactor>;

/// Formal product of exact operators and quantum-exponential factors. The
/// first factor is leftmost, i.e. applied last.
class OperatorChain {
 public:
  explicit OperatorChain(int dim) : dim_(dim) {}
  OperatorChain(const OpExpr& op);     // NOLINT
  OperatorChain(const FqFactor& fq);   // NOLINT

  int dim() const { return dim_; }
  const std::vector<ChainFactor>& factors() const { return factors_; }

  friend OperatorChain operator*(const OperatorChain& a, const OperatorChain& b);
  OperatorChain adjoint() const;
  OperatorChain embedded(std::span<const int> legs, std::span<const int> ambient_dims) const;

 private:
  int dim_ = 0;
  std::vector<ChainFactor> factors_;
};

/// Float-mode evaluation of chains on finitely supported vectors.
class Evaluator {
 public:
  explicit Evaluator(std::shared_ptr<SymbolCache> cache);
  explicit Evaluator(const QexpParams& params);

  const QexpParams& params() const { return cache_->params(); }
  const QParameter& q() const { return q_; }
  SymbolCache& symbols() const { return *cache_; }

  ComplexVector apply(const OperatorChain& chain, const ComplexVector& vec, ApplyStats* stats = nullptr) const;

 private:
  std::shared_ptr<SymbolCache> cache_;
  QParameter q_;
};

}  // namespace qe2
