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

#include "qe2/operator_chain.hpp"

#include <numeric>
#include <stdexcept>

namespace qe2 {

OperatorChain::OperatorChain(const OpExpr& op) : dim_(op.dim()) { factors_.emplace_back(op); }

OperatorChain::OperatorChain(const FqFactor& fq) : dim_(fq.argument.dim()) { factors_.emplace_back(fq); }

OperatorChain operator*(const OperatorChain& a, const OperatorChain& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("chain dimensions differ");
  OperatorChain out(a.dim_);
  out.factors_ = a.factors_;
  for (const auto& f : b.factors_) {
    // Adjacent exact factors are multiplied exactly.
    const auto* next = std::get_if<OpExpr>(&f);
    auto* last = out.factors_.empty() ? nullptr : std::get_if<OpExpr>(&out.factors_.back());
    if (next && last) {
      *last = *last * *next;
    } else {
      out.factors_.push_back(f);
    }
  }
  return out;
}

OperatorChain OperatorChain::adjoint() const {
  OperatorChain out(dim_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (const auto* op = std::get_if<OpExpr>(&*it)) {
      out.factors_.emplace_back(qe2::adjoint(*op));
    } else {
      FqFactor fq = std::get<FqFactor>(*it);
      fq.adjoint = !fq.adjoint;
      out.factors_.emplace_back(fq);
    }
  }
  return out;
}

OperatorChain OperatorChain::embedded(std::span<const int> legs, std::span<const int> ambient_dims) const {
  OperatorChain out(std::accumulate(ambient_dims.begin(), ambient_dims.end(), 0));
  for (const auto& f : factors_) {
    if (const auto* op = std::get_if<OpExpr>(&f)) {
      out.factors_.emplace_back(embed_leg(*op, legs, ambient_dims));
    } else {
      FqFactor fq = std::get<FqFactor>(f);
      fq.argument = embed_leg(fq.argument, legs, ambient_dims);
      out.factors_.emplace_back(fq);
    }
  }
  return out;
}

Evaluator::Evaluator(std::shared_ptr<SymbolCache> cache) : cache_(std::move(cache)), q_(cache_->params().q) {}

Evaluator::Evaluator(const QexpParams& params) : Evaluator(std::make_shared<SymbolCache>(params)) {}

ComplexVector Evaluator::apply(const OperatorChain& chain, const ComplexVector& vec, ApplyStats* stats) const {
  if (chain.dim() != vec.dim()) throw std::invalid_argument("chain and vector dimensions differ");
  ComplexVector v = vec;
  const auto& factors = chain.factors();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (const auto* op = std::get_if<OpExpr>(&*it)) {
      v = CompiledOp(*op, q_).apply(v);
    } else {
      const auto& fq = std::get<FqFactor>(*it);
      v = apply_fq(fq.argument, fq.lambda, fq.adjoint, v, *cache_, stats);
    }
    if (stats) stats->max_support = std::max(stats->max_support, v.size());
  }
  return v;
}

}  // namespace qe2
