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

#include <optional>
#include <string>
#include <vector>

#include "qe2/generators.hpp"
#include "qe2/op_expr.hpp"

namespace qe2 {

enum class CheckMode { exact, numeric };

/// One stated operator identity. Exact records carry both sides as OpExprs;
/// numeric records (pentagons, comultiplications) are run by the suites and
/// leave lhs/rhs empty.
struct IdentityRecord {
  std::string name;
  std::string formula;
  std::string context;
  CheckMode mode = CheckMode::exact;
  std::optional<OpExpr> lhs;
  std::optional<OpExpr> rhs;
  /// Equality expected; false marks a negative control.
  bool expect_equal = true;
};

/// All exact identities between the catalog operators.
std::vector<IdentityRecord> relation_registry(const GeneratorCatalog& catalog = default_catalog());

struct ExactCheck {
  bool equal = false;
  int window = 0;
  std::optional<BasisIndex> counterexample;
  /// Max |lhs e_x - rhs e_x| in float mode at the given q over the window.
  double numeric_deviation = 0.0;
  bool passed = false;
};

/// equal_exact on the default window plus a float-mode confirmation at q.
ExactCheck check_exact(const IdentityRecord& record, const QParameter& q, std::optional<int> window = std::nullopt);

}  // namespace qe2
