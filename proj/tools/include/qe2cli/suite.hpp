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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qe2::cli {

inline constexpr const char* kSchemaVersion = "qe2.report/1";

/// Invalid run configuration; the CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::complex<double> q{0.3, 0.4};
  std::string suite = "all";
  /// Seeded basis vectors are drawn from [-window, window]^d.
  int window = 3;
  double tol = 1e-7;
  int fourier_samples = 4096;
  double coeff_cutoff = 1e-15;
  std::uint64_t seed = 1;
  std::string report = "text";
  std::string out;
  /// Worker threads for the residual jobs; 0 picks the hardware count.
  int threads = 0;

  /// Throws ConfigError.
  void validate() const;
};

const std::vector<std::string>& suite_names();

/// One residual on one vector (or one exact check).
struct VectorRecord {
  std::string vector;
  /// Absent for exact identities.
  std::optional<double> residual;
  double error_estimate = 0.0;
  std::vector<std::pair<std::string, double>> aux;
  std::string failure;
  bool passed = false;
};

struct IdentityResult {
  std::string name;
  std::string formula;
  std::string context;
  std::string mode;  // "exact" | "numeric"
  std::vector<VectorRecord> records;
  double max_residual = 0.0;
  double runtime_ms = 0.0;
  bool passed = false;
};

struct SuiteResult {
  std::string name;
  std::vector<IdentityResult> identities;
  bool passed = false;
};

struct SuiteReport {
  RunConfig config;
  std::vector<SuiteResult> suites;
  bool passed = false;
};

SuiteReport run_suite(const RunConfig& config);

/// Versioned JSON: config echo, suites -> identities -> per-vector records.
nlohmann::ordered_json to_json(const SuiteReport& report, bool with_timestamp = true);
std::string to_text(const SuiteReport& report);

struct CatalogEntry {
  std::string name;
  std::string formula;
  std::string context;
  std::string mode;
  std::string suite;
};

/// Every identity the harness knows: the exact registry, the boson relations
/// and the numerically checked identities.
std::vector<CatalogEntry> identity_catalog();
std::string list_identities();

}  // namespace qe2::cli
