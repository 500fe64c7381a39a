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


// qe2verify: runs the verification suites and reports residuals.
//
// Exit status: 0 all checks pass, 1 some check fails, 2 configuration error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qe2cli/suite.hpp"

int main(int argc, char** argv) {
  qe2::cli::RunConfig config;
  double q_re = config.q.real();
  double q_im = config.q.imag();
  bool list = false;

  CLI::App app{"Verifies the operator identities of the dual braided quantum E(2) group"};
  app.add_option("--q-re", q_re, "Real part of q")->capture_default_str();
  app.add_option("--q-im", q_im, "Imaginary part of q")->capture_default_str();
  app.add_option("--suite", config.suite, "relations | pentagon | comult | slice | boson | all")
      ->check(CLI::IsMember(qe2::cli::suite_names()))
      ->capture_default_str();
  app.add_option("--window", config.window, "Seeded vectors are drawn from [-window, window]^d")
      ->capture_default_str();
  app.add_option("--tol", config.tol, "Residual tolerance for numeric identities")->capture_default_str();
  app.add_option("--fourier-samples", config.fourier_samples, "Samples per symbol circle")->capture_default_str();
  app.add_option("--coeff-cutoff", config.coeff_cutoff, "Drop coefficients below this modulus")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for the test vectors")->capture_default_str();
  app.add_option("--report", config.report, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", config.out, "Write the report here instead of stdout");
  app.add_option("--threads", config.threads, "Worker threads (0 = hardware)")->capture_default_str();
  app.add_flag("--list-identities", list, "Print every registered identity and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list) {
    std::cout << qe2::cli::list_identities();
    return 0;
  }

  config.q = {q_re, q_im};
  qe2::cli::SuiteReport report;
  try {
    report = qe2::cli::run_suite(config);
  } catch (const qe2::cli::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  const std::string body = config.report == "json" ? qe2::cli::to_json(report).dump(2) + "\n"
                                                   : qe2::cli::to_text(report);
  if (config.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(config.out);
    if (!f) {
      std::cerr << "cannot write " << config.out << "\n";
      return 2;
    }
    f << body;
  }
  return report.passed ? 0 : 1;
}
