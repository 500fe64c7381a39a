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


#include "qe2cli/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "qe2/bosonization.hpp"
#include "qe2/dual_group.hpp"
#include "qe2/relations.hpp"

namespace qe2::cli {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kPentagonVectors = 20;
constexpr int kVectors = 10;

std::vector<ComplexVector> seeded_vectors(std::mt19937_64& rng, int dim, int count, int window) {
  std::uniform_int_distribution<int> coord(-window, window);
  std::vector<ComplexVector> out;
  out.push_back(ComplexVector::basis(BasisIndex(dim)));
  while (static_cast<int>(out.size()) < count) {
    BasisIndex x(dim);
    for (int c = 0; c < dim; ++c) x[c] = coord(rng);
    out.push_back(ComplexVector::basis(x));
  }
  return out;
}

VectorRecord from_residual(const ResidualReport& r, double tol) {
  VectorRecord v;
  v.vector = r.vector;
  v.residual = r.residual;
  v.error_estimate = r.error_estimate;
  v.aux = r.aux;
  v.failure = r.failure;
  v.passed = r.passed(tol);
  return v;
}

void finish(IdentityResult& id) {
  id.passed = !id.records.empty();
  for (const auto& r : id.records) {
    id.passed = id.passed && r.passed;
    if (r.residual) id.max_residual = std::max(id.max_residual, *r.residual);
  }
}

/// Numeric identity whose records are computed by independent jobs.
struct NumericJob {
  IdentityResult result;
  std::vector<std::function<ResidualReport()>> tasks;
};

void run_jobs(std::vector<NumericJob>& jobs, double tol, int threads) {
  std::vector<std::pair<std::size_t, std::size_t>> flat;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    jobs[j].result.records.resize(jobs[j].tasks.size());
    for (std::size_t t = 0; t < jobs[j].tasks.size(); ++t) flat.emplace_back(j, t);
  }
  std::vector<double> elapsed(flat.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < flat.size();) {
      const auto [j, t] = flat[k];
      const auto t0 = Clock::now();
      ResidualReport r;
      try {
        r = jobs[j].tasks[t]();
      } catch (const std::exception& e) {
        r.failure = e.what();
      }
      jobs[j].result.records[t] = from_residual(r, tol);
      elapsed[k] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
  };
  const unsigned n = threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < std::min<std::size_t>(n, flat.size()); ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (std::size_t k = 0; k < flat.size(); ++k) jobs[flat[k].first].result.runtime_ms += elapsed[k];
  for (auto& job : jobs) finish(job.result);
}

/// Result shell carrying the catalog formula of `entry` under the name `name`.
IdentityResult numeric_identity(std::string name, const std::string& entry = {}) {
  IdentityResult r;
  const std::string key = entry.empty() ? name : entry;
  for (const auto& e : identity_catalog()) {
    if (e.name == key) {
      r.formula = e.formula;
      r.context = e.context;
    }
  }
  r.name = std::move(name);
  r.mode = "numeric";
  return r;
}

IdentityResult exact_identity(const IdentityRecord& rec, const QParameter& q) {
  IdentityResult r;
  r.name = rec.name;
  r.formula = rec.formula;
  r.context = rec.context;
  r.mode = "exact";
  const auto t0 = Clock::now();
  const ExactCheck check = check_exact(rec, q);
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  VectorRecord v;
  v.vector = "window " + std::to_string(check.window);
  if (check.counterexample) v.vector += ", differs at e" + check.counterexample->to_string();
  v.aux.emplace_back("numeric-deviation", check.numeric_deviation);
  v.passed = check.passed;
  r.records.push_back(v);
  finish(r);
  return r;
}

std::string lambda_label(std::complex<double> lambda, std::complex<double> q) {
  if (lambda == q) return "q";
  std::ostringstream os;
  os << lambda.real();
  return os.str();
}

struct Context {
  const RunConfig& config;
  QParameter q;
  Evaluator eval;
  std::mt19937_64 rng;
};

SuiteResult relations_suite(Context& ctx) {
  SuiteResult s{"relations", {}, false};
  for (const auto& rec : relation_registry()) s.identities.push_back(exact_identity(rec, ctx.q));
  return s;
}

SuiteResult pentagon_suite(Context& ctx) {
  NumericJob job{numeric_identity("braided-pentagon"),
                 {}};
  for (const auto& v : seeded_vectors(ctx.rng, 3 * kDimL, kPentagonVectors, ctx.config.window)) {
    job.tasks.push_back([&ctx, v] { return braided_pentagon_residual(v, DualUnitaryHandle{}, ctx.eval); });
  }
  std::vector<NumericJob> jobs{std::move(job)};
  run_jobs(jobs, ctx.config.tol, ctx.config.threads);
  return {"pentagon", {jobs[0].result}, false};
}

SuiteResult comult_suite(Context& ctx) {
  const auto vecs = seeded_vectors(ctx.rng, 2 * kDimL, kVectors, ctx.config.window);
  const std::vector<std::pair<CoproductGenerator, std::string>> gens{
      {CoproductGenerator::N, "comult-N"},
      {CoproductGenerator::btilde, "comult-btilde"},
      {CoproductGenerator::btilde_adjoint, "comult-btilde*"},
  };
  std::vector<NumericJob> jobs;
  for (const auto& [gen, name] : gens) {
    NumericJob job{numeric_identity(name), {}};
    for (const auto& v : vecs) {
      job.tasks.push_back([&ctx, v, g = gen] { return comult_check(g, v, DualUnitaryHandle{}, ctx.eval); });
    }
    jobs.push_back(std::move(job));
  }
  run_jobs(jobs, ctx.config.tol, ctx.config.threads);
  SuiteResult s{"comult", {}, false};
  for (auto& j : jobs) s.identities.push_back(std::move(j.result));
  return s;
}

SuiteResult slice_suite(Context& ctx) {
  const auto vecs = seeded_vectors(ctx.rng, 3 * kDimL, kVectors, ctx.config.window);
  std::vector<NumericJob> jobs;
  for (const std::complex<double> lambda : {std::complex<double>(0.0, 0.0), std::complex<double>(1.0, 0.0),
                                            ctx.config.q}) {
    NumericJob job{
        numeric_identity("slice-identity(lambda=" + lambda_label(lambda, ctx.config.q) + ")", "slice-identity"), {}};
    for (const auto& v : vecs) {
      job.tasks.push_back(
          [&ctx, v, lambda] { return slice_identity_residual(lambda, v, DualUnitaryHandle{}, ctx.eval); });
    }
    jobs.push_back(std::move(job));
  }
  run_jobs(jobs, ctx.config.tol, ctx.config.threads);
  SuiteResult s{"slice", {}, false};
  for (auto& j : jobs) s.identities.push_back(std::move(j.result));
  return s;
}

IdentityResult single_check(const ResidualReport& r) {
  IdentityResult id = numeric_identity(r.identity);
  id.mode = "exact";
  VectorRecord v = from_residual(r, 0.0);
  v.residual.reset();
  id.records.push_back(v);
  finish(id);
  return id;
}

SuiteResult boson_suite(Context& ctx) {
  SuiteResult s{"boson", {}, false};
  for (const auto& rec : boson_relation_registry()) s.identities.push_back(exact_identity(rec, ctx.q));
  s.identities.push_back(single_check(boson_spectrum_check(ctx.config.window)));
  for (const auto& r : projection_check()) s.identities.push_back(single_check(r));

  std::vector<NumericJob> jobs;
  NumericJob pent{numeric_identity("ordinary-pentagon"), {}};
  for (const auto& v : seeded_vectors(ctx.rng, 9, kVectors, ctx.config.window)) {
    pent.tasks.push_back([&ctx, v] { return ordinary_pentagon_residual(v, WtildeHandle{}, ctx.eval); });
  }
  jobs.push_back(std::move(pent));
  const auto vecs = seeded_vectors(ctx.rng, 6, kVectors, ctx.config.window);
  for (const BosonGenerator gen : {BosonGenerator::u, BosonGenerator::n_prime, BosonGenerator::b_prime,
                                    BosonGenerator::b_prime_adjoint}) {
    NumericJob job{numeric_identity("boson-comult-" + to_string(gen)), {}};
    for (const auto& v : vecs) {
      job.tasks.push_back([&ctx, v, g = gen] { return boson_comult_check(g, v, WtildeHandle{}, ctx.eval); });
    }
    jobs.push_back(std::move(job));
  }
  run_jobs(jobs, ctx.config.tol, ctx.config.threads);
  for (auto& j : jobs) s.identities.push_back(std::move(j.result));
  return s;
}

QexpParams qexp_params(const RunConfig& c) {
  QexpParams p;
  p.q = c.q;
  p.fourier_samples = c.fourier_samples;
  p.coeff_cutoff = c.coeff_cutoff;
  return p;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "pentagon", "comult", "slice", "boson", "all"};
  return names;
}

void RunConfig::validate() const {
  const double r = std::abs(q);
  if (!(r > 0.0 && r < 1.0)) {
    std::ostringstream os;
    os << "q = " << q.real() << (q.imag() < 0 ? "" : "+") << q.imag() << "i has |q| = " << r
       << "; the construction assumes 0 < |q| < 1";
    throw ConfigError(os.str());
  }
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  if (window < 0 || window > 20) throw ConfigError("window must lie in [0, 20]");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (report != "text" && report != "json") throw ConfigError("report must be 'text' or 'json'");
  if (threads < 0) throw ConfigError("threads must be non-negative");
  try {
    qexp_params(*this).validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SuiteReport run_suite(const RunConfig& config) {
  config.validate();
  Context ctx{config, QParameter(config.q), Evaluator(qexp_params(config)), std::mt19937_64(config.seed)};
  SuiteReport report;
  report.config = config;
  const bool all = config.suite == "all";
  // Each suite draws from its own stream so that results do not depend on
  // which other suites ran.
  const std::vector<std::pair<std::string, SuiteResult (*)(Context&)>> suites{
      {"relations", relations_suite}, {"pentagon", pentagon_suite}, {"comult", comult_suite},
      {"slice", slice_suite},         {"boson", boson_suite},
  };
  for (std::size_t k = 0; k < suites.size(); ++k) {
    if (!all && config.suite != suites[k].first) continue;
    ctx.rng.seed(config.seed + 7919 * k);
    SuiteResult s = suites[k].second(ctx);
    s.passed = std::all_of(s.identities.begin(), s.identities.end(), [](const auto& i) { return i.passed; });
    report.suites.push_back(std::move(s));
  }
  report.passed = std::all_of(report.suites.begin(), report.suites.end(), [](const auto& s) { return s.passed; });
  return report;
}

nlohmann::ordered_json to_json(const SuiteReport& report, bool with_timestamp) {
  using nlohmann::ordered_json;
  const RunConfig& c = report.config;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  if (with_timestamp) j["timestamp"] = utc_timestamp();
  j["config"] = {{"q", {{"re", c.q.real()}, {"im", c.q.imag()}}},
                 {"suite", c.suite},
                 {"window", c.window},
                 {"tol", c.tol},
                 {"fourier_samples", c.fourier_samples},
                 {"coeff_cutoff", c.coeff_cutoff},
                 {"seed", c.seed}};
  ordered_json suites = ordered_json::array();
  for (const auto& s : report.suites) {
    ordered_json ids = ordered_json::array();
    for (const auto& id : s.identities) {
      ordered_json recs = ordered_json::array();
      for (const auto& r : id.records) {
        ordered_json rec;
        rec["vector"] = r.vector;
        if (r.residual) {
          rec["residual"] = *r.residual;
          rec["error_estimate"] = r.error_estimate;
        } else {
          rec["residual"] = "exact";
        }
        if (!r.aux.empty()) {
          ordered_json aux = ordered_json::object();
          for (const auto& [name, value] : r.aux) {
            aux[name] = std::isnan(value) ? ordered_json(nullptr) : ordered_json(value);
          }
          rec["aux"] = aux;
        }
        if (!r.failure.empty()) rec["failure"] = r.failure;
        rec["passed"] = r.passed;
        recs.push_back(rec);
      }
      ordered_json entry;
      entry["name"] = id.name;
      entry["formula"] = id.formula;
      entry["context"] = id.context;
      entry["mode"] = id.mode;
      if (id.mode == "numeric") entry["max_residual"] = id.max_residual;
      entry["runtime_ms"] = id.runtime_ms;
      entry["passed"] = id.passed;
      entry["records"] = recs;
      ids.push_back(entry);
    }
    suites.push_back({{"name", s.name}, {"passed", s.passed}, {"identities", ids}});
  }
  j["suites"] = suites;
  j["passed"] = report.passed;
  return j;
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  const RunConfig& c = report.config;
  os << "q = " << c.q.real() << (c.q.imag() < 0 ? "" : "+") << c.q.imag() << "i  window " << c.window << "  tol "
     << c.tol << "  samples " << c.fourier_samples << "  seed " << c.seed << "\n";
  for (const auto& s : report.suites) {
    os << "\n[" << s.name << "] " << (s.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& id : s.identities) {
      os << "  " << (id.passed ? "PASS " : "FAIL ") << std::left << std::setw(34) << id.name;
      if (id.mode == "exact") {
        os << "exact";
      } else {
        os << "max residual " << std::scientific << std::setprecision(2) << id.max_residual << std::defaultfloat;
        std::map<std::string, double> aux_max;
        for (const auto& r : id.records) {
          for (const auto& [name, value] : r.aux) aux_max[name] = std::max(aux_max[name], value);
        }
        for (const auto& [name, value] : aux_max) {
          os << "  " << name << " " << std::scientific << std::setprecision(2) << value << std::defaultfloat;
        }
      }
      os << "  (" << std::fixed << std::setprecision(1) << id.runtime_ms << " ms)" << std::defaultfloat << "\n";
      for (const auto& r : id.records) {
        if (!r.passed) {
          os << "      " << r.vector;
          if (r.residual) os << " residual " << std::scientific << std::setprecision(3) << *r.residual << std::defaultfloat;
          if (!r.failure.empty()) os << " error: " << r.failure;
          os << "\n";
        }
      }
    }
  }
  os << "\n" << (report.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::vector<CatalogEntry> identity_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& r : relation_registry()) out.push_back({r.name, r.formula, r.context, "exact", "relations"});
  out.push_back({"braided-pentagon", "Fhat_23 Fhat_12=Fhat_12 Psihat_23 Fhat_12 Psihat_23* Fhat_23",
                 "dual braided multiplicative unitary", "numeric", "pentagon"});
  out.push_back({"comult-N", "Fhat(N(x)1)Fhat*=j1(N)+j2(N)", "dual comultiplication", "numeric", "comult"});
  out.push_back({"comult-btilde", "Fhat(btilde(x)1)Fhat*=j1(btilde)+j1(q^N)j2(btilde)", "dual comultiplication",
                 "numeric", "comult"});
  out.push_back({"comult-btilde*", "Fhat(btilde*(x)1)Fhat*=j1(btilde)*+j1(q^N)*j2(btilde)*",
                 "dual comultiplication", "numeric", "comult"});
  out.push_back({"slice-identity", "(Fhat^l)*_12 Fhat_23 Fhat^l_12 Fhat*_23=F_q(l Pb^-1q^(Ntilde/2)(x)P*(x)q^(Ntilde/2)b)* Yhat_13",
                 "scaled dual unitary", "numeric", "slice"});
  for (const auto& r : boson_relation_registry()) out.push_back({r.name, r.formula, r.context, "exact", "boson"});
  out.push_back({"boson-spectrum", "Sp(N') in Z, Sp(|b'|) in |q|^Z", "bosonized generators", "exact", "boson"});
  for (const std::string g : {"u", "N'", "b'"}) {
    out.push_back({"projection-" + g, "(g(x)g)Delta=Delta g, g g=g", "projection onto the circle", "exact", "boson"});
  }
  out.push_back({"ordinary-pentagon", "Wtilde_23 Wtilde_12=Wtilde_12 Wtilde_13 Wtilde_23", "bosonization unitary",
                 "numeric", "boson"});
  out.push_back({"boson-comult-u", "Delta(u)=u(x)u", "bosonized comultiplication", "numeric", "boson"});
  out.push_back({"boson-comult-N'", "Delta(N')=N'(x)1+1(x)N'", "bosonized comultiplication", "numeric", "boson"});
  out.push_back({"boson-comult-b'", "Delta(b')=b'(x)1+q^N'(x)b'", "bosonized comultiplication", "numeric", "boson"});
  out.push_back(
      {"boson-comult-b'*", "Delta(b'*)=b'*(x)1+qbar^N'(x)b'*", "bosonized comultiplication", "numeric", "boson"});
  return out;
}

std::string list_identities() {
  std::ostringstream os;
  for (const auto& e : identity_catalog()) {
    os << std::left << std::setw(24) << e.name << " " << std::setw(10) << e.suite << " " << std::setw(8) << e.mode
       << " " << e.formula << "  [" << e.context << "]\n";
  }
  return os.str();
}

}  // namespace qe2::cli
