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

#include "qe2/qexp.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qe2/generators.hpp"

namespace qe2 {
namespace {

using cd = std::complex<double>;

constexpr double kModulusTolerance = 1e-9;
constexpr double kExceptionalArgTolerance = 1e-12;

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

// Raw DFT coefficients a_m, m in [-M/2, M/2), of theta -> F_q(|q|^n e^{i theta}).
std::vector<cd> sampled_coefficients(int n, int samples, double abs_q, int product_cutoff) {
  std::vector<cd> values(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    values[static_cast<std::size_t>(k)] = fq_on_circle(n, theta, abs_q, product_cutoff);
  }
  std::vector<cd> spectrum(values.size());
  auto* in = reinterpret_cast<fftw_complex*>(values.data());
  auto* out = reinterpret_cast<fftw_complex*>(spectrum.data());
  fftw_plan plan = fftw_plan_dft_1d(samples, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  // Reorder to ascending index m = -M/2 .. M/2-1 and normalise.
  std::vector<cd> a(values.size());
  const int half = samples / 2;
  for (int j = 0; j < samples; ++j) {
    const int m = j < half ? j : j - samples;
    a[static_cast<std::size_t>(m + half)] = spectrum[static_cast<std::size_t>(j)] / static_cast<double>(samples);
  }
  return a;
}

BasisIndex translate(const BasisIndex& x, std::span<const int> delta, int steps) {
  BasisIndex y = x;
  for (int k = 0; k < x.dim(); ++k) y[k] += steps * delta[static_cast<std::size_t>(k)];
  return y;
}

}  // namespace

void QexpParams::validate() const {
  const double a = std::abs(q);
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("the deformation parameter must satisfy 0 < |q| < 1");
  if (fourier_samples < 64 || !is_power_of_two(fourier_samples)) {
    throw std::invalid_argument("fourier_samples must be a power of two and at least 64");
  }
  if (!(coeff_cutoff > 0.0)) throw std::invalid_argument("coeff_cutoff must be positive");
  if (product_cutoff < 0) throw std::invalid_argument("product_cutoff must be non-negative");
}

int product_terms(double abs_q, double abs_lambda) {
  const double target = 1e-15 * (1.0 - abs_q * abs_q) / (1.0 + abs_lambda);
  const double k = std::log(target) / (2.0 * std::log(abs_q));
  return std::max(1, static_cast<int>(std::ceil(k)) + 1);
}

int modulus_exponent(cd lambda, double abs_q) {
  const double r = std::abs(lambda);
  if (r == 0.0) throw std::domain_error("zero has no modulus exponent");
  const double m = std::log(r) / std::log(abs_q);
  const int n = static_cast<int>(std::lround(m));
  if (std::abs(r / std::pow(abs_q, n) - 1.0) > kModulusTolerance) {
    throw std::domain_error("argument modulus is not an integer power of |q|");
  }
  return n;
}

cd fq_on_circle(int n, double theta, double abs_q, int product_cutoff) {
  const int terms = product_cutoff > 0 ? product_cutoff : product_terms(abs_q, std::pow(abs_q, n));
  const cd phase = std::polar(1.0, theta);
  cd result{1.0, 0.0};
  for (int k = 0; k < terms; ++k) {
    if (2 * k + n == 0) {
      result *= std::conj(phase);
      continue;
    }
    const cd w = std::pow(abs_q, 2 * k + n) * phase;
    result *= (1.0 + std::conj(w)) / (1.0 + w);
  }
  return result;
}

cd fq_scalar(cd lambda, const QexpParams& params) {
  if (lambda == cd(0.0, 0.0)) return {1.0, 0.0};
  const double abs_q = std::abs(params.q);
  const int n = modulus_exponent(lambda, abs_q);
  const double theta = std::arg(lambda);
  if (is_critical_exponent(n) && std::abs(std::abs(theta) - std::numbers::pi) < kExceptionalArgTolerance) {
    return {-1.0, 0.0};
  }
  return fq_on_circle(n, theta, abs_q, params.product_cutoff);
}

cd SymbolTable::at(int m) const {
  if (m < first_index || m > last_index()) return {0.0, 0.0};
  return coefficients[static_cast<std::size_t>(m - first_index)];
}

SymbolTable build_symbol_table(int n, const QexpParams& params) {
  SymbolTable t;
  t.modulus_exponent = n;
  t.critical = is_critical_exponent(n);
  t.samples = params.fourier_samples * (t.critical ? 4 : 1);
  const double abs_q = std::abs(params.q);
  const std::vector<cd> a = sampled_coefficients(n, t.samples, abs_q, params.product_cutoff);
  const std::vector<cd> fine = sampled_coefficients(n, 2 * t.samples, abs_q, params.product_cutoff);

  const int half = t.samples / 2;
  for (int m = -t.samples; m < t.samples; ++m) {
    const cd f = fine[static_cast<std::size_t>(m + t.samples)];
    const cd c = (m >= -half && m < half) ? a[static_cast<std::size_t>(m + half)] : cd{};
    t.sampling_error += std::abs(f - c);
  }

  int lo = half, hi = -half - 1;
  for (int m = -half; m < half; ++m) {
    const double mag = std::abs(a[static_cast<std::size_t>(m + half)]);
    t.parseval += mag * mag;
    if (mag >= params.coeff_cutoff) {
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  if (lo > hi) lo = hi = 0;
  t.first_index = lo;
  t.coefficients.assign(static_cast<std::size_t>(hi - lo + 1), cd{});
  for (int m = -half; m < half; ++m) {
    const cd c = a[static_cast<std::size_t>(m + half)];
    if (m >= lo && m <= hi && std::abs(c) >= params.coeff_cutoff) {
      t.coefficients[static_cast<std::size_t>(m - lo)] = c;
    } else {
      t.dropped_l1 += std::abs(c);
    }
  }
  return t;
}

SymbolCache::SymbolCache(const QexpParams& params) : params_(params) { params_.validate(); }

std::shared_ptr<const SymbolTable> SymbolCache::get(int n) {
  std::lock_guard lock(mutex_);
  auto it = tables_.find(n);
  if (it != tables_.end()) return it->second;
  // FFTW planning is not thread-safe; building under the lock covers it.
  auto table = std::make_shared<const SymbolTable>(build_symbol_table(n, params_));
  tables_.emplace(n, table);
  return table;
}

std::size_t SymbolCache::size() const {
  std::lock_guard lock(mutex_);
  return tables_.size();
}

void ApplyStats::merge(const ApplyStats& other) {
  error_estimate += other.error_estimate;
  pruned_mass += other.pruned_mass;
  critical_hits += other.critical_hits;
  fq_applications += other.fq_applications;
  max_support = std::max(max_support, other.max_support);
}

ComplexVector apply_fq(const ShiftMonomial& argument, cd lambda, bool adjoint, const ComplexVector& vec,
                       SymbolCache& cache, ApplyStats* stats) {
  if (argument.dim() != vec.dim()) throw std::invalid_argument("operator and vector dimensions differ");
  if (!argument.is_translation()) throw std::invalid_argument("functional calculus needs a weighted translation");
  const QParameter q(cache.params().q);
  const double abs_q = q.abs_q();
  const std::vector<int> delta = argument.translation();

  ApplyStats local;
  local.fq_applications = 1;
  ComplexVector out(vec.dim());
  std::vector<cd> gauge;
  for (const auto& [x, value] : vec.entries()) {
    const cd c0 = lambda * coefficient(argument, x, q);
    if (c0 == cd(0.0, 0.0)) {
      out.add(x, value);
      continue;
    }
    const int n = modulus_exponent(c0, abs_q);
    const double rho = std::pow(abs_q, n);
    const auto table = cache.get(n);
    if (table->critical) ++local.critical_hits;

    // F(T)   = sum_m a_m U^m,  F(T)* = sum_m conj(a_{-m}) U^m.
    const int lo = std::min(0, adjoint ? -table->last_index() : table->first_index);
    const int hi = std::max(0, adjoint ? -table->first_index : table->last_index());
    auto unit_step = [&](const BasisIndex& y) {
      const cd u = lambda * coefficient(argument, y, q) / rho;
      if (std::abs(std::abs(u) - 1.0) > kModulusTolerance) {
        throw std::domain_error("weighted shift modulus is not constant along the orbit");
      }
      return u;
    };
    gauge.assign(static_cast<std::size_t>(hi - lo + 1), cd{});
    auto D = [&](int m) -> cd& { return gauge[static_cast<std::size_t>(m - lo)]; };
    D(0) = 1.0;
    for (int m = 0; m < hi; ++m) D(m + 1) = D(m) * unit_step(translate(x, delta, m));
    for (int m = 0; m > lo; --m) D(m - 1) = D(m) * std::conj(unit_step(translate(x, delta, m - 1)));

    for (int m = lo; m <= hi; ++m) {
      const cd coef = adjoint ? std::conj(table->at(-m)) : table->at(m);
      if (coef == cd(0.0, 0.0)) continue;
      out.add(translate(x, delta, m), value * coef * D(m));
    }
    local.error_estimate += std::abs(value) * table->error_bound();
  }
  local.pruned_mass = out.prune(cache.params().coeff_cutoff);
  local.error_estimate += local.pruned_mass;
  local.max_support = out.size();
  if (stats) stats->merge(local);
  return out;
}

FiberKey FiberDescriptor::key_of(const BasisIndex& x) {
  if (x.dim() != 2 * kDimL) throw std::invalid_argument("fibers live on H_L (x) H_L");
  return FiberKey{x[0] - x[1], x[2] - x[3], x[0] + x[3]};
}

BasisIndex FiberDescriptor::point(const FiberKey& key, int t) {
  const int i = key.c1 + t;
  const int l = key.c3 - i;
  return BasisIndex{i, t, key.c2 + l, l};
}

cd FiberDescriptor::gauge(int t, const QParameter& q) const {
  const std::int64_t tt = t;
  const std::int64_t zeta_exp = -tt * (tt + 1) / 2;
  const std::int64_t phase_exp = static_cast<std::int64_t>(radius_exponent()) * tt;
  return q.half_power(2 * zeta_exp + phase_exp, -2 * zeta_exp - phase_exp);
}

std::vector<FiberDescriptor> fiber_decompose(const ComplexVector& vec) {
  std::map<FiberKey, std::vector<int>> groups;
  for (const auto& [x, value] : vec.entries()) groups[FiberDescriptor::key_of(x)].push_back(FiberDescriptor::orbit_param(x));
  std::vector<FiberDescriptor> out;
  for (auto& [key, ts] : groups) {
    std::sort(ts.begin(), ts.end());
    out.push_back(FiberDescriptor{key, std::move(ts)});
  }
  return out;
}

ComplexVector apply_fq_shift_class(const ComplexVector& vec, Direction direction, SymbolCache& cache,
                                   ApplyStats* stats) {
  static const ShiftMonomial xhat = *generator("Xhat").single_monomial();
  ComplexVector out(vec.dim());
  for (const auto& fiber : fiber_decompose(vec)) {
    ComplexVector part(vec.dim());
    for (int t : fiber.orbit_params) {
      const BasisIndex x = FiberDescriptor::point(fiber.key, t);
      part.add(x, vec.at(x));
    }
    out += apply_fq(xhat, {1.0, 0.0}, direction == Direction::adjoint, part, cache, stats);
  }
  return out;
}

DenseFiberMatrix dense_oracle_fq(int window, const FiberDescriptor& fiber, const QexpParams& params,
                                 const ScalarFunction& fn) {
  if (window < 1 || window > 64) throw std::invalid_argument("oracle window must lie in [1, 64]");
  params.validate();
  const QParameter q(params.q);
  const int L = 2 * window;
  const double rho = std::pow(q.abs_q(), fiber.radius_exponent());
  const ScalarFunction f = fn ? fn : [&params](cd z) { return fq_scalar(z, params); };

  // Eigenvectors of the cyclic shift C e_s = e_{s+1}: V_{s,k} = w^{ks}/sqrt(L),
  // eigenvalue w^{-k}.
  std::vector<cd> V(static_cast<std::size_t>(L * L));
  std::vector<cd> eig(static_cast<std::size_t>(L));
  for (int k = 0; k < L; ++k) {
    for (int s = 0; s < L; ++s) {
      V[static_cast<std::size_t>(s * L + k)] = std::polar(1.0 / std::sqrt(L), 2.0 * std::numbers::pi * ((k * s) % L) / L);
    }
    // Exact phases at the quarter points keep the exceptional value exact.
    cd w = std::polar(1.0, -2.0 * std::numbers::pi * k / L);
    if (2 * k == L) w = {-1.0, 0.0};
    if (k == 0) w = {1.0, 0.0};
    eig[static_cast<std::size_t>(k)] = f(rho * w);
  }
  std::vector<cd> G(static_cast<std::size_t>(L * L), cd{});
  for (int s = 0; s < L; ++s) {
    for (int t = 0; t < L; ++t) {
      cd acc{};
      for (int k = 0; k < L; ++k) {
        acc += V[static_cast<std::size_t>(s * L + k)] * eig[static_cast<std::size_t>(k)] *
               std::conj(V[static_cast<std::size_t>(t * L + k)]);
      }
      G[static_cast<std::size_t>(s * L + t)] = acc;
    }
  }

  DenseFiberMatrix out;
  out.first_t = -window;
  out.size = L;
  out.data.resize(static_cast<std::size_t>(L * L));
  for (int s = 0; s < L; ++s) {
    const cd ds = fiber.gauge(s - window, q);
    for (int t = 0; t < L; ++t) {
      out.data[static_cast<std::size_t>(s * L + t)] =
          ds * std::conj(fiber.gauge(t - window, q)) * G[static_cast<std::size_t>(s * L + t)];
    }
  }
  return out;
}

}  // namespace qe2
