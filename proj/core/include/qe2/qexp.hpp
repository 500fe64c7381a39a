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
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qe2/lattice.hpp"
#include "qe2/op_expr.hpp"

namespace qe2 {

struct QexpParams {
  std::complex<double> q{0.3, 0.4};
  /// Number of product factors; 0 selects it from the tail bound per argument.
  int product_cutoff = 0;
  /// Samples per symbol circle (power of two, >= 64).
  int fourier_samples = 4096;
  /// Fourier coefficients and output entries below this modulus are dropped.
  double coeff_cutoff = 1e-15;

  /// Throws std::invalid_argument on |q| >= 1, bad sample count or cutoff.
  void validate() const;
};

/// Factors needed so that |q|^{2K} (1 + |lambda|) / (1 - |q|^2) < 1e-15.
int product_terms(double abs_q, double abs_lambda);

/// Integer m with |lambda| = |q|^m; throws std::domain_error when |lambda| is
/// not a power of |q| (relative tolerance 1e-9).
int modulus_exponent(std::complex<double> lambda, double abs_q);

/// The quantum exponential
///   F_q(lambda) = prod_k (1 + |q|^{2k} conj(lambda)) / (1 + |q|^{2k} lambda),
/// equal to -1 on {-|q|^{-2k}}. Defined on the closure of C^{|q|}.
std::complex<double> fq_scalar(std::complex<double> lambda, const QexpParams& params);

/// theta -> F_q(|q|^n e^{i theta}). The factor with |q|^{2k+n} = 1 equals
/// e^{-i theta} identically and is evaluated in that form.
std::complex<double> fq_on_circle(int n, double theta, double abs_q, int product_cutoff = 0);

/// Fourier coefficients a_m of theta -> F_q(|q|^n e^{i theta}), so that
/// F_q(|q|^n e^{i theta}) = sum_m a_m e^{i m theta}.
struct SymbolTable {
  int modulus_exponent = 0;
  int samples = 0;
  int first_index = 0;  // index of coefficients[0]
  std::vector<std::complex<double>> coefficients;
  double dropped_l1 = 0.0;
  /// l1 distance between the coefficients at `samples` and 2 * `samples`.
  double sampling_error = 0.0;
  double parseval = 0.0;
  /// The circle passes through the exceptional set.
  bool critical = false;

  int last_index() const { return first_index + static_cast<int>(coefficients.size()) - 1; }
  std::complex<double> at(int m) const;
  double error_bound() const { return dropped_l1 + sampling_error; }
};

/// Circles |lambda| = |q|^n with n even and n <= 0 meet the exceptional set.
inline bool is_critical_exponent(int n) { return n <= 0 && n % 2 == 0; }

/// Thread-safe memo of SymbolTables keyed by modulus exponent.
class SymbolCache {
 public:
  explicit SymbolCache(const QexpParams& params);

  const QexpParams& params() const { return params_; }
  std::shared_ptr<const SymbolTable> get(int n);
  std::size_t size() const;

 private:
  QexpParams params_;
  mutable std::mutex mutex_;
  std::map<int, std::shared_ptr<const SymbolTable>> tables_;
};

/// Builds one table: FFT of the samples, truncation at coeff_cutoff, and the
/// M-versus-2M sampling error. Critical circles use four times the samples.
SymbolTable build_symbol_table(int n, const QexpParams& params);

struct ApplyStats {
  double error_estimate = 0.0;
  double pruned_mass = 0.0;
  std::size_t critical_hits = 0;
  std::size_t fq_applications = 0;
  std::size_t max_support = 0;

  void merge(const ApplyStats& other);
};

/// F_q(lambda T) (or its adjoint) applied to vec, where T is a weighted
/// translation whose coefficient has constant modulus |q|^n along every
/// orbit. Per basis vector the orbit is gauged to |q|^n times the plain
/// shift, and the symbol coefficients are applied as a convolution.
ComplexVector apply_fq(const ShiftMonomial& argument, std::complex<double> lambda, bool adjoint,
                       const ComplexVector& vec, SymbolCache& cache, ApplyStats* stats = nullptr);

/// Orbit class of the Xhat shift (i,j,k,l) -> (i+1,j+1,k-1,l-1) on Z^4.
struct FiberKey {
  int c1 = 0;  // i - j
  int c2 = 0;  // k - l
  int c3 = 0;  // i + l
  auto operator<=>(const FiberKey&) const = default;
};

struct FiberDescriptor {
  FiberKey key;
  /// Orbit parameters t = j of the support points, ascending.
  std::vector<int> orbit_params;

  static FiberKey key_of(const BasisIndex& x);
  static int orbit_param(const BasisIndex& x) { return x[1]; }
  /// Basis index with invariants `key` and parameter t.
  static BasisIndex point(const FiberKey& key, int t);
  /// Xhat restricted to the fiber is |q|^{c3+1} times a gauged shift.
  int radius_exponent() const { return key.c3 + 1; }
  bool critical() const { return is_critical_exponent(radius_exponent()); }
  /// d_t = zeta^{-t(t+1)/2} Ph(q)^{(c3+1) t}; conjugating by diag(d_t)
  /// turns Xhat on the fiber into |q|^{c3+1} times the plain shift.
  std::complex<double> gauge(int t, const QParameter& q) const;
};

std::vector<FiberDescriptor> fiber_decompose(const ComplexVector& vec);

enum class Direction { forward, adjoint };

/// F_q(Xhat) or F_q(Xhat)* on a vector of H_L (x) H_L, fiber by fiber.
ComplexVector apply_fq_shift_class(const ComplexVector& vec, Direction direction, SymbolCache& cache,
                                   ApplyStats* stats = nullptr);

/// Dense matrix of fn(Xhat) on a fiber, rows/columns t = -window .. window-1,
/// built on the periodically wrapped window by explicit DFT eigenvectors.
struct DenseFiberMatrix {
  int first_t = 0;
  int size = 0;
  std::vector<std::complex<double>> data;  // row-major

  std::complex<double> at(int row_t, int col_t) const {
    return data[static_cast<std::size_t>((row_t - first_t) * size + (col_t - first_t))];
  }
};

using ScalarFunction = std::function<std::complex<double>(std::complex<double>)>;

DenseFiberMatrix dense_oracle_fq(int window, const FiberDescriptor& fiber, const QexpParams& params,
                                 const ScalarFunction& fn = {});

}  // namespace qe2
