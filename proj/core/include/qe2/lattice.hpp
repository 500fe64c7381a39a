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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qe2/exact_scalar.hpp"

namespace qe2 {

inline constexpr int kMaxLatticeDim = 12;

/// A point of Z^d labelling a basis vector of a tensor power of l^2(Z).
/// H_L = l^2(Z^2) contributes two coordinates (i, j), H = l^2(Z) one.
class BasisIndex {
 public:
  using value_type = std::int32_t;

  BasisIndex() = default;
  explicit BasisIndex(int dim);
  BasisIndex(std::initializer_list<value_type> coords);
  explicit BasisIndex(std::span<const value_type> coords);

  int dim() const { return dim_; }
  value_type operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }
  value_type& operator[](int k) { return coords_[static_cast<std::size_t>(k)]; }
  std::span<const value_type> coords() const { return {coords_.data(), static_cast<std::size_t>(dim_)}; }

  std::string to_string() const;

  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return a.coords_ < b.coords_;
  }

 private:
  std::array<value_type, kMaxLatticeDim> coords_{};
  int dim_ = 0;
};

struct BasisIndexHash {
  std::size_t operator()(const BasisIndex& x) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(x.dim());
    for (auto c : x.coords()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Enumerates [-radius, radius]^dim in lexicographic order.
std::vector<BasisIndex> lattice_box(int dim, int radius);

/// x -> M x + offset with M in GL(d, Z).
class AffineMap {
 public:
  AffineMap() = default;
  static AffineMap identity(int dim);
  static AffineMap translation(std::span<const int> offset);
  AffineMap(int dim, std::vector<int> matrix, std::vector<int> offset);

  int dim() const { return dim_; }
  int matrix(int row, int col) const { return matrix_[static_cast<std::size_t>(row * dim_ + col)]; }
  int offset(int row) const { return offset_[static_cast<std::size_t>(row)]; }
  const std::vector<int>& matrix_data() const { return matrix_; }
  const std::vector<int>& offset_data() const { return offset_; }

  bool is_translation() const;
  BasisIndex apply(const BasisIndex& x) const;

  /// (this o inner)(x) = this(inner(x)).
  AffineMap after(const AffineMap& inner) const;
  /// Throws std::domain_error when M is not unimodular.
  AffineMap inverse() const;
  /// Places this map on the coordinates `slots` of a dim-dimensional space;
  /// the remaining coordinates are fixed.
  AffineMap embedded(int dim, std::span<const int> slots) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
  friend auto operator<=>(const AffineMap& a, const AffineMap& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (auto c = a.matrix_ <=> b.matrix_; c != 0) return c;
    return a.offset_ <=> b.offset_;
  }

 private:
  int dim_ = 0;
  std::vector<int> matrix_;  // row-major
  std::vector<int> offset_;
};

inline bool is_zero_scalar(const ExactScalar& s) { return s.is_zero(); }
inline bool is_zero_scalar(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }

/// Finitely supported map BasisIndex -> Scalar; zero entries are never stored.
template <class Scalar>
class FiniteVector {
 public:
  using Map = std::unordered_map<BasisIndex, Scalar, BasisIndexHash>;

  FiniteVector() = default;
  explicit FiniteVector(int dim) : dim_(dim) {}

  static FiniteVector basis(const BasisIndex& x, Scalar value = Scalar(1)) {
    FiniteVector v(x.dim());
    v.add(x, value);
    return v;
  }

  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }
  void reserve(std::size_t n) { entries_.reserve(n); }

  Scalar at(const BasisIndex& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  void add(const BasisIndex& x, const Scalar& value) {
    if (x.dim() != dim_) throw std::invalid_argument("basis index dimension does not match vector dimension");
    if (is_zero_scalar(value)) return;
    auto [it, inserted] = entries_.try_emplace(x, value);
    if (!inserted) {
      it->second += value;
      if (is_zero_scalar(it->second)) entries_.erase(it);
    }
  }

  FiniteVector& operator+=(const FiniteVector& other) {
    check_dim(other);
    for (const auto& [x, c] : other.entries_) add(x, c);
    return *this;
  }
  FiniteVector& operator-=(const FiniteVector& other) {
    check_dim(other);
    for (const auto& [x, c] : other.entries_) add(x, Scalar(0) - c);
    return *this;
  }
  FiniteVector& operator*=(const Scalar& s) {
    if (is_zero_scalar(s)) {
      entries_.clear();
      return *this;
    }
    for (auto& [x, c] : entries_) c *= s;
    return *this;
  }
  friend FiniteVector operator+(FiniteVector a, const FiniteVector& b) { return a += b; }
  friend FiniteVector operator-(FiniteVector a, const FiniteVector& b) { return a -= b; }

  friend bool operator==(const FiniteVector& a, const FiniteVector& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  /// Drops entries with modulus below `threshold`; returns the l^2 mass dropped.
  double prune(double threshold)
    requires std::is_same_v<Scalar, std::complex<double>>
  {
    double dropped = 0.0;
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (std::abs(it->second) < threshold) {
        dropped += std::norm(it->second);
        it = entries_.erase(it);
      } else {
        ++it;
      }
    }
    return std::sqrt(dropped);
  }

  double norm() const
    requires std::is_same_v<Scalar, std::complex<double>>
  {
    double sum = 0.0;
    for (const auto& [x, c] : entries_) sum += std::norm(c);
    return std::sqrt(sum);
  }

 private:
  void check_dim(const FiniteVector& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("vector dimensions differ");
  }

  int dim_ = 0;
  Map entries_;
};

using ExactVector = FiniteVector<ExactScalar>;
using ComplexVector = FiniteVector<std::complex<double>>;

ComplexVector evaluate(const ExactVector& v, const QParameter& q);

/// l^2 norm of a - b.
double distance(const ComplexVector& a, const ComplexVector& b);

}  // namespace qe2
