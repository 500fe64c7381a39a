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

#include "qe2/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qe2 {

BasisIndex::BasisIndex(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxLatticeDim) throw std::invalid_argument("lattice dimension out of range");
}

BasisIndex::BasisIndex(std::initializer_list<value_type> coords)
    : BasisIndex(std::span<const value_type>(coords.begin(), coords.size())) {}

BasisIndex::BasisIndex(std::span<const value_type> coords) : BasisIndex(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

std::string BasisIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < dim_; ++k) {
    if (k) os << ',';
    os << (*this)[k];
  }
  os << ')';
  return os.str();
}

std::vector<BasisIndex> lattice_box(int dim, int radius) {
  if (radius < 0) throw std::invalid_argument("negative window radius");
  std::vector<BasisIndex> out;
  BasisIndex x(dim);
  for (int k = 0; k < dim; ++k) x[k] = -radius;
  while (true) {
    out.push_back(x);
    int k = dim - 1;
    while (k >= 0 && x[k] == radius) {
      x[k] = -radius;
      --k;
    }
    if (k < 0) break;
    ++x[k];
  }
  return out;
}

AffineMap::AffineMap(int dim, std::vector<int> matrix, std::vector<int> offset)
    : dim_(dim), matrix_(std::move(matrix)), offset_(std::move(offset)) {
  if (matrix_.size() != static_cast<std::size_t>(dim * dim) || offset_.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("affine map has inconsistent sizes");
  }
}

AffineMap AffineMap::identity(int dim) {
  std::vector<int> m(static_cast<std::size_t>(dim * dim), 0);
  for (int k = 0; k < dim; ++k) m[static_cast<std::size_t>(k * dim + k)] = 1;
  return AffineMap(dim, std::move(m), std::vector<int>(static_cast<std::size_t>(dim), 0));
}

AffineMap AffineMap::translation(std::span<const int> offset) {
  AffineMap out = identity(static_cast<int>(offset.size()));
  std::copy(offset.begin(), offset.end(), out.offset_.begin());
  return out;
}

bool AffineMap::is_translation() const { return matrix_ == identity(dim_).matrix_; }

BasisIndex AffineMap::apply(const BasisIndex& x) const {
  BasisIndex y(dim_);
  for (int r = 0; r < dim_; ++r) {
    std::int64_t acc = offset_[static_cast<std::size_t>(r)];
    for (int c = 0; c < dim_; ++c) acc += static_cast<std::int64_t>(matrix(r, c)) * x[c];
    y[r] = static_cast<BasisIndex::value_type>(acc);
  }
  return y;
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  if (inner.dim_ != dim_) throw std::invalid_argument("affine map dimensions differ");
  std::vector<int> m(matrix_.size(), 0);
  std::vector<int> off(offset_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      int acc = 0;
      for (int k = 0; k < dim_; ++k) acc += matrix(r, k) * inner.matrix(k, c);
      m[static_cast<std::size_t>(r * dim_ + c)] = acc;
      off[static_cast<std::size_t>(r)] += matrix(r, c) * inner.offset(c);
    }
  }
  return AffineMap(dim_, std::move(m), std::move(off));
}

AffineMap AffineMap::inverse() const {
  // Gauss-Jordan over the rationals; the result must be integral.
  const int n = dim_;
  std::vector<Rational> a(static_cast<std::size_t>(n * 2 * n), Rational(0));
  auto at = [&](int r, int c) -> Rational& { return a[static_cast<std::size_t>(r * 2 * n + c)]; };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) at(r, c) = matrix(r, c);
    at(r, n + r) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && at(pivot, col).numerator() == 0) ++pivot;
    if (pivot == n) throw std::domain_error("affine map is not invertible");
    for (int c = 0; c < 2 * n; ++c) std::swap(at(col, c), at(pivot, c));
    const Rational p = at(col, col);
    for (int c = 0; c < 2 * n; ++c) at(col, c) /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || at(r, col).numerator() == 0) continue;
      const Rational f = at(r, col);
      for (int c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  std::vector<int> inv(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Rational v = at(r, n + c);
      if (v.denominator() != 1) throw std::domain_error("affine map is not unimodular");
      inv[static_cast<std::size_t>(r * n + c)] = static_cast<int>(v.numerator());
    }
  }
  std::vector<int> off(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) off[static_cast<std::size_t>(r)] -= inv[static_cast<std::size_t>(r * n + c)] * offset(c);
  }
  return AffineMap(n, std::move(inv), std::move(off));
}

AffineMap AffineMap::embedded(int dim, std::span<const int> slots) const {
  if (static_cast<int>(slots.size()) != dim_) throw std::invalid_argument("slot count does not match map dimension");
  AffineMap out = identity(dim);
  for (int r = 0; r < dim_; ++r) {
    const int R = slots[static_cast<std::size_t>(r)];
    out.matrix_[static_cast<std::size_t>(R * dim + R)] = 0;
  }
  for (int r = 0; r < dim_; ++r) {
    const int R = slots[static_cast<std::size_t>(r)];
    for (int c = 0; c < dim_; ++c) {
      out.matrix_[static_cast<std::size_t>(R * dim + slots[static_cast<std::size_t>(c)])] = matrix(r, c);
    }
    out.offset_[static_cast<std::size_t>(R)] = offset(r);
  }
  return out;
}

ComplexVector evaluate(const ExactVector& v, const QParameter& q) {
  ComplexVector out(v.dim());
  out.reserve(v.size());
  for (const auto& [x, c] : v.entries()) out.add(x, c.evaluate(q));
  return out;
}

double distance(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimensions differ");
  double sum = 0.0;
  for (const auto& [x, c] : a.entries()) sum += std::norm(c - b.at(x));
  for (const auto& [x, c] : b.entries()) {
    if (!a.entries().contains(x)) sum += std::norm(c);
  }
  return std::sqrt(sum);
}

}  // namespace qe2
