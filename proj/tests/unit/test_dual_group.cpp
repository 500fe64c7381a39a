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


#include <complex>
#include <random>

#include "doctest.h"
#include "qe2/dual_group.hpp"

using namespace qe2;
using cd = std::complex<double>;

namespace {

const Evaluator& evaluator() {
  static const Evaluator eval{QexpParams{}};
  return eval;
}

ComplexVector e(std::initializer_list<int> x) { return ComplexVector::basis(BasisIndex(x)); }

std::vector<ComplexVector> random_basis(std::uint32_t seed, int dim, int count, int window) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> c(-window, window);
  std::vector<ComplexVector> out;
  for (int k = 0; k < count; ++k) {
    BasisIndex x(dim);
    for (int i = 0; i < dim; ++i) x[i] = c(rng);
    out.push_back(ComplexVector::basis(x));
  }
  return out;
}

}  // namespace

TEST_SUITE("dual_group") {
  TEST_CASE("apply_Fhat: unitarity on the origin and on random vectors") {
    const DualUnitaryHandle h;
    const ComplexVector e0 = e({0, 0, 0, 0});
    const ComplexVector y = apply_Fhat(e0, false, h, evaluator());
    CHECK(std::abs(y.norm() - 1.0) < 1e-8);
    CHECK(distance(apply_Fhat(y, true, h, evaluator()), e0) < 1e-8);
    for (const auto& v : random_basis(4, 4, 10, 3)) {
      const ComplexVector w = apply_Fhat(v, false, h, evaluator());
      CHECK(std::abs(w.norm() - 1.0) < 1e-8);
      CHECK(distance(apply_Fhat(w, true, h, evaluator()), v) < 1e-8);
    }
  }

  TEST_CASE("apply_Fhat with lambda = 0 is Yhat") {
    DualUnitaryHandle h;
    h.lambda = 0.0;
    const ComplexVector y = apply_Fhat(e({0, 0, 1, 1}), false, h, evaluator());
    CHECK(distance(y, e({-2, 0, 1, 1})) < 1e-14);
  }

  TEST_CASE("braided pentagon") {
    const DualUnitaryHandle h;
    const ResidualReport r = braided_pentagon_residual(e({0, 0, 0, 0, 0, 0}), h, evaluator());
    CHECK(r.failure.empty());
    CHECK(r.residual < 1e-8);
    DualUnitaryHandle trivial;
    trivial.variant = UnitaryVariant::identity;
    CHECK(braided_pentagon_residual(e({1, -2, 0, 3, -1, 2}), trivial, evaluator()).residual == 0.0);
    CHECK(braided_pentagon_residual(ComplexVector(6), h, evaluator()).residual == 0.0);
  }

  TEST_CASE("comultiplication: stated examples") {
    const DualUnitaryHandle h;
    CHECK(comult_check(CoproductGenerator::N, e({0, 0, 1, 2}), h, evaluator()).residual < 1e-10);
    CHECK(comult_check(CoproductGenerator::btilde, e({0, 0, 0, 0}), h, evaluator()).residual < 1e-7);
    CHECK(comult_check(CoproductGenerator::btilde_adjoint, e({0, 0, 0, 0}), h, evaluator()).residual < 1e-7);
    DualUnitaryHandle trivial;
    trivial.variant = UnitaryVariant::identity;
    CHECK(comult_check(CoproductGenerator::N, e({0, 0, 1, 2}), trivial, evaluator()).residual > 1.0);
  }

  TEST_CASE("comultiplication on random vectors") {
    const DualUnitaryHandle h;
    for (const auto& v : random_basis(8, 4, 6, 3)) {
      CHECK(comult_check(CoproductGenerator::N, v, h, evaluator()).residual < 1e-8);
      CHECK(comult_check(CoproductGenerator::btilde, v, h, evaluator()).residual < 1e-7);
      CHECK(comult_check(CoproductGenerator::btilde_adjoint, v, h, evaluator()).residual < 1e-7);
    }
  }

  TEST_CASE("slice identity: stated examples") {
    const DualUnitaryHandle h;
    const ComplexVector e0 = e({0, 0, 0, 0, 0, 0});
    const ResidualReport r0 = slice_identity_residual(0.0, e0, h, evaluator());
    CHECK(r0.residual < 1e-8);
    CHECK(r0.aux_value("Yhat13") < 1e-8);
    CHECK(slice_identity_residual(1.0, e0, h, evaluator()).residual < 1e-7);
    CHECK(slice_identity_residual(1.0, ComplexVector(6), h, evaluator()).residual == 0.0);
  }

  TEST_CASE("slice identity: middle leg P* only matches where the middle j vanishes") {
    const DualUnitaryHandle h;
    const ComplexVector on = e({1, -2, 3, 0, 2, 1});
    const ComplexVector off = e({1, -2, 3, 1, 2, 1});
    for (const cd lambda : {cd(1.0, 0.0), cd(0.3, 0.4)}) {
      const ResidualReport a = slice_identity_residual(lambda, on, h, evaluator());
      const ResidualReport b = slice_identity_residual(lambda, off, h, evaluator());
      CHECK(a.residual < 1e-7);
      CHECK(b.residual > 1e-2);
      CHECK(b.aux_value("P-middle") < 1e-7);
      CHECK(b.aux_value("braided") < 1e-7);
      CHECK(b.aux_value("mixed-braiding") < 1e-7);
    }
  }
}
