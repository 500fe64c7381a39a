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
#include "qe2/bosonization.hpp"

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

TEST_SUITE("bosonization") {
  TEST_CASE("without the dual factor Wtilde is the shift p' -> p' + p + j") {
    WtildeHandle h;
    h.variant = BosonVariant::dual_identity;
    CHECK(distance(apply_Wtilde(e({0, 0, 0, 1, 0, 0}), false, h, evaluator()), e({0, 0, 0, 1, 0, 0})) == 0.0);
    for (const WtildeRoute route : {WtildeRoute::definition, WtildeRoute::conjugated, WtildeRoute::rewritten}) {
      h.route = route;
      CHECK(distance(apply_Wtilde(e({2, -1, 3, 1, 4, -2}), false, h, evaluator()), e({2, -1, 3, 6, 4, -2})) == 0.0);
    }
  }

  TEST_CASE("Wtilde is unitary and the three factorisations agree") {
    for (const auto& v : random_basis(21, 6, 6, 2)) {
      WtildeHandle d, c, r;
      c.route = WtildeRoute::conjugated;
      r.route = WtildeRoute::rewritten;
      const ComplexVector w = apply_Wtilde(v, false, d, evaluator());
      CHECK(std::abs(w.norm() - 1.0) < 1e-8);
      CHECK(distance(apply_Wtilde(w, true, d, evaluator()), v) < 1e-8);
      CHECK(distance(apply_Wtilde(v, false, c, evaluator()), w) < 1e-10);
      CHECK(distance(apply_Wtilde(v, false, r, evaluator()), w) < 1e-10);
    }
  }

  TEST_CASE("ordinary pentagon: stated examples") {
    const WtildeHandle h;
    const ComplexVector e0 = ComplexVector::basis(BasisIndex(9));
    const ResidualReport r = ordinary_pentagon_residual(e0, h, evaluator());
    CHECK(r.failure.empty());
    CHECK(r.residual < 1e-7);
    WtildeHandle circle;
    circle.variant = BosonVariant::circle_only;
    WtildeHandle semi;
    semi.variant = BosonVariant::dual_identity;
    for (const auto& v : random_basis(2, 9, 5, 3)) {
      CHECK(ordinary_pentagon_residual(v, circle, evaluator()).residual < 1e-12);
      CHECK(ordinary_pentagon_residual(v, semi, evaluator()).residual < 1e-12);
    }
    CHECK(ordinary_pentagon_residual(ComplexVector(9), h, evaluator()).residual == 0.0);
  }

  TEST_CASE("boson relations hold exactly and the control fails") {
    const QParameter q(cd(0.3, 0.4));
    const auto registry = boson_relation_registry();
    bool saw_control = false;
    for (const auto& rec : registry) {
      const ExactCheck c = check_exact(rec, q);
      INFO(rec.name);
      CHECK(c.passed);
      if (!rec.expect_equal) {
        saw_control = true;
        CHECK_FALSE(c.equal);
      }
    }
    CHECK(saw_control);
    for (const auto& r : boson_relations_check(q)) CHECK(r.residual == 0.0);
    const BosonCatalog b;
    CHECK(b.b_prime == b.b_prime_closed);
    CHECK(b.u * b.b_prime == ExactScalar::zeta_pow(1) * (b.b_prime * b.u));
  }

  TEST_CASE("generator spectra and the projection onto the circle") {
    CHECK(boson_spectrum_check(3).residual == 0.0);
    for (const auto& r : projection_check()) CHECK(r.residual == 0.0);
    const GeneratorCatalog perturbed(Perturbation{"btilde", Rational(1001, 1000)});
    CHECK(boson_spectrum_check(2, perturbed).residual == 1.0);
  }

  TEST_CASE("comultiplication of u and N'") {
    const WtildeHandle h;
    for (const auto& v : random_basis(13, 6, 6, 3)) {
      CHECK(boson_comult_check(BosonGenerator::u, v, h, evaluator()).residual < 1e-8);
      CHECK(boson_comult_check(BosonGenerator::n_prime, v, h, evaluator()).residual < 1e-8);
    }
  }

  TEST_CASE("comultiplication of b' needs the u* twist on the second factor") {
    const WtildeHandle h;
    for (const auto& v : random_basis(19, 6, 6, 3)) {
      for (const BosonGenerator g : {BosonGenerator::b_prime, BosonGenerator::b_prime_adjoint}) {
        const ResidualReport r = boson_comult_check(g, v, h, evaluator());
        CHECK(r.aux_value("corrected") < 1e-7);
        CHECK(r.residual > 1e-2);
      }
    }
  }
}
