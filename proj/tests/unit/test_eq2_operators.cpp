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


#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "doctest.h"
#include "qe2/generators.hpp"
#include "qe2/op_expr.hpp"
#include "qe2/relations.hpp"

using namespace qe2;
using cd = std::complex<double>;

namespace {

const cd kQ{0.3, 0.4};
const QParameter kQP(kQ);

// Oracles: the stated basis actions, written directly in floating point.
struct Image {
  cd coeff;
  BasisIndex target;
};
using Action = std::function<Image(const BasisIndex&)>;

cd qp(double m) { return std::pow(std::sqrt(kQ), 2.0 * m); }
const cd kZeta = kQ / std::conj(kQ);
cd zeta(double m) { return std::pow(kZeta, m); }

const std::map<std::string, Action>& oracles() {
  static const std::map<std::string, Action> o{
      {"v", [](const BasisIndex& x) { return Image{1.0, {x[0] - 1, x[1]}}; }},
      {"n", [](const BasisIndex& x) { return Image{qp(x[0]), {x[0], x[1] + 1}}; }},
      {"n^-1", [](const BasisIndex& x) { return Image{qp(-x[0]), {x[0], x[1] - 1}}; }},
      {"N", [](const BasisIndex& x) { return Image{double(x[0] + x[1]), x}; }},
      {"b", [](const BasisIndex& x) { return Image{qp((x[1] - x[0]) / 2.0), {x[0] - 1, x[1] - 1}}; }},
      {"P", [](const BasisIndex& x) { return Image{zeta(-x[1]), x}; }},
      {"btilde", [](const BasisIndex& x) { return Image{qp(x[1]), {x[0] - 1, x[1] - 1}}; }},
      {"Xhat",
       [](const BasisIndex& x) {
         return Image{zeta(-x[1] - 1) * qp(x[0] + x[3] + 1), {x[0] + 1, x[1] + 1, x[2] - 1, x[3] - 1}};
       }},
      {"Yhat", [](const BasisIndex& x) { return Image{1.0, {x[0] - x[2] - x[3], x[1], x[2], x[3]}}; }},
      {"Zhat", [](const BasisIndex& x) { return Image{zeta(double(x[1]) * x[3]), x}; }},
      {"Z", [](const BasisIndex& x) { return Image{zeta(-double(x[1]) * x[3]), x}; }},
      {"W", [](const BasisIndex& x) { return Image{1.0, {x[0], x[1] + x[0]}}; }},
      {"U", [](const BasisIndex& x) { return Image{1.0, {x[0], x[1], x[2] + x[1]}}; }},
      {"Vhat'", [](const BasisIndex& x) { return Image{zeta(-double(x[0]) * x[2]), x}; }},
      {"P'", [](const BasisIndex& x) { return Image{zeta(-x[0]), x}; }},
      {"z", [](const BasisIndex& x) { return Image{1.0, {x[0] + 1}}; }},
  };
  return o;
}

cd inner(const ComplexVector& a, const ComplexVector& b) {
  cd s = 0.0;
  for (const auto& [x, c] : a.entries()) s += std::conj(c) * b.at(x);
  return s;
}

bool maps_basis(const OpExpr& op, const BasisIndex& x, cd coeff, const BasisIndex& target) {
  const ComplexVector img = apply(op, ComplexVector::basis(x), kQP);
  if (coeff == 0.0) return img.empty();
  return img.size() == 1 && std::abs(img.at(target) - coeff) < 1e-12 * std::max(1.0, std::abs(coeff));
}

}  // namespace

TEST_SUITE("eq2_operators") {
  TEST_CASE("catalog actions match the stated basis actions") {
    const GeneratorCatalog& c = default_catalog();
    for (const auto& [name, action] : oracles()) {
      const OpExpr& op = c.get(name);
      for (const auto& x : lattice_box(op.dim(), op.dim() > 2 ? 2 : 4)) {
        const Image want = action(x);
        INFO(name << " at " << x.to_string());
        CHECK(maps_basis(op, x, want.coeff, want.target));
      }
    }
  }

  TEST_CASE("apply: stated examples") {
    const GeneratorCatalog& c = default_catalog();
    const ExactVector e00 = ExactVector::basis(BasisIndex{0, 0});
    CHECK(apply(c.get("v"), e00).at(BasisIndex{-1, 0}) == ExactScalar(1));
    CHECK(apply(c.get("N"), ExactVector::basis(BasisIndex{2, 3})).at(BasisIndex{2, 3}) == ExactScalar(5));
    CHECK(apply(c.get("b"), e00).at(BasisIndex{-1, -1}) == ExactScalar(1));
    const ExactVector w = ExactVector::basis(BasisIndex{4, -2}, ExactScalar::zeta_pow(3));
    const ExactVector iw = apply(OpExpr::identity(2), w);
    CHECK(iw.size() == 1);
    CHECK(iw.at(BasisIndex{4, -2}) == ExactScalar::zeta_pow(3));
  }

  TEST_CASE("compose: stated examples") {
    const GeneratorCatalog& c = default_catalog();
    const OpExpr& v = c.get("v");
    const OpExpr& n = c.get("n");
    CHECK(v * c.get("v*") == OpExpr::identity(2));
    CHECK(c.get("n^-1") * n == OpExpr::identity(2));
    const ExactVector e00 = ExactVector::basis(BasisIndex{0, 0});
    CHECK(apply(v * n, e00).at(BasisIndex{-1, 1}) == ExactScalar(1));
    CHECK(apply(n * v, e00).at(BasisIndex{-1, 1}) == ExactScalar::q_pow(-1));
    CHECK(v * n * c.get("v*") == ExactScalar::q_pow(1) * n);
  }

  TEST_CASE("adjoint: stated examples") {
    const GeneratorCatalog& c = default_catalog();
    CHECK(apply(adjoint(c.get("v")), ExactVector::basis(BasisIndex{0, 0})).at(BasisIndex{1, 0}) == ExactScalar(1));
    CHECK(adjoint(c.get("N")) == c.get("N"));
    CHECK(adjoint(adjoint(c.get("b"))) == c.get("b"));
  }

  TEST_CASE("embed_leg: stated examples") {
    const GeneratorCatalog& c = default_catalog();
    const int LL[] = {2, 2};
    const int one[] = {1};
    const OpExpr v1 = embed_leg(c.get("v"), one, LL);
    CHECK(maps_basis(v1, BasisIndex{0, 0, 5, 7}, 1.0, BasisIndex{-1, 0, 5, 7}));
    const int HHHH[] = {1, 1, 1, 1};
    const int l13[] = {1, 3}, l14[] = {1, 4};
    CHECK(embed_leg(c.get("What"), l13, HHHH) * embed_leg(c.get("What"), l14, HHHH) == c.get("Yhat"));
    CHECK(embed_leg(OpExpr::identity(2), one, LL) == OpExpr::identity(4));
  }

  TEST_CASE("conjugate: stated examples") {
    const GeneratorCatalog& c = default_catalog();
    const OpExpr& v = c.get("v");
    const OpExpr& n = c.get("n");
    const OpExpr& ni = c.get("n^-1");
    const OpExpr& P = c.get("P");
    CHECK(conjugate(c.get("Zhat"), tensor(v * n, ni * v * P)) == tensor(P * v * n, ni * v));
    CHECK(conjugate(c.get("Yhat"), tensor(P * v * n, ni * v)) ==
          tensor(P * c.get("v*") * n, ExactScalar::q_pow(2) * c.get("q^(N/2)") * c.get("b")));
    CHECK(conjugate(OpExpr::identity(2), c.get("b")) == c.get("b"));
  }

  TEST_CASE("equal_exact: stated examples") {
    const GeneratorCatalog& c = default_catalog();
    CHECK(equal_exact(c.get("v") * c.get("v*"), OpExpr::identity(2), 1));
    CHECK(equal_exact(c.get("q^N") * c.get("b^-1"), ExactScalar::q_pow(2) * c.get("b^-1") * c.get("q^N"), 3));
    CHECK_FALSE(equal_exact(c.get("v"), c.get("v*")));
    CHECK(first_difference(c.get("v"), c.get("v*"), 1).has_value());
  }

  TEST_CASE("product and adjoint agree with the basis-vector oracle") {
    const GeneratorCatalog& c = default_catalog();
    const std::vector<std::string> names{"v", "n", "n^-1", "N", "b", "b^-1", "P", "btilde", "q^(N/2)", "v*"};
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      OpExpr a = c.get(names[pick(rng)]) + c.get(names[pick(rng)]) * c.get(names[pick(rng)]);
      OpExpr b = c.get(names[pick(rng)]) * c.get(names[pick(rng)]);
      for (const auto& x : lattice_box(2, 2)) {
        const ComplexVector ex = ComplexVector::basis(x);
        const ComplexVector lhs = apply(a * b, ex, kQP);
        const ComplexVector rhs = apply(a, apply(b, ex, kQP), kQP);
        CHECK(distance(lhs, rhs) < 1e-10 * std::max(1.0, rhs.norm()));
        for (const auto& y : lattice_box(2, 2)) {
          const ComplexVector ey = ComplexVector::basis(y);
          const cd l = inner(ey, apply(a, ex, kQP));
          const cd r = std::conj(inner(ex, apply(adjoint(a), ey, kQP)));
          CHECK(std::abs(l - r) < 1e-10 * std::max(1.0, std::abs(l)));
        }
      }
    }
  }

  TEST_CASE("generator: stated examples") {
    const GeneratorCatalog& c = default_catalog();
    CHECK(maps_basis(c.get("Xhat"), BasisIndex{0, 0, 0, 0}, kQ / kZeta, BasisIndex{1, 1, -1, -1}));
    CHECK(maps_basis(c.get("Zhat"), BasisIndex{0, 1, 0, 1}, kZeta, BasisIndex{0, 1, 0, 1}));
    CHECK(c.get("N") - c.get("Ntilde") == ExactScalar(-2) * OpExpr::identity(2));
    CHECK(c.xhat_built() == c.get("Xhat"));
    CHECK(c.btilde_built() == c.get("btilde"));
    CHECK_THROWS_AS(c.get("no-such-operator"), std::out_of_range);
  }

  TEST_CASE("embedding_j: stated examples") {
    const GeneratorCatalog& c = default_catalog();
    CHECK(embedding_j(2, c.get("N")) == tensor(c.get("identity_L"), c.get("N")));
    CHECK(embedding_j(2, c.get("btilde")) == tensor(c.get("P"), c.get("btilde")));
    CHECK(embedding_j(1, c.get("identity_L")) == OpExpr::identity(4));
  }

  TEST_CASE("relation registry passes at two values of q") {
    const auto registry = relation_registry();
    CHECK(registry.size() >= 15);
    for (const cd q : {cd(0.3, 0.4), cd(0.1, -0.7)}) {
      for (const auto& rec : registry) {
        INFO(rec.name << " at q = " << q);
        CHECK(check_exact(rec, QParameter(q)).passed);
      }
    }
    auto has = [&](const std::string& name) {
      return std::any_of(registry.begin(), registry.end(), [&](const auto& r) { return r.name == name; });
    };
    CHECK(has("Zhat-conj-vn"));
    CHECK(has("Nb-comm"));
    CHECK(has("identity-refl"));
  }

  TEST_CASE("a perturbed generator breaks its relations") {
    const GeneratorCatalog perturbed(Perturbation{"b", Rational(1001, 1000)});
    int failures = 0;
    for (const auto& rec : relation_registry(perturbed)) failures += !check_exact(rec, kQP).passed;
    CHECK(failures > 0);
  }
}
