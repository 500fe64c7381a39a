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


// Acceptance run: one PASS/FAIL line per criterion, followed by the numbers
// behind it. Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qe2/bosonization.hpp"
#include "qe2/dual_group.hpp"
#include "qe2/qexp.hpp"
#include "qe2/relations.hpp"

using namespace qe2;
using cd = std::complex<double>;

namespace {

using Clock = std::chrono::steady_clock;

const cd kQ{0.3, 0.4};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<ComplexVector> seeded_basis(std::uint64_t seed, int dim, int count, int window) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(-window, window);
  std::vector<ComplexVector> out;
  for (int k = 0; k < count; ++k) {
    BasisIndex x(dim);
    for (int i = 0; i < dim; ++i) x[i] = c(rng);
    out.push_back(ComplexVector::basis(x));
  }
  return out;
}

QexpParams params(int samples = 4096) {
  QexpParams p;
  p.q = kQ;
  p.fourier_samples = samples;
  return p;
}

// 1. Exact relation suite at two values of q.
void exact_relations(Outcome& o) {
  const auto t0 = Clock::now();
  const auto registry = relation_registry();
  o.pass = registry.size() >= 15;
  int failed = 0;
  for (const cd q : {cd(0.3, 0.4), cd(0.1, -0.7)}) {
    for (const auto& rec : registry) {
      const bool ok = !rec.context.empty() && check_exact(rec, QParameter(q)).passed;
      if (!ok) {
        ++failed;
        o.detail << " failed:" << rec.name << "@" << q;
      }
    }
  }
  const double t = seconds_since(t0);
  o.pass = o.pass && failed == 0 && t < 5.0;
  o.detail << " records=" << registry.size() << " failures=" << failed << " runtime=" << t << "s";
}

// 2. Composed Xhat against its stated action on window 5.
void xhat_built(Outcome& o) {
  const GeneratorCatalog& c = default_catalog();
  o.pass = equal_exact(c.xhat_built(), c.get("Xhat"), 5);
  o.detail << " window=5 equal=" << o.pass;
}

// 3. Scalar properties of F_q.
void fq_properties(Outcome& o) {
  const QexpParams p = params();
  const double r = std::abs(kQ);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> n(-10, 10);
  std::uniform_real_distribution<double> th(-std::numbers::pi, std::numbers::pi);
  double unimod = 0.0, conj_sym = 0.0, positive = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const cd l = std::pow(r, n(rng)) * std::polar(1.0, th(rng));
    const cd f = fq_scalar(l, p);
    unimod = std::max(unimod, std::abs(std::abs(f) - 1.0));
    conj_sym = std::max(conj_sym, std::abs(fq_scalar(std::conj(l), p) - std::conj(f)));
  }
  for (int m = -10; m <= 10; ++m) positive = std::max(positive, std::abs(fq_scalar(std::pow(r, m), p) - 1.0));
  const bool minus_one = fq_scalar(-1.0, p) == cd(-1.0, 0.0);
  o.pass = unimod < 1e-12 && conj_sym < 1e-12 && positive < 1e-12 && minus_one;
  o.detail << " unimodularity=" << unimod << " conjugation=" << conj_sym << " positive=" << positive
           << " F(-1)=-1:" << minus_one;
}

// 4. Symbol route against the dense DFT oracle.
void oracle_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  const QexpParams p = params();
  SymbolCache cache(p);
  double worst = 0.0, unitarity = 0.0;
  int fibers = 0;
  for (int c3 = -4; c3 <= 2; ++c3) {
    for (const auto& [c1, c2] : {std::pair{0, 0}, std::pair{2, -1}, std::pair{-3, 1}}) {
      const FiberKey key{c1, c2, c3};
      const FiberDescriptor fd{key, {0}};
      ++fibers;
      for (const Direction dir : {Direction::forward, Direction::adjoint}) {
        const ScalarFunction fn = dir == Direction::forward
                                      ? ScalarFunction{}
                                      : ScalarFunction([&](cd l) { return std::conj(fq_scalar(l, p)); });
        const DenseFiberMatrix m = dense_oracle_fq(32, fd, p, fn);
        for (const int t0c : {-3, 0, 4}) {
          const ComplexVector e = ComplexVector::basis(FiberDescriptor::point(key, t0c));
          const ComplexVector y = apply_fq_shift_class(e, dir, cache);
          double d = 0.0;
          for (int t = -32; t < 32; ++t) d += std::norm(y.at(FiberDescriptor::point(key, t)) - m.at(t, t0c));
          worst = std::max(worst, std::sqrt(d));
          unitarity = std::max(unitarity, std::abs(y.norm() - 1.0));
          const Direction back = dir == Direction::forward ? Direction::adjoint : Direction::forward;
          unitarity = std::max(unitarity, distance(apply_fq_shift_class(y, back, cache), e));
        }
      }
    }
  }
  const double t = seconds_since(t0);
  o.pass = worst < 1e-8 && unitarity < 1e-8 && t < 30.0;
  o.detail << " fibers=" << fibers << " max_l2_difference=" << worst << " unitarity=" << unitarity
           << " runtime=" << t << "s";
}

// 5. Braided pentagon on 20 seeded vectors, and its stability under doubling M.
void braided_pentagon(Outcome& o) {
  const auto t0 = Clock::now();
  const Evaluator e1(params(4096)), e2(params(8192));
  double worst = 0.0, worst2 = 0.0;
  int grew = 0;
  for (const auto& v : seeded_basis(5, 6, 20, 3)) {
    const ResidualReport a = braided_pentagon_residual(v, DualUnitaryHandle{}, e1);
    const ResidualReport b = braided_pentagon_residual(v, DualUnitaryHandle{}, e2);
    if (!a.failure.empty() || !b.failure.empty()) {
      o.detail << " failure:" << a.failure << b.failure;
      o.pass = false;
    }
    worst = std::max(worst, a.residual);
    worst2 = std::max(worst2, b.residual);
    if (b.residual > std::max(a.residual, 1e-10)) ++grew;
  }
  const double t = seconds_since(t0);
  o.pass = o.pass && worst < 1e-7 && grew == 0 && t < 120.0;
  o.detail << " max_residual(M)=" << worst << " max_residual(2M)=" << worst2 << " increased=" << grew
           << " runtime=" << t << "s";
}

// 6. Comultiplication of N, btilde and btilde*.
void comultiplication(Outcome& o) {
  const Evaluator eval(params());
  double n = 0.0, b = 0.0, bs = 0.0;
  for (const auto& v : seeded_basis(6, 4, 10, 3)) {
    n = std::max(n, comult_check(CoproductGenerator::N, v, DualUnitaryHandle{}, eval).residual);
    b = std::max(b, comult_check(CoproductGenerator::btilde, v, DualUnitaryHandle{}, eval).residual);
    bs = std::max(bs, comult_check(CoproductGenerator::btilde_adjoint, v, DualUnitaryHandle{}, eval).residual);
  }
  o.pass = n < 1e-8 && b < 1e-7 && bs < 1e-7;
  o.detail << " N=" << n << " btilde=" << b << " btilde*=" << bs;
}

// 7. Slice identity at lambda in {0, 1, q}.
void slice_identity(Outcome& o) {
  const Evaluator eval(params());
  const auto vecs = seeded_basis(7, 6, 10, 3);
  double yhat = 0.0;
  for (const cd lambda : {cd(0.0, 0.0), cd(1.0, 0.0), kQ}) {
    double worst = 0.0, p_middle = 0.0;
    for (const auto& v : vecs) {
      const ResidualReport r = slice_identity_residual(lambda, v, DualUnitaryHandle{}, eval);
      worst = std::max(worst, r.failure.empty() ? r.residual : INFINITY);
      p_middle = std::max(p_middle, r.aux_value("P-middle"));
      if (lambda == cd(0.0, 0.0)) yhat = std::max(yhat, r.aux_value("Yhat13"));
    }
    o.pass = o.pass && worst < 1e-7;
    o.detail << " lambda=" << lambda << ":" << worst << " (middle leg P: " << p_middle << ")";
  }
  o.pass = o.pass && yhat < 1e-8;
  o.detail << " lambda=0 vs Yhat13:" << yhat;
}

// 8. Bosonization: relations, ordinary pentagon, comultiplication.
void bosonization(Outcome& o) {
  const auto t0 = Clock::now();
  const Evaluator eval(params());
  const QParameter q(kQ);
  int rel_failed = 0;
  for (const auto& r : boson_relations_check(q)) rel_failed += r.residual != 0.0;
  rel_failed += boson_spectrum_check(3).residual != 0.0;
  for (const auto& r : projection_check()) rel_failed += r.residual != 0.0;

  double pent = 0.0;
  for (const auto& v : seeded_basis(8, 9, 10, 3)) {
    const ResidualReport r = ordinary_pentagon_residual(v, WtildeHandle{}, eval);
    pent = std::max(pent, r.failure.empty() ? r.residual : INFINITY);
  }
  double u = 0.0, n = 0.0, b = 0.0, bs = 0.0, b_corr = 0.0, bs_corr = 0.0;
  for (const auto& v : seeded_basis(9, 6, 10, 3)) {
    u = std::max(u, boson_comult_check(BosonGenerator::u, v, WtildeHandle{}, eval).residual);
    n = std::max(n, boson_comult_check(BosonGenerator::n_prime, v, WtildeHandle{}, eval).residual);
    const ResidualReport rb = boson_comult_check(BosonGenerator::b_prime, v, WtildeHandle{}, eval);
    const ResidualReport rs = boson_comult_check(BosonGenerator::b_prime_adjoint, v, WtildeHandle{}, eval);
    b = std::max(b, rb.residual);
    bs = std::max(bs, rs.residual);
    b_corr = std::max(b_corr, rb.aux_value("corrected"));
    bs_corr = std::max(bs_corr, rs.aux_value("corrected"));
  }
  const double t = seconds_since(t0);
  o.pass = rel_failed == 0 && pent < 1e-7 && u < 1e-7 && n < 1e-7 && b < 1e-7 && t < 300.0;
  o.detail << " relation_failures=" << rel_failed << " pentagon=" << pent << " u=" << u << " N'=" << n
           << " b'=" << b << " b'*=" << bs << " (with b'(x)u* / b'*(x)u: " << b_corr << ", " << bs_corr
           << ") runtime=" << t << "s";
}

// 9. Every single-generator perturbation is caught by some suite.
void negative_controls(Outcome& o) {
  const QParameter q(kQ);
  const Evaluator eval(params());
  const auto e4 = seeded_basis(10, 4, 2, 2);
  int caught = 0, total = 0;
  for (const auto& name : default_catalog().names()) {
    ++total;
    const GeneratorCatalog c(Perturbation{name, Rational(1001, 1000)});
    bool hit = false;
    for (const auto& r : relation_registry(c)) hit = hit || !check_exact(r, q).passed;
    for (const auto& r : boson_relation_registry(c)) hit = hit || !check_exact(r, q).passed;
    hit = hit || boson_spectrum_check(2, c).residual != 0.0;
    if (!hit) {
      DualUnitaryHandle h;
      h.catalog = &c;
      for (const auto& v : e4) {
        for (const auto g : {CoproductGenerator::N, CoproductGenerator::btilde, CoproductGenerator::btilde_adjoint}) {
          hit = hit || !comult_check(g, v, h, eval).passed(1e-7);
        }
      }
    }
    if (hit) {
      ++caught;
    } else {
      o.detail << " missed:" << name;
    }
  }
  o.pass = caught == total;
  o.detail << " perturbed=" << total << " caught=" << caught;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"exact relation suite at two values of q", exact_relations},
      {"composed Xhat equals the stated action", xhat_built},
      {"F_q scalar properties", fq_properties},
      {"functional calculus matches the dense oracle", oracle_equivalence},
      {"braided pentagon on seeded vectors", braided_pentagon},
      {"comultiplication of N, btilde, btilde*", comultiplication},
      {"slice identity at lambda in {0, 1, q}", slice_identity},
      {"bosonization relations, pentagon, comultiplication", bosonization},
      {"single-generator perturbations are detected", negative_controls},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    failures += !o.pass;
    std::printf("AC%zu %s %s\n     %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
