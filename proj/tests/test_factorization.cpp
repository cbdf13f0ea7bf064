/*
 * This source file is part of the skin project.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <vector>

#include "core/dispersion.hpp"
#include "core/error.hpp"
#include "core/factorization.hpp"
#include "core/spectrum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using skin::cplx;
using skin::FactorizationContext;
using skin::PlasmaParams;

namespace {

const skin::QuadratureConfig kCfg;

PlasmaParams P(double a, double w) { return PlasmaParams::from_alpha_omega(a, w); }

// V(z) by Simpson's rule on a dense uniform grid with an independently
// unwrapped ln G. In the four-zero case the branch drops by 2 pi i at
// tau = 1, which is kept on a node so both pieces stay smooth.
cplx v_simpson(const PlasmaParams& p, cplx z, double T, int index) {
  // 20000 steps per unit keeps tau = 1 on a node (T is a whole number).
  const int n = static_cast<int>(std::lround(T * 20000.0));
  const double h = 1.0 / 20000.0;
  std::vector<cplx> lg(n + 1);
  double phase = 0.0;
  cplx prev(1.0, 0.0);
  for (int k = 0; k <= n; ++k) {
    const skin::BoundaryValues b = skin::eval_boundary(k * h, p);
    const cplx g = b.lambda_plus / b.lambda_minus;
    if (k > 0) phase += std::arg(g / prev);
    prev = g;
    lg[k] = cplx(std::log(std::abs(g)), phase);
  }
  auto simpson = [&](int k0, int k1, double shift) {
    cplx s(0.0, 0.0);
    for (int k = k0; k <= k1; ++k) {
      const double w = (k == k0 || k == k1) ? 1.0 : ((k - k0) % 2 ? 4.0 : 2.0);
      s += w * (lg[k] - cplx(0.0, shift)) / (k * h - z);
    }
    return s * h / 3.0;
  };
  const int one = static_cast<int>(std::lround(1.0 / h));
  const cplx total = index == 0 ? simpson(0, n, 0.0)
                                : simpson(0, one, 0.0) + simpson(one, n, 2.0 * oracle::kPi);
  return total / cplx(0.0, 2.0 * oracle::kPi);
}

}  // namespace

TEST_CASE("G and its logarithm") {
  const PlasmaParams p = P(1.0, 333.0);
  const FactorizationContext ctx(p, kCfg);
  CHECK(ctx.eval_G(0.0) == cplx(1.0, 0.0));
  CHECK(std::abs(std::abs(ctx.eval_G(6.0)) - 1.0) < 1e-12);
  const skin::BoundaryValues b = skin::eval_boundary(1.0, p);
  CHECK(std::abs(ctx.eval_G(1.0) - b.lambda_plus / b.lambda_minus) < 1e-15);
  CHECK(ctx.log_G(0.0) == cplx(0.0, 0.0));
  CHECK(ctx.index() == 0);
  CHECK(ctx.max_phase_step() < oracle::kPi / 2);
  CHECK(std::abs(ctx.log_g_samples().back()) < 1e-12);
}

TEST_CASE("branch of ln G in the four-zero case") {
  const FactorizationContext ctx(P(0.5, 0.6), kCfg);
  CHECK(ctx.index() == 1);
  // Continuous on the grid, total turn 2 pi, and back to zero at infinity
  // once the drop at tau = 1 is applied.
  CHECK(ctx.max_phase_step() < oracle::kPi / 2);
  CHECK(ctx.log_g_samples().back().imag() == doctest::Approx(2.0 * oracle::kPi));
  CHECK(std::abs(ctx.log_G(ctx.cut())) < 1e-9);
  for (double t : {0.3, 0.99, 1.01, 2.5}) {
    CAPTURE(t);
    CHECK(std::abs(std::exp(ctx.log_G(t)) - ctx.eval_G(t)) < 1e-12 * std::abs(ctx.eval_G(t)));
  }
}

TEST_CASE("V decays and is consistent") {
  const FactorizationContext ctx(P(0.5, 0.6), kCfg);
  double max_log = 0.0;
  for (double t : ctx.tau_grid()) max_log = std::max(max_log, std::abs(ctx.log_G(t)));
  CHECK(std::abs(ctx.eval_V({0.0, 1e4})) < 1e-3 * max_log);
  CHECK(std::abs(ctx.eval_V({-1e4, 1.0})) < 1e-3 * max_log);

  skin::QuadratureConfig tight = kCfg;
  tight.rel_tol = 1e-12;
  const FactorizationContext ctx2(P(0.5, 0.6), tight);
  for (cplx z : {cplx(1.0, 0.5), cplx(1.0, -0.5), cplx(-2.0, 0.1)}) {
    CAPTURE(z);
    CHECK(std::abs(ctx.eval_V(z) - ctx2.eval_V(z)) < 1e-10);
  }
}

TEST_CASE("V against a dense Simpson oracle") {
  for (auto [a, w] : {std::pair{100.0, 333.0}, {0.5, 0.6}}) {
    const PlasmaParams p = P(a, w);
    const FactorizationContext ctx(p, kCfg);
    for (cplx z : {cplx(-1.0, 0.0), cplx(0.5, 1.0)}) {
      CAPTURE(a);
      CAPTURE(z);
      CHECK(std::abs(ctx.eval_V(z) - v_simpson(p, z, ctx.cut(), ctx.index())) < 1e-7);
    }
  }
}

TEST_CASE("grid refinement leaves V unchanged") {
  const PlasmaParams p = P(0.5, 0.6);
  const FactorizationContext coarse(p, kCfg, 4096);
  const FactorizationContext fine(p, kCfg, 8192);
  for (cplx z : {cplx(0.2, 0.3), cplx(-1.0, 0.0), cplx(3.0, -2.0)}) {
    CHECK(std::abs(coarse.eval_V(z) - fine.eval_V(z)) < 1e-8);
  }
}

TEST_CASE("X and X1") {
  const FactorizationContext ctx(P(0.5, 0.6), kCfg);
  for (cplx z : {cplx(2.0, 0.5), cplx(2.0, -0.5), cplx(-1.0, 0.0)}) {
    CHECK(std::abs(ctx.eval_X1(z) * (z - 1.0) - ctx.eval_X(z)) < 1e-15 * std::abs(ctx.eval_X(z)));
  }
  // On the cut both are undefined.
  CHECK_THROWS_AS(ctx.eval_X1({2.0, 0.0}), skin::DomainError);
  CHECK(std::abs(ctx.eval_X({-3.0, 0.0})) > 0.0);
  CHECK_THROWS_AS(ctx.eval_X1({1.0, 0.0}), skin::DomainError);
}

TEST_CASE("near-cut arguments are rejected") {
  const FactorizationContext ctx(P(1.0, 333.0), kCfg);
  CHECK_THROWS_AS(ctx.eval_V({0.5, 1e-9}), skin::DomainError);
  CHECK_THROWS_AS(ctx.eval_V({3.0, 0.0}), skin::DomainError);
  CHECK_NOTHROW(ctx.eval_V({-0.5, 0.0}));
}

TEST_CASE("factorization identity") {
  for (auto [a, w] : {std::pair{100.0, 333.0}, {1.0, 1.0}, {0.5, 0.6}, {100.0, 0.9}}) {
    const PlasmaParams p = P(a, w);
    const skin::SpectrumInfo s = skin::find_zeros(p);
    const FactorizationContext ctx(p, kCfg);
    CAPTURE(a);
    CAPTURE(w);
    CHECK(ctx.index() + 1 == static_cast<int>(s.zeros.size()));
    CHECK(skin::check_factorization({1.0, 2.0}, ctx, s) < 1e-6);
    CHECK(skin::check_factorization({-1.0, -2.0}, ctx, s) < 1e-6);
    for (cplx z : oracle::off_axis_points(5, 0.1, 3.0, 5)) {
      CHECK(skin::check_factorization(z, ctx, s) < 1e-6);
    }
  }
  const PlasmaParams p = P(1.0, 1.0);
  const FactorizationContext ctx(p, kCfg);
  CHECK_THROWS_AS(skin::check_factorization({1.0, 0.0}, ctx, skin::find_zeros(p)),
                  skin::DomainError);
  CHECK_THROWS_AS(skin::check_factorization({1.0, 1.0}, ctx, skin::find_zeros(P(0.5, 0.6))),
                  skin::ValidationError);
}

TEST_CASE("zero from the factorization") {
  for (auto [a, w] : {std::pair{100.0, 333.0}, {1.0, 1.0}, {11.0, 111.0}}) {
    const PlasmaParams p = P(a, w);
    const skin::SpectrumInfo s = skin::find_zeros(p);
    const FactorizationContext ctx(p, kCfg);
    const cplx e1 = skin::zero_from_factorization(ctx, {0.0, 2.0});
    const cplx e2 = skin::zero_from_factorization(ctx, {1.0, 1.0});
    CHECK(std::abs(e1 - s.zeros[0]) < 1e-6 * std::abs(s.zeros[0]));
    CHECK(std::abs(e1 - e2) < 1e-6 * std::abs(e1));
    CHECK(e1.real() > 0.0);
  }
  const FactorizationContext plus(P(0.5, 0.6), kCfg);
  CHECK_THROWS_AS(skin::zero_from_factorization(plus, {0.0, 2.0}), skin::DomainError);
}
