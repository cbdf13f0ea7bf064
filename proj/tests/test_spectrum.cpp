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

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/dispersion.hpp"
#include "core/error.hpp"
#include "core/spectrum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using skin::cplx;
using skin::PlasmaParams;

namespace {

PlasmaParams P(double a, double w) { return PlasmaParams::from_alpha_omega(a, w); }

// Local minima of |lambda| on a grid in the right half-plane, polished by a
// golden-section-free pattern search. Good to about 1e-6.
std::vector<cplx> grid_minima(const PlasmaParams& p, double re_max, double im_max,
                              int n) {
  std::vector<cplx> out;
  auto f = [&](cplx z) { return std::abs(skin::eval_lambda(z, p)); };
  const double hx = re_max / n, hy = 2.0 * im_max / n;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j <= n; ++j) {
      cplx z(i * hx, -im_max + j * hy);
      if (std::abs(z.imag()) < 0.5 * hy) continue;
      const double v = f(z);
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (!di && !dj) continue;
          const cplx w = z + cplx(di * hx, dj * hy);
          if (std::abs(w.imag()) < 1e-12) continue;
          if (f(w) < v) { is_min = false; break; }
        }
      }
      if (!is_min) continue;
      double step = hx;
      for (int it = 0; it < 200 && step > 1e-9; ++it) {
        bool moved = false;
        for (cplx d : {cplx(step, 0), cplx(-step, 0), cplx(0, step), cplx(0, -step)}) {
          if ((z + d).imag() * z.imag() <= 0.0) continue;
          if (f(z + d) < f(z)) { z += d; moved = true; break; }
        }
        if (!moved) step *= 0.5;
      }
      if (f(z) < 1e-5) out.push_back(z);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("zero count by winding") {
  for (auto [a, w] : {std::pair{1.0, 333.0}, {900.0, 1000.0}, {100.0, 333.0},
                      {11.0, 111.0}, {5.0, 1666.0}, {1.0, 1.0}, {0.1, 0.1}}) {
    CAPTURE(a);
    CAPTURE(w);
    const skin::WindingInfo info = skin::winding_count(P(a, w));
    CHECK(info.pairs == 1);
    CHECK(std::abs(info.winding) < 1e-6);
    CHECK(info.min_abs_lambda > 0.0);
    CHECK(skin::classify_domain(P(a, w)) == skin::Domain::d_minus);
  }
  for (auto [a, w] : {std::pair{100.0, 0.6}, {1000.0, 1.5}, {0.5, 0.6}, {100.0, 0.9}}) {
    CAPTURE(a);
    CAPTURE(w);
    CHECK(skin::count_zero_pairs(P(a, w)) == 2);
    CHECK(skin::classify_domain(P(a, w)) == skin::Domain::d_plus);
  }
}

TEST_CASE("zeros against high-precision values") {
  const skin::SpectrumInfo s1 = skin::find_zeros(P(100.0, 333.0));
  REQUIRE(s1.zeros.size() == 1);
  const cplx ref1(2.7372423140103484958, -607.66633319071962375);
  CHECK(std::abs(s1.zeros[0] - ref1) < 1e-12 * std::abs(ref1));
  const skin::SpectrumInfo s2 = skin::find_zeros(P(1.0, 333.0));
  const cplx ref2(27.372441486229676084, -6076.659259046281152);
  CHECK(std::abs(s2.zeros[0] - ref2) < 1e-12 * std::abs(ref2));
  CHECK(s1.classification == skin::ZeroCount::two_zeros);
}

TEST_CASE("zero residuals, signs and derivatives") {
  for (auto [a, w] : {std::pair{11.0, 111.0}, {100.0, 0.6}, {0.5, 0.6}, {2.0, 5.0}}) {
    const PlasmaParams p = P(a, w);
    const skin::SpectrumInfo s = skin::find_zeros(p);
    REQUIRE(s.zeros.size() == s.residuals.size());
    REQUIRE(s.zeros.size() == s.lambda_prime.size());
    for (std::size_t k = 0; k < s.zeros.size(); ++k) {
      CAPTURE(s.zeros[k]);
      CHECK(s.zeros[k].real() > 0.0);
      CHECK(s.residuals[k] < 1e-10);
      CHECK(std::abs(skin::eval_lambda(s.zeros[k], p)) == doctest::Approx(s.residuals[k]).epsilon(1e-3).scale(1e-14));
      CHECK(s.lambda_prime[k] == skin::eval_lambda_prime(s.zeros[k], p));
      if (k > 0) CHECK(std::abs(s.zeros[k - 1]) >= std::abs(s.zeros[k]));
    }
  }
}

TEST_CASE("zeros agree with a grid search") {
  // Moderate |a| keeps all zeros inside a small box.
  for (auto [a, w] : {std::pair{0.5, 0.6}, {1.0, 1.0}}) {
    const PlasmaParams p = P(a, w);
    const skin::SpectrumInfo s = skin::find_zeros(p);
    const std::vector<cplx> ref = grid_minima(p, 4.0, 3.0, 80);
    CAPTURE(a);
    REQUIRE(ref.size() == s.zeros.size());
    for (cplx r : ref) {
      const auto best = std::min_element(
          s.zeros.begin(), s.zeros.end(),
          [r](cplx x, cplx y) { return std::abs(x - r) < std::abs(y - r); });
      CHECK(std::abs(*best - r) < 1e-5);
    }
  }
}

TEST_CASE("boundary of the four-zero domain") {
  const skin::DomainBoundary b =
      skin::trace_domain_boundary(skin::DomainPlane::alpha_omega, -4.0, 4.0, 81);
  CHECK(b.points.size() + b.skipped_mu.size() >= 80);
  const double sqrt3 = std::sqrt(3.0);
  for (std::size_t k = 0; k < b.points.size(); ++k) {
    const auto [alpha, omega] = b.points[k];
    const double mu = b.mu_values[k];
    CAPTURE(mu);
    // The boundary is where lambda+(mu) = 0: z0^3 = i alpha mu^3 Z(mu + i0).
    const cplx z0(1.0, -omega);
    if (std::abs(mu) <= 2.0) {
      const cplx Z(-2.0 * oracle::dawson_series(mu),
                   std::sqrt(oracle::kPi) * std::exp(-mu * mu));
      const cplx lhs = z0 * z0 * z0, rhs = cplx(0.0, alpha) * mu * mu * mu * Z;
      CHECK(std::abs(lhs - rhs) < 1e-8 * std::abs(lhs));
    }
    CHECK(b.residuals[k] < 1e-8);
    CHECK(omega > 0.0);
    CHECK(omega < sqrt3 + 1e-9);
  }
  CHECK_THROWS_AS(skin::trace_domain_boundary(skin::DomainPlane::alpha_omega, 1.0, 0.0, 10),
                  skin::ValidationError);
}

TEST_CASE("boundary in the frequency plane") {
  const skin::DomainBoundary a =
      skin::trace_domain_boundary(skin::DomainPlane::alpha_omega, 0.5, 2.0, 7);
  const skin::DomainBoundary f =
      skin::trace_domain_boundary(skin::DomainPlane::omega1_nu1, 0.5, 2.0, 7);
  REQUIRE(a.points.size() == f.points.size());
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    const auto [alpha, omega] = a.points[k];
    const auto [omega1, nu1] = f.points[k];
    CHECK(omega1 / nu1 == doctest::Approx(omega).epsilon(1e-10));
    CHECK(omega1 / (nu1 * nu1 * nu1) == doctest::Approx(alpha).epsilon(1e-10));
  }
}

TEST_CASE("classification flips across the boundary") {
  const skin::DomainBoundary b =
      skin::trace_domain_boundary(skin::DomainPlane::alpha_omega, -3.0, 3.0, 13);
  for (const auto& [alpha, omega] : b.points) {
    const int lo = skin::count_zero_pairs(P(alpha * 0.995, omega));
    const int hi = skin::count_zero_pairs(P(alpha * 1.005, omega));
    CAPTURE(alpha);
    CAPTURE(omega);
    CHECK(lo + hi == 3);
  }
}
