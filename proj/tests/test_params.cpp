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
#include <limits>

#include "core/error.hpp"
#include "core/params.hpp"
#include "doctest.h"

using skin::cplx;
using skin::PlasmaParams;

TEST_CASE("derived quantities z0 and a") {
  const PlasmaParams p = PlasmaParams::from_alpha_omega(100.0, 333.0);
  CHECK(p.alpha() == 100.0);
  CHECK(p.omega() == 333.0);
  CHECK(p.z0() == cplx(1.0, -333.0));
  const cplx z0 = p.z0();
  const cplx expected = cplx(0.0, -100.0) / (z0 * z0 * z0);
  CHECK(std::abs(p.a() - expected) <= 1e-15 * std::abs(expected));

  // Zero frequency: z0 = 1, a = -i alpha.
  const PlasmaParams q = PlasmaParams::from_alpha_omega(2.0, 0.0);
  CHECK(q.a() == cplx(0.0, -2.0));
}

TEST_CASE("parameter validation") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(PlasmaParams::from_alpha_omega(0.0, 1.0), skin::ValidationError);
  CHECK_THROWS_AS(PlasmaParams::from_alpha_omega(-1.0, 1.0), skin::ValidationError);
  CHECK_THROWS_AS(PlasmaParams::from_alpha_omega(nan, 1.0), skin::ValidationError);
  CHECK_THROWS_AS(PlasmaParams::from_alpha_omega(1.0, -0.1), skin::ValidationError);
  CHECK_THROWS_AS(PlasmaParams::from_alpha_omega(1.0, inf), skin::ValidationError);
  try {
    PlasmaParams::from_alpha_omega(-1.0, 1.0);
  } catch (const skin::Error& e) {
    CHECK(e.kind() == skin::ErrorKind::validation);
  }
}

TEST_CASE("frequency parameterization round trip") {
  // alpha = omega1 / nu1^3, Omega = omega1 / nu1.
  const PlasmaParams p = skin::params_from_frequencies({0.5, 0.25});
  CHECK(p.alpha() == doctest::Approx(32.0).epsilon(1e-15));
  CHECK(p.omega() == doctest::Approx(2.0).epsilon(1e-15));
  const skin::FrequencyPair back = skin::frequencies_from_params(p);
  CHECK(back.omega1 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(back.nu1 == doctest::Approx(0.25).epsilon(1e-14));

  CHECK_THROWS_AS(skin::params_from_frequencies({0.0, 1.0}), skin::ValidationError);
  CHECK_THROWS_AS(skin::params_from_frequencies({1.0, -1.0}), skin::ValidationError);
  // Omega = 0 has no finite omega1/nu1 image.
  CHECK_THROWS_AS(
      skin::frequencies_from_params(PlasmaParams::from_alpha_omega(1.0, 0.0)),
      skin::ValidationError);
}

TEST_CASE("physical scales validation") {
  skin::PhysicalScales s{1e13, 1e-4, 3e10, 1e10};
  CHECK_NOTHROW(s.validate());
  s.ell = 0.0;
  CHECK_THROWS_AS(s.validate(), skin::ValidationError);
}
