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

#include "core/params.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace skin {

PlasmaParams::PlasmaParams(double alpha, double omega)
    : alpha_(alpha), omega_(omega), z0_(1.0, -omega) {
  const cplx z0_cubed = z0_ * z0_ * z0_;
  a_ = cplx(0.0, -alpha) / z0_cubed;
}

PlasmaParams PlasmaParams::from_alpha_omega(double alpha, double omega) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw ValidationError("alpha must be a finite positive number, got " +
                          std::to_string(alpha));
  }
  if (!std::isfinite(omega) || omega < 0.0) {
    throw ValidationError("Omega must be finite and non-negative, got " +
                          std::to_string(omega));
  }
  return PlasmaParams(alpha, omega);
}

PlasmaParams params_from_frequencies(const FrequencyPair& f) {
  if (!std::isfinite(f.omega1) || !(f.omega1 > 0.0) || !std::isfinite(f.nu1) ||
      !(f.nu1 > 0.0)) {
    throw ValidationError("omega1 and nu1 must be finite positive numbers");
  }
  return PlasmaParams::from_alpha_omega(f.omega1 / (f.nu1 * f.nu1 * f.nu1),
                                        f.omega1 / f.nu1);
}

FrequencyPair frequencies_from_params(const PlasmaParams& p) {
  if (!(p.omega() > 0.0)) {
    throw ValidationError(
        "the (omega1, nu1) parameterization needs Omega > 0");
  }
  const double nu1 = std::sqrt(p.omega() / p.alpha());
  return {p.omega() * nu1, nu1};
}

void PhysicalScales::validate() const {
  for (double v : {nu, ell, c_light, omega}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw ValidationError("physical scales must all be finite and positive");
    }
  }
}

}  // namespace skin
