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

#ifndef SKIN_CORE_PARAMS_HPP
#define SKIN_CORE_PARAMS_HPP

#include <complex>

namespace skin {

using cplx = std::complex<double>;

/// Dimensionless model parameters of the half-space problem.
///
/// `alpha` is the anomaly parameter 2l^2/delta^2 and `omega` the product
/// of field frequency and collision time. The derived quantities z0 = 1 - i
/// Omega and a = -i alpha / z0^3 are fixed at construction.
class PlasmaParams {
 public:
  /// Throws ValidationError unless alpha > 0 and omega >= 0 (both finite).
  static PlasmaParams from_alpha_omega(double alpha, double omega);

  double alpha() const noexcept { return alpha_; }
  double omega() const noexcept { return omega_; }
  cplx z0() const noexcept { return z0_; }
  cplx a() const noexcept { return a_; }

 private:
  PlasmaParams(double alpha, double omega);

  double alpha_;
  double omega_;
  cplx z0_;
  cplx a_;
};

/// Independent frequencies omega1 = omega/(omega_p v_c), nu1 = nu/(omega_p
/// v_c). They map to alpha = omega1/nu1^3 and Omega = omega1/nu1.
struct FrequencyPair {
  double omega1;
  double nu1;
};

PlasmaParams params_from_frequencies(const FrequencyPair& f);

/// Inverse map. Defined for alpha > 0 and Omega > 0 only.
FrequencyPair frequencies_from_params(const PlasmaParams& p);

/// Physical scales used only to dimension the impedance.
struct PhysicalScales {
  double nu;       // collision frequency, 1/s
  double ell;      // mean free path
  double c_light;  // speed of light, same length unit as ell per second
  double omega;    // field angular frequency, 1/s

  void validate() const;
};

}  // namespace skin

#endif  // SKIN_CORE_PARAMS_HPP
