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

#ifndef SKIN_CORE_DISPERSION_HPP
#define SKIN_CORE_DISPERSION_HPP

#include "core/params.hpp"

namespace skin {

/// lambda(z) = 1 + a z^3 K(z), K(z) = pi^{-1/2} int exp(-mu^2)/(mu - z) dmu.
///
/// K is the plasma dispersion function in the upper half-plane. The
/// integral makes lambda even, so lower half-plane arguments are reflected
/// through z -> -z. lambda has a jump across the whole real axis; real
/// arguments are rejected with DomainError, use eval_boundary instead.
cplx eval_lambda(cplx z, const PlasmaParams& p);

/// Analytic derivative d lambda / dz off the real axis.
cplx eval_lambda_prime(cplx z, const PlasmaParams& p);

struct DispersionSample {
  cplx z;
  cplx lambda;
  cplx lambda_prime;
};

/// Value and derivative from a single kernel evaluation.
DispersionSample sample_lambda(cplx z, const PlasmaParams& p);

/// Limits of lambda on the real axis from above (plus) and below (minus).
struct BoundaryValues {
  double eta;
  cplx lambda_plus;
  cplx lambda_minus;
  cplx lambda_principal;  // (plus + minus) / 2
  cplx product;           // plus * minus
};

/// lambda^{+-}(eta) = 1 - 2 a eta^3 F(eta) +- i sqrt(pi) a eta^3 exp(-eta^2),
/// F the Dawson integral. Entire in eta.
BoundaryValues eval_boundary(double eta, const PlasmaParams& p);

/// d lambda^+ / d eta on the real axis.
cplx eval_boundary_plus_prime(double eta, const PlasmaParams& p);

/// Plasma dispersion function Z(z) = i sqrt(pi) w(z); requires Im z >= 0.
cplx plasma_z(cplx z);

}  // namespace skin

#endif  // SKIN_CORE_DISPERSION_HPP
