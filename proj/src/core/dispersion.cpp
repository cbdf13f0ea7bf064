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

#include "core/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "core/error.hpp"
#include "core/faddeeva.hpp"

namespace skin {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void require_off_axis(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("lambda: non-finite argument");
  }
  if (z.imag() == 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "lambda: argument " << z.real()
       << " lies on the real axis where lambda jumps; use the boundary "
          "values lambda+/lambda- instead";
    throw DomainError(os.str());
  }
}

}  // namespace

cplx plasma_z(cplx z) {
  return cplx(0.0, kSqrtPi) * detail::faddeeva_upper(z).w;
}

DispersionSample sample_lambda(cplx z, const PlasmaParams& p) {
  require_off_axis(z);
  // lambda(z) = lambda(-z); lambda' is odd.
  const bool reflect = z.imag() < 0.0;
  const cplx zu = reflect ? -z : z;
  const detail::FaddeevaValue f = detail::faddeeva_upper(zu);
  const cplx Z = cplx(0.0, kSqrtPi) * f.w;
  const cplx z2 = zu * zu;
  const cplx lambda = 1.0 + p.a() * z2 * zu * Z;
  // Z' = -2 (1 + zZ), so lambda' = a z^2 (3 Z - 2 z (1 + zZ)).
  cplx lambda_prime = p.a() * z2 * (3.0 * Z - 2.0 * zu * f.one_plus_zZ);
  if (reflect) lambda_prime = -lambda_prime;
  return {z, lambda, lambda_prime};
}

cplx eval_lambda(cplx z, const PlasmaParams& p) {
  return sample_lambda(z, p).lambda;
}

cplx eval_lambda_prime(cplx z, const PlasmaParams& p) {
  return sample_lambda(z, p).lambda_prime;
}

BoundaryValues eval_boundary(double eta, const PlasmaParams& p) {
  if (!std::isfinite(eta)) throw DomainError("lambda boundary: non-finite eta");
  const double eta3 = eta * eta * eta;
  const cplx base = 1.0 - 2.0 * p.a() * eta3 * detail::dawson(eta);
  const cplx jump_half =
      cplx(0.0, kSqrtPi) * p.a() * eta3 * std::exp(-eta * eta);
  BoundaryValues b;
  b.eta = eta;
  b.lambda_plus = base + jump_half;
  b.lambda_minus = base - jump_half;
  b.lambda_principal = 0.5 * (b.lambda_plus + b.lambda_minus);
  b.product = b.lambda_plus * b.lambda_minus;
  return b;
}

cplx eval_boundary_plus_prime(double eta, const PlasmaParams& p) {
  const detail::FaddeevaValue f = detail::faddeeva_upper({eta, 0.0});
  const cplx Z = cplx(0.0, kSqrtPi) * f.w;
  return p.a() * eta * eta * (3.0 * Z - 2.0 * eta * f.one_plus_zZ);
}

}  // namespace skin
