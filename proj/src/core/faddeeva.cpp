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

#include "core/faddeeva.hpp"

#include <cmath>
#include <numbers>

namespace skin::detail {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;

// Region split and iteration counts follow Gautschi (1970) as tuned by
// Poppe & Wijers (1990). Works on |Re z|; the sign is restored by the caller.
FaddeevaValue faddeeva_first_quadrant(double xabs, double yabs) {
  using cplx = std::complex<double>;
  const double xs = xabs / 6.3;
  const double ys = yabs / 4.4;
  double qrho = xs * xs + ys * ys;
  const cplx z(xabs, yabs);

  if (qrho < 0.085264) {
    // Power series of erf about the origin.
    const double xquad = xabs * xabs - yabs * yabs;
    const double yquad = 2.0 * xabs * yabs;
    qrho = (1.0 - 0.85 * ys) * std::sqrt(qrho);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
    int j = 2 * n + 1;
    double xsum = 1.0 / j;
    double ysum = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double xaux = (xsum * xquad - ysum * yquad) / i;
      ysum = (xsum * yquad + ysum * xquad) / i;
      xsum = xaux + 1.0 / j;
    }
    const double u1 = -kTwoOverSqrtPi * (xsum * yabs + ysum * xabs) + 1.0;
    const double v1 = kTwoOverSqrtPi * (xsum * xabs - ysum * yabs);
    const double daux = std::exp(-xquad);
    const double u2 = daux * std::cos(yquad);
    const double v2 = -daux * std::sin(yquad);
    const cplx w(u1 * u2 - v1 * v2, u1 * v2 + v1 * u2);
    const cplx zZ = cplx(0.0, std::sqrt(std::numbers::pi)) * z * w;
    return {w, 1.0 + zZ};
  }

  if (qrho > 1.0) {
    // Plain Laplace continued fraction r_n = (1/2) / (-iz + (n+1) r_{n+1}).
    // w = (i/sqrt(pi)) / (z + i r_1), hence 1 + zZ = i r_1 / (z + i r_1).
    const double rho = std::sqrt(qrho);
    const int nu = static_cast<int>(3.0 + 1442.0 / (26.0 * rho + 77.0));
    const cplx minus_iz(yabs, -xabs);
    cplx r(0.0, 0.0);
    for (int n = nu; n >= 1; --n) {
      r = 0.5 / (minus_iz + static_cast<double>(n + 1) * r);
    }
    const cplx denom = z + cplx(0.0, 1.0) * r;
    cplx w = cplx(0.0, std::numbers::inv_sqrtpi) / denom;
    if (yabs == 0.0) w.real(std::exp(-xabs * xabs));
    return {w, cplx(0.0, 1.0) * r / denom};
  }

  // Gautschi's modified continued fraction with the h-shift.
  qrho = (1.0 - ys) * std::sqrt(1.0 - qrho);
  const double h = 1.88 * qrho;
  const double h2 = 2.0 * h;
  const int kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
  const int nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
  double qlambda = std::pow(h2, kapn);
  double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
  for (int n = nu; n >= 0; --n) {
    const int np1 = n + 1;
    double tx = yabs + h + np1 * rx;
    const double ty = xabs - np1 * ry;
    const double c = 0.5 / (tx * tx + ty * ty);
    rx = c * tx;
    ry = c * ty;
    if (n <= kapn) {
      tx = qlambda + sx;
      sx = rx * tx - ry * sy;
      sy = ry * tx + rx * sy;
      qlambda /= h2;
    }
  }
  cplx w(kTwoOverSqrtPi * sx, kTwoOverSqrtPi * sy);
  if (yabs == 0.0) w.real(std::exp(-xabs * xabs));
  const cplx zZ = cplx(0.0, std::sqrt(std::numbers::pi)) * z * w;
  return {w, 1.0 + zZ};
}

}  // namespace

FaddeevaValue faddeeva_upper(std::complex<double> z) {
  FaddeevaValue v = faddeeva_first_quadrant(std::abs(z.real()), z.imag());
  if (z.real() < 0.0) {
    // w(-conj z) = conj w(z); 1 + zZ transforms the same way.
    v.w = std::conj(v.w);
    v.one_plus_zZ = std::conj(v.one_plus_zZ);
  }
  return v;
}

double dawson(double x) {
  const FaddeevaValue v = faddeeva_upper({x, 0.0});
  return 0.5 * std::sqrt(std::numbers::pi) * v.w.imag();
}

}  // namespace skin::detail
