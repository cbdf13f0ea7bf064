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

#ifndef SKIN_CORE_FADDEEVA_HPP
#define SKIN_CORE_FADDEEVA_HPP

#include <complex>

namespace skin::detail {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) together with the
/// combination 1 + z Z(z), where Z(z) = i sqrt(pi) w(z) is the plasma
/// dispersion function. The second value is produced without cancellation
/// in the continued-fraction region, which matters for Z'(z) = -2(1 + zZ) at
/// large |z|.
struct FaddeevaValue {
  std::complex<double> w;
  std::complex<double> one_plus_zZ;
};

/// Valid for Im z >= 0. Relative accuracy is about 1e-14 (Gautschi power
/// series near the origin, Gautschi-modified Laplace continued fraction
/// elsewhere).
FaddeevaValue faddeeva_upper(std::complex<double> z);

/// Dawson integral F(x) = exp(-x^2) int_0^x exp(t^2) dt.
double dawson(double x);

}  // namespace skin::detail

#endif  // SKIN_CORE_FADDEEVA_HPP
