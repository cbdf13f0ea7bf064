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

#ifndef SKIN_CORE_QUADRATURE_HPP
#define SKIN_CORE_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>

#include "core/params.hpp"

namespace skin {

/// Accuracy controls shared by every integral in the library.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_depth = 30;       // bisection depth limit per initial panel
  double tail_cut = 6.0;    // Gaussian tails beyond this are dropped
  double pv_excision = 1e-4;

  /// Throws ValidationError on non-positive tolerances or max_depth < 1.
  void validate() const;
};

struct QuadratureResult {
  cplx value{0.0, 0.0};
  double error = 0.0;  // estimated absolute error
  double l1 = 0.0;     // estimate of int |f|
  bool converged = true;
  std::size_t evaluations = 0;

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    error += o.error;
    l1 += o.l1;
    converged = converged && o.converged;
    evaluations += o.evaluations;
    return *this;
  }
};

/// What the relative tolerance is measured against. Oscillatory integrands
/// whose value cancels far below int |f| use `l1`.
enum class ErrorTarget { value, l1 };

using Integrand = std::function<cplx(double)>;

/// Globally adaptive Gauss-Kronrod (10/21) quadrature on [lo, hi].
///
/// Optional breakpoints seed the initial partition. Stops when the summed
/// error estimate is below max(abs_tol, rel_tol * target); panels that hit
/// max_depth are kept as-is and the result is flagged unconverged. A
/// non-finite integrand sample throws NumericError naming the abscissa.
QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                    const QuadratureConfig& cfg,
                                    std::span<const double> breakpoints = {},
                                    ErrorTarget target = ErrorTarget::value);

/// int_lo^inf f. [lo, split] is handled directly and [split, inf) through
/// t = split / u, which keeps 1/t^2 tails smooth. Requires split > max(lo, 0).
QuadratureResult integrate_to_infinity(const Integrand& f, double lo,
                                       double split,
                                       const QuadratureConfig& cfg,
                                       std::span<const double> breakpoints = {},
                                       ErrorTarget target = ErrorTarget::value);

/// Principal value of int_lo^hi f(t) / (t - pole) dt for lo < pole < hi.
///
/// The largest symmetric neighbourhood of the pole is folded onto itself,
/// (f(p+t) - f(p-t))/t, which is regular at t = 0. The inner pv_excision
/// radius is integrated as its own panel. Throws DomainError when the pole
/// is not strictly inside the interval.
QuadratureResult integrate_principal_value(
    const Integrand& f, double pole, double lo, double hi,
    const QuadratureConfig& cfg, std::span<const double> breakpoints = {},
    ErrorTarget target = ErrorTarget::value);

}  // namespace skin

#endif  // SKIN_CORE_QUADRATURE_HPP
