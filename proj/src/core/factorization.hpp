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

#ifndef SKIN_CORE_FACTORIZATION_HPP
#define SKIN_CORE_FACTORIZATION_HPP

#include <vector>

#include "core/params.hpp"
#include "core/quadrature.hpp"
#include "core/spectrum.hpp"

namespace skin {

/// Factorization lambda(z) = a (eta0^2 - z^2) X(z) X(-z) with X = exp V and
///
///     V(z) = 1/(2 pi i) int_0^inf ln G(tau) / (tau - z) dtau,
///     G(tau) = lambda+(tau) / lambda-(tau).
///
/// ln G is the continuous branch with ln G(0) = 0, sampled on a cosine-
/// clustered grid that pins the branch for arbitrary tau. With four zeros
/// G winds once; the branch then drops by 2 pi i at tau = 1 so that it
/// vanishes at infinity, which gives X a simple zero at z = 1 and makes
/// X1(z) = X(z)/(z - 1) the regular factor.
class FactorizationContext {
 public:
  FactorizationContext(const PlasmaParams& p, const QuadratureConfig& cfg,
                       int grid_points = 4096);

  const PlasmaParams& params() const noexcept { return params_; }
  const QuadratureConfig& config() const noexcept { return cfg_; }
  /// Number of 2 pi turns of G along [0, T] (0 in D-, 1 in D+).
  int index() const noexcept { return index_; }
  double cut() const noexcept { return cut_; }

  const std::vector<double>& tau_grid() const noexcept { return tau_; }
  const std::vector<cplx>& log_g_samples() const noexcept { return log_g_; }
  /// Largest phase step between neighbouring samples.
  double max_phase_step() const noexcept { return max_step_; }

  /// G(tau) = lambda+/lambda-. Throws NumericError if lambda- vanishes.
  cplx eval_G(double tau) const;
  /// ln G on the tabulated branch, including the 2 pi i drop in D+.
  cplx log_G(double tau) const;

  /// Cauchy integral of ln G. Throws DomainError within 1e-8 of [0, inf).
  cplx eval_V(cplx z) const;
  cplx eval_X(cplx z) const;
  /// X(z)/(z - 1); z = 1 is a DomainError.
  cplx eval_X1(cplx z) const;

 private:
  PlasmaParams params_;
  QuadratureConfig cfg_;
  int index_ = 0;
  double cut_ = 6.0;
  double max_step_ = 0.0;
  std::vector<double> tau_;
  std::vector<cplx> log_g_;  // continuous branch, no D+ drop applied
};

/// |lambda(z) - RHS| / |lambda(z)| for the identity matching the
/// classification. z must be off the real axis.
double check_factorization(cplx z, const FactorizationContext& ctx,
                           const SpectrumInfo& spec);

/// eta0 from eta0^2 = z^2 + lambda(z) / (a X(z) X(-z)), Re eta0 > 0.
/// Only meaningful in D- (DomainError otherwise).
cplx zero_from_factorization(const FactorizationContext& ctx, cplx z_ref);

}  // namespace skin

#endif  // SKIN_CORE_FACTORIZATION_HPP
