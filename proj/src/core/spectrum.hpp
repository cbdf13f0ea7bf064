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

#ifndef SKIN_CORE_SPECTRUM_HPP
#define SKIN_CORE_SPECTRUM_HPP

#include <utility>
#include <vector>

#include "core/params.hpp"

namespace skin {

enum class ZeroCount { two_zeros, four_zeros };
enum class Domain { d_minus, d_plus };
enum class DomainPlane { alpha_omega, omega1_nu1 };

/// Discrete spectrum: the zeros of lambda with Re > 0. Their mirrors -eta_k
/// are implied by evenness.
struct SpectrumInfo {
  ZeroCount classification = ZeroCount::two_zeros;
  std::vector<cplx> zeros;          // sorted by decreasing modulus
  std::vector<double> residuals;    // |lambda(eta_k)|
  std::vector<cplx> lambda_prime;   // lambda'(eta_k)
};

/// Winding of G = lambda+/lambda- along [0, T]; pairs = 1 + winding.
struct WindingInfo {
  int pairs = 0;
  double winding = 0.0;         // before rounding
  double min_abs_lambda = 0.0;  // closest approach of lambda+- to zero
  double tau_at_min = 0.0;
};

/// Argument-principle count over the right half-plane. The contour runs
/// along both banks of [0, inf) and the imaginary axis (which retraces
/// itself and contributes nothing); the closing arcs add one pair. Throws
/// NumericError when lambda+- come too close to zero on the real axis.
WindingInfo winding_count(const PlasmaParams& p);

/// Number of zero pairs +-eta_k (1 or 2).
int count_zero_pairs(const PlasmaParams& p);

/// Newton-refined zeros from an asymptotic seed (eta^2 ~ 1/a - 1/2) plus a
/// 50x50 seed grid on Re z in (0, 5], |Im z| <= 5, with outward rings as a
/// fallback. The count must match count_zero_pairs.
SpectrumInfo find_zeros(const PlasmaParams& p);

Domain classify_domain(const PlasmaParams& p);

/// Boundary of D+ traced from lambda+(mu) = 0.
struct DomainBoundary {
  DomainPlane plane = DomainPlane::alpha_omega;
  std::vector<std::pair<double, double>> points;  // (alpha, Omega) or (omega1, nu1)
  std::vector<double> mu_values;
  std::vector<double> residuals;       // |lambda+(mu)| at the point
  std::vector<double> skipped_mu;      // grid values where Newton failed
};

/// For each mu on a uniform grid, solves Re/Im lambda+(mu; alpha, Omega) = 0
/// by 2-D Newton in (ln alpha, arctan Omega), continuing from the previous
/// solution. Failed points are skipped; fewer than two successes throws.
DomainBoundary trace_domain_boundary(DomainPlane plane, double mu_min,
                                     double mu_max, int n_points);

}  // namespace skin

#endif  // SKIN_CORE_SPECTRUM_HPP
