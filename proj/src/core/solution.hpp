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

#ifndef SKIN_CORE_SOLUTION_HPP
#define SKIN_CORE_SOLUTION_HPP

#include <optional>
#include <vector>

#include "core/params.hpp"
#include "core/quadrature.hpp"
#include "core/spectrum.hpp"

namespace skin {

/// (1/pi) int_0^inf dtau / lambda(i tau).
cplx compute_I(const PlasmaParams& p, const QuadratureConfig& cfg);

/// (1/pi) int_0^inf tau^2 dtau / (lambda(i tau) (tau^2 + mu^2)); J(0) = I.
cplx compute_J(const PlasmaParams& p, double mu, const QuadratureConfig& cfg);

class SolutionCoefficients {
 public:
  SolutionCoefficients(const PlasmaParams& p, const SpectrumInfo& spec,
                       cplx I_norm);

  cplx I_norm() const noexcept { return I_; }
  /// A_k aligned with SpectrumInfo::zeros.
  const std::vector<cplx>& A_discrete() const noexcept { return A_; }
  /// A(eta) = -eta exp(-eta^2) / (z0 I lambda+ lambda-), eta > 0.
  cplx A_continuous(double eta) const;

 private:
  PlasmaParams params_;
  cplx I_;
  std::vector<cplx> A_;
};

/// Throws NumericError when some lambda'(eta_k) vanishes.
SolutionCoefficients coefficients(const PlasmaParams& p,
                                  const SpectrumInfo& spec,
                                  const QuadratureConfig& cfg);

struct FieldProfile {
  std::vector<double> x_grid;
  std::vector<cplx> e_discrete;
  std::vector<cplx> e_continuous;
  std::vector<cplx> e_total;
  std::vector<bool> converged;  // false where quadrature missed tolerance
};

FieldProfile field_profile(const PlasmaParams& p, const SpectrumInfo& spec,
                           const SolutionCoefficients& coeffs,
                           const std::vector<double>& x_grid,
                           const QuadratureConfig& cfg);

struct DistributionSlice {
  double x = 0.0;
  std::vector<double> mu_grid;
  std::vector<cplx> h_discrete;
  std::vector<cplx> h_continuous;
  std::vector<cplx> h_total;
  std::vector<bool> flagged;  // mu = 0 limit or unconverged quadrature
};

/// Closed form of h(0, mu) = J(mu) / (z0 I), split into the discrete sum
/// and the remainder.
DistributionSlice distribution_boundary(const PlasmaParams& p,
                                        const SpectrumInfo& spec,
                                        const SolutionCoefficients& coeffs,
                                        const std::vector<double>& mu_grid,
                                        const QuadratureConfig& cfg);

/// Eigenfunction expansion of h(x, mu) for x > 0.
DistributionSlice distribution_profile(const PlasmaParams& p,
                                       const SpectrumInfo& spec,
                                       const SolutionCoefficients& coeffs,
                                       double x,
                                       const std::vector<double>& mu_grid,
                                       const QuadratureConfig& cfg);

struct ImpedanceResult {
  cplx e_prime_at_0;
  cplx z_reduced;  // -(2/z0) (1/pi) int_0^inf dtau / lambda(i tau)
  std::optional<cplx> z_physical;
};

ImpedanceResult impedance(const PlasmaParams& p, const SpectrumInfo& spec,
                          const SolutionCoefficients& coeffs,
                          const QuadratureConfig& cfg,
                          const std::optional<PhysicalScales>& scales = {});

ImpedanceResult impedance(const PlasmaParams& p, const QuadratureConfig& cfg,
                          const std::optional<PhysicalScales>& scales = {});

namespace detail {

/// Expansion route valid at x >= 0, used to cross-check the closed form.
DistributionSlice distribution_expansion(const PlasmaParams& p,
                                         const SpectrumInfo& spec,
                                         const SolutionCoefficients& coeffs,
                                         double x,
                                         const std::vector<double>& mu_grid,
                                         const QuadratureConfig& cfg);

}  // namespace detail

}  // namespace skin

#endif  // SKIN_CORE_SOLUTION_HPP
