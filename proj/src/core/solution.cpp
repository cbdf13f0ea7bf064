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

#include "core/solution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "core/dispersion.hpp"
#include "core/error.hpp"

namespace skin {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
constexpr double kMaxExponent = 700.0;  // exp(-700) is below every tolerance

// lambda(i tau) has a near-real resonance where i tau approaches the large
// zero; for Omega >> 1 it sits at tau ~ 1/sqrt|a| with a width of order
// |Re eta0|. The asymptotic zero is enough to place breakpoints.
struct Resonance {
  double center = 0.0;
  double width = 0.0;
};

Resonance axis_resonance(const PlasmaParams& p) {
  const cplx a = p.a();
  cplx c = cplx(0.0, 1.0) * std::sqrt(1.0 / a - 0.5);
  if (c.real() < 0.0) c = -c;
  Resonance r;
  r.center = c.real();
  r.width = std::max(std::abs(c.imag()), 1e-8 * std::max(1.0, r.center));
  return r;
}

std::vector<double> resonance_breaks(const Resonance& r) {
  std::vector<double> out;
  if (!(r.center > 0.0)) return out;
  out.push_back(r.center);
  for (double k : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 256.0}) {
    const double lo = r.center - k * r.width, hi = r.center + k * r.width;
    if (lo > 0.0) out.push_back(lo);
    out.push_back(hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double axis_split(const Resonance& r, const QuadratureConfig& cfg) {
  return cfg.tail_cut * std::max(1.0, r.center + 256.0 * r.width);
}

cplx lambda_on_axis(double tau, const PlasmaParams& p) {
  const cplx l = eval_lambda(cplx(0.0, tau), p);
  if (std::abs(l) < 1e-300) {
    std::ostringstream os;
    os.precision(17);
    os << "lambda(i tau) vanishes on the integration path at tau = " << tau;
    throw NumericError(os.str());
  }
  return l;
}

void require_converged(const QuadratureResult& r, const char* what) {
  if (!r.converged) {
    std::ostringstream os;
    os << what << ": quadrature did not reach tolerance (error estimate "
       << r.error << ", " << r.evaluations << " evaluations)";
    throw NumericError(os.str());
  }
}

cplx decay(cplx z0, double x, cplx eta) { return std::exp(-z0 * x / eta); }

// exp(-z0 x / eta) for real eta > 0, with the underflow guard.
cplx decay_real(cplx z0, double x, double eta) {
  if (x == 0.0) return {1.0, 0.0};
  if (x / eta > kMaxExponent) return {0.0, 0.0};
  return std::exp(-z0 * x / eta);
}

// 1 / (lambda+ lambda-) on the real axis.
cplx inverse_product(double eta, const PlasmaParams& p) {
  return 1.0 / eval_boundary(eta, p).product;
}

std::vector<double> depth_breaks(double x, double hi) {
  std::vector<double> out;
  for (double s : {kMaxExponent, 36.0, 8.0}) {
    const double b = x / s;
    if (b > 0.0 && b < hi) out.push_back(b);
  }
  return out;
}

void check_x(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw ValidationError("depth x must be finite and nonnegative");
  }
}

}  // namespace

cplx compute_I(const PlasmaParams& p, const QuadratureConfig& cfg) {
  cfg.validate();
  const Resonance r = axis_resonance(p);
  const std::vector<double> breaks = resonance_breaks(r);
  const Integrand f = [&p](double t) { return 1.0 / lambda_on_axis(t, p); };
  const QuadratureResult q =
      integrate_to_infinity(f, 0.0, axis_split(r, cfg), cfg, breaks);
  require_converged(q, "normalization integral I");
  return q.value / kPi;
}

cplx compute_J(const PlasmaParams& p, double mu, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(mu)) throw ValidationError("mu must be finite");
  if (mu == 0.0) return compute_I(p, cfg);
  const Resonance r = axis_resonance(p);
  std::vector<double> breaks = resonance_breaks(r);
  const double m = std::abs(mu);
  for (double s : {0.25, 1.0, 4.0}) breaks.push_back(s * m);
  std::sort(breaks.begin(), breaks.end());
  const double m2 = mu * mu;
  const Integrand f = [&p, m2](double t) {
    const double t2 = t * t;
    return t2 / (lambda_on_axis(t, p) * (t2 + m2));
  };
  const double split = std::max(axis_split(r, cfg), cfg.tail_cut * 4.0 * m);
  const QuadratureResult q = integrate_to_infinity(f, 0.0, split, cfg, breaks);
  require_converged(q, "boundary distribution integral");
  return q.value / kPi;
}

SolutionCoefficients::SolutionCoefficients(const PlasmaParams& p,
                                           const SpectrumInfo& spec,
                                           cplx I_norm)
    : params_(p), I_(I_norm) {
  if (!(std::abs(I_) > 0.0)) {
    throw NumericError("normalization integral I vanishes");
  }
  if (spec.lambda_prime.size() != spec.zeros.size()) {
    throw ValidationError("spectrum zeros and derivatives are misaligned");
  }
  const cplx a = p.a(), z0 = p.z0();
  for (std::size_t k = 0; k < spec.zeros.size(); ++k) {
    const cplx eta = spec.zeros[k], lp = spec.lambda_prime[k];
    if (std::abs(lp * eta) < 1e-8) {
      std::ostringstream os;
      os.precision(17);
      os << "degenerate zero eta = " << eta << " (lambda' = " << lp
         << "); the parameter point is on the D+/D- boundary";
      throw NumericError(os.str());
    }
    A_.push_back(-kSqrtPi / (a * z0 * I_ * eta * eta * lp));
  }
}

cplx SolutionCoefficients::A_continuous(double eta) const {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("A(eta) is defined for finite eta > 0");
  }
  return -eta * std::exp(-eta * eta) * inverse_product(eta, params_) /
         (params_.z0() * I_);
}

SolutionCoefficients coefficients(const PlasmaParams& p,
                                  const SpectrumInfo& spec,
                                  const QuadratureConfig& cfg) {
  return SolutionCoefficients(p, spec, compute_I(p, cfg));
}

FieldProfile field_profile(const PlasmaParams& p, const SpectrumInfo& spec,
                           const SolutionCoefficients& coeffs,
                           const std::vector<double>& x_grid,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    check_x(x_grid[i]);
    if (i > 0 && !(x_grid[i] > x_grid[i - 1])) {
      throw ValidationError("x grid must be strictly ascending");
    }
  }
  const cplx a = p.a(), z0 = p.z0();
  const double hi = cfg.tail_cut;
  FieldProfile out;
  out.x_grid = x_grid;
  for (double x : x_grid) {
    cplx ed(0.0, 0.0);
    for (std::size_t k = 0; k < spec.zeros.size(); ++k) {
      const cplx eta = spec.zeros[k];
      ed += coeffs.A_discrete()[k] * (a * z0 / kSqrtPi) * eta * eta *
            decay(z0, x, eta);
    }
    const Integrand f = [&coeffs, z0, x](double eta) {
      const cplx d = decay_real(z0, x, eta);
      if (d == cplx(0.0, 0.0)) return d;
      return coeffs.A_continuous(eta) * eta * eta * d;
    };
    const std::vector<double> breaks = depth_breaks(x, hi);
    const QuadratureResult q =
        integrate_adaptive(f, 0.0, hi, cfg, breaks, ErrorTarget::l1);
    const cplx ec = q.value * (a * z0 / kSqrtPi);
    out.e_discrete.push_back(ed);
    out.e_continuous.push_back(ec);
    out.e_total.push_back(ed + ec);
    out.converged.push_back(q.converged);
  }
  return out;
}

namespace {

cplx discrete_distribution(const PlasmaParams& p, const SpectrumInfo& spec,
                           const SolutionCoefficients& coeffs, double x,
                           double mu) {
  const cplx a = p.a(), z0 = p.z0();
  cplx h(0.0, 0.0);
  for (std::size_t k = 0; k < spec.zeros.size(); ++k) {
    const cplx eta = spec.zeros[k];
    h += coeffs.A_discrete()[k] * (a / kSqrtPi) * eta * eta * eta /
         (eta - mu) * decay(z0, x, eta);
  }
  return h;
}

}  // namespace

DistributionSlice distribution_boundary(const PlasmaParams& p,
                                        const SpectrumInfo& spec,
                                        const SolutionCoefficients& coeffs,
                                        const std::vector<double>& mu_grid,
                                        const QuadratureConfig& cfg) {
  cfg.validate();
  const cplx scale = 1.0 / (p.z0() * coeffs.I_norm());
  DistributionSlice out;
  out.x = 0.0;
  out.mu_grid = mu_grid;
  for (double mu : mu_grid) {
    if (!std::isfinite(mu)) throw ValidationError("mu grid must be finite");
    const cplx total = compute_J(p, mu, cfg) * scale;
    const cplx hd = discrete_distribution(p, spec, coeffs, 0.0, mu);
    out.h_discrete.push_back(hd);
    out.h_continuous.push_back(total - hd);
    out.h_total.push_back(total);
    out.flagged.push_back(mu == 0.0);
  }
  return out;
}

namespace detail {

DistributionSlice distribution_expansion(const PlasmaParams& p,
                                         const SpectrumInfo& spec,
                                         const SolutionCoefficients& coeffs,
                                         double x,
                                         const std::vector<double>& mu_grid,
                                         const QuadratureConfig& cfg) {
  cfg.validate();
  check_x(x);
  const cplx a = p.a(), z0 = p.z0();
  const double T = cfg.tail_cut;
  DistributionSlice out;
  out.x = x;
  out.mu_grid = mu_grid;
  // Continuous part: int A(eta) e^{-z0 x/eta} Phi(eta, mu) deta with
  // Phi = (a/sqrt(pi)) eta^3 PV 1/(eta - mu) + e^{eta^2} lambda_P delta(eta - mu).
  const Integrand g = [&coeffs, z0, x, a](double eta) {
    if (!(eta > 0.0)) return cplx(0.0, 0.0);
    const cplx d = decay_real(z0, x, eta);
    if (d == cplx(0.0, 0.0)) return d;
    return coeffs.A_continuous(eta) * d * (a / kSqrtPi) * eta * eta * eta;
  };
  for (double mu : mu_grid) {
    if (!std::isfinite(mu)) throw ValidationError("mu grid must be finite");
    const cplx hd = discrete_distribution(p, spec, coeffs, x, mu);
    std::vector<double> breaks = depth_breaks(x, std::max(T, mu + 1.0));
    QuadratureResult q;
    if (mu > 0.0) {
      const double hi = std::max(T, mu + 1.0);
      q = integrate_principal_value(g, mu, 0.0, hi, cfg, breaks,
                                    ErrorTarget::l1);
    } else {
      const double m = -mu;
      for (double s : {0.25, 1.0, 4.0}) {
        if (s * m > 0.0 && s * m < T) breaks.push_back(s * m);
      }
      const Integrand f = [&g, mu](double eta) { return g(eta) / (eta - mu); };
      q = integrate_adaptive(f, 0.0, T, cfg, breaks, ErrorTarget::l1);
    }
    cplx hc = q.value;
    if (mu > 0.0) {
      const cplx d = decay_real(z0, x, mu);
      if (d != cplx(0.0, 0.0)) {
        const BoundaryValues b = eval_boundary(mu, p);
        hc -= d * mu * b.lambda_principal / (b.product * z0 * coeffs.I_norm());
      }
    }
    out.h_discrete.push_back(hd);
    out.h_continuous.push_back(hc);
    out.h_total.push_back(hd + hc);
    out.flagged.push_back(mu == 0.0 || !q.converged);
  }
  return out;
}

}  // namespace detail

DistributionSlice distribution_profile(const PlasmaParams& p,
                                       const SpectrumInfo& spec,
                                       const SolutionCoefficients& coeffs,
                                       double x,
                                       const std::vector<double>& mu_grid,
                                       const QuadratureConfig& cfg) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw ValidationError("distribution profile needs depth x > 0");
  }
  return detail::distribution_expansion(p, spec, coeffs, x, mu_grid, cfg);
}

ImpedanceResult impedance(const PlasmaParams& p, const SpectrumInfo& spec,
                          const SolutionCoefficients& coeffs,
                          const QuadratureConfig& cfg,
                          const std::optional<PhysicalScales>& scales) {
  cfg.validate();
  if (scales) scales->validate();
  const cplx a = p.a(), z0 = p.z0();
  // Each term of the field contributes -z0/eta times its amplitude.
  cplx ep(0.0, 0.0);
  for (std::size_t k = 0; k < spec.zeros.size(); ++k) {
    const cplx eta = spec.zeros[k];
    ep += coeffs.A_discrete()[k] * (a * z0 / kSqrtPi) * eta * eta * (-z0 / eta);
  }
  const Integrand f = [&coeffs](double eta) {
    return coeffs.A_continuous(eta) * eta;
  };
  const QuadratureResult q = integrate_adaptive(f, 0.0, cfg.tail_cut, cfg);
  require_converged(q, "impedance derivative integral");
  ep += q.value * (a * z0 / kSqrtPi) * (-z0);
  if (std::abs(ep) < 1e-14) {
    throw NumericError("e'(0) vanishes; impedance is undefined");
  }
  ImpedanceResult out;
  out.e_prime_at_0 = ep;
  out.z_reduced = -2.0 * coeffs.I_norm() / z0;
  if (scales) {
    const cplx prefactor(0.0, 4.0 * kPi * scales->omega * scales->ell /
                                  (scales->c_light * scales->c_light));
    out.z_physical = prefactor / ep;
  }
  return out;
}

ImpedanceResult impedance(const PlasmaParams& p, const QuadratureConfig& cfg,
                          const std::optional<PhysicalScales>& scales) {
  const SpectrumInfo spec = find_zeros(p);
  return impedance(p, spec, coefficients(p, spec, cfg), cfg, scales);
}

}  // namespace skin
