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

#include "core/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "core/dispersion.hpp"
#include "core/error.hpp"

namespace skin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kJumpPoint = 1.0;  // where the D+ branch drops by 2 pi i

}  // namespace

FactorizationContext::FactorizationContext(const PlasmaParams& p,
                                           const QuadratureConfig& cfg,
                                           int grid_points)
    : params_(p), cfg_(cfg) {
  cfg_.validate();
  if (grid_points < 16) {
    throw ValidationError("factorization grid needs at least 16 points");
  }
  cut_ = cfg_.tail_cut;
  while (std::abs(eval_G(cut_) - 1.0) > 1e-12 && cut_ < 2.0 * cfg_.tail_cut) {
    cut_ += 1.0;
  }
  for (int n = grid_points;; n *= 2) {
    tau_.assign(n, 0.0);
    log_g_.assign(n, cplx(0.0, 0.0));
    max_step_ = 0.0;
    double phase = 0.0;
    cplx prev_g(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
      // Cosine clustering towards tau = 0.
      const double t = cut_ * (1.0 - std::cos(0.5 * kPi * k / (n - 1)));
      tau_[k] = t;
      const cplx g = eval_G(t);
      if (k > 0) {
        const double step = std::arg(g / prev_g);
        max_step_ = std::max(max_step_, std::abs(step));
        phase += step;
      }
      log_g_[k] = cplx(std::log(std::abs(g)), phase);
      prev_g = g;
    }
    if (max_step_ < 0.5 * kPi) break;
    if (n > (1 << 22)) {
      throw NumericError(
          "factorization: ln G branch could not be resolved on the grid");
    }
  }
  const double turns = log_g_.back().imag() / (2.0 * kPi);
  index_ = static_cast<int>(std::lround(turns));
  if (std::abs(turns - index_) > 1e-6 || std::abs(log_g_.back().real()) > 1e-9) {
    std::ostringstream os;
    os.precision(17);
    os << "factorization: ln G does not settle at the cut (ln G(T) = "
       << log_g_.back() << ")";
    throw NumericError(os.str());
  }
  if (index_ < 0 || index_ > 1) {
    throw NumericError("factorization: unexpected winding index " +
                       std::to_string(index_));
  }
}

cplx FactorizationContext::eval_G(double tau) const {
  const BoundaryValues b = eval_boundary(tau, params_);
  if (std::abs(b.lambda_minus) < 1e-300 ||
      std::abs(b.lambda_minus) < 1e-14 * std::abs(b.lambda_plus)) {
    std::ostringstream os;
    os.precision(17);
    os << "factorization: lambda- vanishes at tau = " << tau
       << " (boundary of D+/D-)";
    throw NumericError(os.str());
  }
  return b.lambda_plus / b.lambda_minus;
}

cplx FactorizationContext::log_G(double tau) const {
  if (tau <= 0.0) return {0.0, 0.0};
  const cplx g = eval_G(tau);
  double reference;
  if (tau >= cut_) {
    reference = log_g_.back().imag();
  } else {
    const auto it = std::upper_bound(tau_.begin(), tau_.end(), tau);
    const std::size_t k = static_cast<std::size_t>(it - tau_.begin());
    const double t0 = tau_[k - 1], t1 = tau_[k];
    const double w = (tau - t0) / (t1 - t0);
    reference = (1.0 - w) * log_g_[k - 1].imag() + w * log_g_[k].imag();
  }
  const double principal = std::arg(g);
  const double turns = std::round((reference - principal) / (2.0 * kPi));
  cplx value(std::log(std::abs(g)), principal + 2.0 * kPi * turns);
  if (index_ != 0 && tau > kJumpPoint) value -= cplx(0.0, 2.0 * kPi * index_);
  return value;
}

cplx FactorizationContext::eval_V(cplx z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("V: non-finite argument");
  }
  const double dist = z.real() >= 0.0 ? std::abs(z.imag()) : std::abs(z);
  if (dist < 1e-8) {
    std::ostringstream os;
    os.precision(17);
    os << "V: argument " << z << " is within 1e-8 of the cut [0, inf)";
    throw DomainError(os.str());
  }
  // Panels shrink towards the projection of z onto the cut.
  std::vector<double> breaks;
  if (index_ != 0) breaks.push_back(kJumpPoint);
  const double re = z.real(), im = std::abs(z.imag());
  if (re > 0.0 && re < cut_) {
    breaks.push_back(re);
    for (double s : {1.0, 4.0, 16.0}) {
      breaks.push_back(re - s * im);
      breaks.push_back(re + s * im);
    }
  }
  const Integrand f = [this, z](double t) { return log_G(t) / (t - z); };
  const QuadratureResult r = integrate_adaptive(f, 0.0, cut_, cfg_, breaks);
  return r.value / cplx(0.0, 2.0 * kPi);
}

cplx FactorizationContext::eval_X(cplx z) const { return std::exp(eval_V(z)); }

cplx FactorizationContext::eval_X1(cplx z) const {
  if (z == cplx(1.0, 0.0)) throw DomainError("X1 has a pole at z = 1");
  return eval_X(z) / (z - 1.0);
}

double check_factorization(cplx z, const FactorizationContext& ctx,
                           const SpectrumInfo& spec) {
  if (z.imag() == 0.0) {
    throw DomainError("factorization check needs z off the real axis");
  }
  const int pairs = static_cast<int>(spec.zeros.size());
  if (pairs != ctx.index() + 1) {
    throw ValidationError(
        "factorization check: spectrum does not match the ln G winding index");
  }
  const PlasmaParams& p = ctx.params();
  const cplx lambda = eval_lambda(z, p);
  const cplx z2 = z * z;
  cplx rhs;
  if (pairs == 1) {
    const cplx e0 = spec.zeros[0];
    rhs = p.a() * (e0 * e0 - z2) * ctx.eval_X(z) * ctx.eval_X(-z);
  } else {
    const cplx e0 = spec.zeros[0], e1 = spec.zeros[1];
    rhs = p.a() * (e0 * e0 - z2) * (e1 * e1 - z2) * ctx.eval_X1(z) *
          ctx.eval_X1(-z);
  }
  return std::abs(lambda - rhs) / std::abs(lambda);
}

cplx zero_from_factorization(const FactorizationContext& ctx, cplx z_ref) {
  if (ctx.index() != 0) {
    throw DomainError(
        "zero relationship holds only with two zeros (parameter point in D-)");
  }
  if (z_ref.imag() == 0.0) {
    throw DomainError("zero relationship needs z_ref off the real axis");
  }
  const PlasmaParams& p = ctx.params();
  const cplx lambda = eval_lambda(z_ref, p);
  const cplx prod = ctx.eval_X(z_ref) * ctx.eval_X(-z_ref);
  cplx eta = std::sqrt(z_ref * z_ref + lambda / (p.a() * prod));
  if (eta.real() < 0.0) eta = -eta;
  return eta;
}

}  // namespace skin
