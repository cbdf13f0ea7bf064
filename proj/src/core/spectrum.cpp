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

#include "core/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "core/dispersion.hpp"
#include "core/error.hpp"
#include "core/faddeeva.hpp"

namespace skin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kContourCut = 6.0;     // exp(-36) ~ 2e-16
constexpr double kMaxContourCut = 12.0;
constexpr double kProximity = 1e-12;    // |lambda+-| floor on the real axis
constexpr int kMaxWindingDepth = 60;

struct TrackSample {
  double t;
  cplx plus, minus, dplus, dminus;
};

TrackSample track_at(double t, const PlasmaParams& p) {
  const BoundaryValues b = eval_boundary(t, p);
  // lambda-(t) = lambda+(-t), so its derivative is -lambda+'(-t).
  return {t, b.lambda_plus, b.lambda_minus, eval_boundary_plus_prime(t, p),
          -eval_boundary_plus_prime(-t, p)};
}

// True when the segment is short enough that neither lambda+ nor lambda-
// can slip around the origin unseen.
bool segment_resolved(const TrackSample& s1, const TrackSample& s2) {
  const double d = s2.t - s1.t;
  auto ok = [d](cplx f1, cplx f2, cplx d1, cplx d2) {
    const double step = std::abs(std::arg(f2 / f1));
    const double lip = 2.0 * std::max(std::abs(d1), std::abs(d2));
    const double floor = std::min(std::abs(f1), std::abs(f2));
    return step <= 0.25 * kPi && d * lip <= 0.5 * floor;
  };
  return ok(s1.plus, s2.plus, s1.dplus, s2.dplus) &&
         ok(s1.minus, s2.minus, s1.dminus, s2.dminus);
}

[[noreturn]] void throw_proximity(double tau, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "zero count: lambda+- nearly vanish on the real axis at tau = " << tau
     << " (|lambda| = " << value
     << "); the parameter point is too close to the D+/D- boundary";
  throw NumericError(os.str());
}

struct ArgAccumulator {
  double plus = 0.0;
  double minus = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  double tau_at_min = 0.0;

  void note(const TrackSample& s) {
    const double m = std::min(std::abs(s.plus), std::abs(s.minus));
    if (m < min_abs) {
      min_abs = m;
      tau_at_min = s.t;
    }
    if (m < kProximity) throw_proximity(s.t, m);
  }
};

void accumulate(const TrackSample& s1, const TrackSample& s2, int depth,
                const PlasmaParams& p, ArgAccumulator& acc) {
  if (segment_resolved(s1, s2)) {
    acc.plus += std::arg(s2.plus / s1.plus);
    acc.minus += std::arg(s2.minus / s1.minus);
    return;
  }
  if (depth >= kMaxWindingDepth) throw_proximity(s1.t, acc.min_abs);
  const TrackSample mid = track_at(0.5 * (s1.t + s2.t), p);
  acc.note(mid);
  accumulate(s1, mid, depth + 1, p, acc);
  accumulate(mid, s2, depth + 1, p, acc);
}

std::optional<cplx> newton_zero(cplx z, const PlasmaParams& p) {
  for (int it = 0; it < 100; ++it) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
        std::abs(z) > 1e15 || std::abs(z.imag()) <= 1e-13 * std::abs(z)) {
      return std::nullopt;
    }
    const DispersionSample s = sample_lambda(z, p);
    if (s.lambda_prime == cplx(0.0, 0.0)) return std::nullopt;
    cplx dz = s.lambda / s.lambda_prime;
    const double limit = 0.5 * std::abs(z) + 1.0;
    if (std::abs(dz) > limit) dz *= limit / std::abs(dz);
    z -= dz;
    if (std::abs(dz) <= 1e-15 * std::abs(z)) break;
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      std::abs(z.imag()) <= 1e-12 * std::abs(z)) {
    return std::nullopt;
  }
  if (std::abs(eval_lambda(z, p)) >= 1e-10) return std::nullopt;
  if (z.real() < 0.0) z = -z;
  return z;
}

void insert_unique(std::vector<cplx>& zeros, cplx z) {
  for (const cplx& q : zeros) {
    if (std::abs(q - z) <= 1e-7 * std::max(1.0, std::abs(z))) return;
  }
  zeros.push_back(z);
}

}  // namespace

WindingInfo winding_count(const PlasmaParams& p) {
  double cut = kContourCut;
  ArgAccumulator acc;
  TrackSample prev = track_at(0.0, p);
  acc.note(prev);
  constexpr int kInitialSegments = 64;
  double start = 0.0;
  for (;;) {
    for (int i = 1; i <= kInitialSegments; ++i) {
      const TrackSample next =
          track_at(start + (cut - start) * i / kInitialSegments, p);
      acc.note(next);
      accumulate(prev, next, 0, p, acc);
      prev = next;
    }
    // Beyond the cut lambda+ and lambda- must coincide for the two banks to
    // cancel.
    if (std::abs(prev.plus / prev.minus - 1.0) < 1e-9) break;
    if (cut >= kMaxContourCut) throw_proximity(cut, acc.min_abs);
    start = cut;
    cut = std::min(2.0 * cut, kMaxContourCut);
  }

  WindingInfo info;
  info.winding = (acc.plus - acc.minus) / (2.0 * kPi);
  info.min_abs_lambda = acc.min_abs;
  info.tau_at_min = acc.tau_at_min;
  const double rounded = std::round(info.winding);
  if (std::abs(info.winding - rounded) > 1e-6) {
    std::ostringstream os;
    os.precision(17);
    os << "zero count: winding " << info.winding
       << " is not integral; closest approach near tau = " << acc.tau_at_min;
    throw NumericError(os.str());
  }
  info.pairs = 1 + static_cast<int>(rounded);
  return info;
}

int count_zero_pairs(const PlasmaParams& p) { return winding_count(p).pairs; }

Domain classify_domain(const PlasmaParams& p) {
  const int pairs = count_zero_pairs(p);
  if (pairs == 1) return Domain::d_minus;
  if (pairs == 2) return Domain::d_plus;
  throw NumericError("classification: unexpected number of zero pairs " +
                     std::to_string(pairs));
}

SpectrumInfo find_zeros(const PlasmaParams& p) {
  const int expected = count_zero_pairs(p);
  if (expected < 1 || expected > 2) {
    throw NumericError("find_zeros: winding count gives " +
                       std::to_string(expected) + " zero pairs");
  }

  std::vector<cplx> zeros;
  auto try_seed = [&](cplx seed) {
    if (auto z = newton_zero(seed, p)) insert_unique(zeros, *z);
  };

  // Large zero: lambda ~ 1 - a (z^2 + 1/2).
  cplx asym = std::sqrt(1.0 / p.a() - 0.5);
  if (asym.real() < 0.0) asym = -asym;
  if (asym.imag() == 0.0) asym += cplx(0.0, 1e-3 * std::abs(asym) + 1e-3);
  try_seed(asym);

  constexpr int kGrid = 50;
  for (int i = 0; i < kGrid; ++i) {
    const double re = 5.0 * (i + 1) / kGrid;
    for (int j = 0; j < kGrid; ++j) {
      const double im = -5.0 + 10.0 * (j + 0.5) / kGrid;
      try_seed({re, im});
    }
  }

  for (double r = 5.0; static_cast<int>(zeros.size()) < expected && r < 1e14;
       r *= 2.0) {
    constexpr int kRays = 24;
    for (int k = 0; k < kRays; ++k) {
      const double phi = -0.5 * kPi + kPi * (k + 0.5) / kRays;
      try_seed(std::polar(r, phi));
    }
  }

  if (static_cast<int>(zeros.size()) != expected) {
    std::ostringstream os;
    os.precision(17);
    os << "find_zeros: Newton search found " << zeros.size()
       << " zero(s) with Re > 0 but the winding count is " << expected
       << " (alpha = " << p.alpha() << ", Omega = " << p.omega() << ")";
    for (const cplx& z : zeros) os << "; zero " << z;
    throw NumericError(os.str());
  }

  std::sort(zeros.begin(), zeros.end(),
            [](cplx x, cplx y) { return std::abs(x) > std::abs(y); });
  SpectrumInfo info;
  info.classification =
      expected == 2 ? ZeroCount::four_zeros : ZeroCount::two_zeros;
  for (const cplx& z : zeros) {
    const DispersionSample s = sample_lambda(z, p);
    info.zeros.push_back(z);
    info.residuals.push_back(std::abs(s.lambda));
    info.lambda_prime.push_back(s.lambda_prime);
  }
  return info;
}

namespace {

struct BoundaryPoint {
  double log_alpha;
  double theta;  // arctan Omega
};

// lambda+(mu) is affine in a: lambda+ = 1 + a m with m = mu^3 Z(mu + i0).
cplx residual_at(const BoundaryPoint& s, cplx m) {
  const double alpha = std::exp(s.log_alpha);
  const cplx z0(1.0, -std::tan(s.theta));
  return 1.0 + cplx(0.0, -alpha) / (z0 * z0 * z0) * m;
}

std::optional<BoundaryPoint> boundary_newton(BoundaryPoint s, cplx m) {
  constexpr double kThetaMax = 0.5 * kPi;
  for (int it = 0; it < 80; ++it) {
    const double alpha = std::exp(s.log_alpha);
    const double omega = std::tan(s.theta);
    const cplx z0(1.0, -omega);
    const cplx z0_3 = z0 * z0 * z0;
    const cplx a = cplx(0.0, -alpha) / z0_3;
    const cplx f = 1.0 + a * m;
    if (std::abs(f) < 1e-14) return s;
    // d a / d ln(alpha) = a; d a / d Omega = 3 alpha / z0^4.
    const cplx df_du = a * m;
    const cplx df_dth = (1.0 + omega * omega) * 3.0 * alpha / (z0_3 * z0) * m;
    const double j11 = df_du.real(), j12 = df_dth.real();
    const double j21 = df_du.imag(), j22 = df_dth.imag();
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
    double du = -(f.real() * j22 - j12 * f.imag()) / det;
    double dth = -(j11 * f.imag() - j21 * f.real()) / det;
    const double scale = std::max({1.0, std::abs(du) / 2.0, std::abs(dth) / 0.2});
    du /= scale;
    dth /= scale;
    s.log_alpha += du;
    s.theta = std::clamp(s.theta + dth, 0.0, kThetaMax * (1.0 - 1e-12));
    if (!std::isfinite(s.log_alpha) || std::abs(s.log_alpha) > 700.0) {
      return std::nullopt;
    }
  }
  if (std::abs(residual_at(s, m)) < 1e-12) return s;
  return std::nullopt;
}

BoundaryPoint boundary_grid_seed(cplx m) {
  BoundaryPoint best{0.0, 0.25 * kPi};
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 160; ++i) {
    const double u = std::log(1e-4) + (std::log(1e12) - std::log(1e-4)) * i / 160;
    for (int j = 0; j < 90; ++j) {
      const BoundaryPoint s{u, 0.5 * kPi * (j + 0.5) / 90};
      const double v = std::abs(residual_at(s, m));
      if (v < best_val) {
        best_val = v;
        best = s;
      }
    }
  }
  return best;
}

}  // namespace

DomainBoundary trace_domain_boundary(DomainPlane plane, double mu_min,
                                     double mu_max, int n_points) {
  if (n_points < 2) throw ValidationError("domain trace needs at least 2 points");
  if (!std::isfinite(mu_min) || !std::isfinite(mu_max) || !(mu_max > mu_min)) {
    throw ValidationError("domain trace needs a finite range mu_min < mu_max");
  }
  DomainBoundary out;
  out.plane = plane;
  std::optional<BoundaryPoint> previous;
  constexpr double kSqrtPi = 1.7724538509055160273;
  for (int i = 0; i < n_points; ++i) {
    const double mu = mu_min + (mu_max - mu_min) * i / (n_points - 1);
    const cplx Z(-2.0 * detail::dawson(mu), kSqrtPi * std::exp(-mu * mu));
    const cplx m = mu * mu * mu * Z;
    std::optional<BoundaryPoint> sol;
    if (mu != 0.0 && std::abs(m) > 0.0) {
      if (previous) sol = boundary_newton(*previous, m);
      if (!sol) sol = boundary_newton(boundary_grid_seed(m), m);
    }
    if (!sol) {
      out.skipped_mu.push_back(mu);
      previous.reset();
      continue;
    }
    const double alpha = std::exp(sol->log_alpha);
    const double omega = std::tan(sol->theta);
    const PlasmaParams pp = PlasmaParams::from_alpha_omega(alpha, omega);
    const double res = std::abs(eval_boundary(mu, pp).lambda_plus);
    if (!(res < 1e-8)) {
      out.skipped_mu.push_back(mu);
      previous.reset();
      continue;
    }
    previous = sol;
    if (plane == DomainPlane::alpha_omega) {
      out.points.emplace_back(alpha, omega);
    } else {
      if (!(omega > 0.0)) {
        out.skipped_mu.push_back(mu);
        continue;
      }
      const FrequencyPair f = frequencies_from_params(pp);
      out.points.emplace_back(f.omega1, f.nu1);
    }
    out.mu_values.push_back(mu);
    out.residuals.push_back(res);
  }
  if (out.points.size() < 2) {
    throw NumericError("domain trace: fewer than two boundary points converged");
  }
  return out;
}

}  // namespace skin
