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

#include "core/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace skin {

namespace {

// Kronrod 21-point abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478309, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651146};

// Hard cap on integrand evaluations per call.
constexpr std::size_t kMaxEvaluations = 20'000'000;

struct Panel {
  double lo;
  double hi;
  int depth;
  cplx value;
  double error;
  double l1;
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const {
    return a.error < b.error;
  }
};

cplx sample(const Integrand& f, double t) {
  const cplx v = f(t);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at t = " << t;
    throw NumericError(os.str());
  }
  return v;
}

Panel kronrod21(const Integrand& f, double lo, double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const cplx fc = sample(f, center);
  cplx kron = fc * kWgk[10];
  cplx gauss(0.0, 0.0);
  double l1 = std::abs(fc) * kWgk[10];
  for (int i = 0; i < 10; ++i) {
    const double dx = half * kXgk[i];
    const cplx f1 = sample(f, center - dx);
    const cplx f2 = sample(f, center + dx);
    kron += kWgk[i] * (f1 + f2);
    l1 += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  return {lo, hi, depth, kron * half, std::abs((kron - gauss) * half),
          l1 * std::abs(half)};
}

void check_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    std::ostringstream os;
    os << "quadrature interval [" << lo << ", " << hi << "] is invalid";
    throw DomainError(os.str());
  }
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_cut > 0.0) ||
      !(pv_excision > 0.0) || !std::isfinite(rel_tol) ||
      !std::isfinite(abs_tol) || !std::isfinite(tail_cut) ||
      !std::isfinite(pv_excision)) {
    throw ValidationError(
        "quadrature tolerances, tail cut and excision must be positive");
  }
  if (max_depth < 1) throw ValidationError("quadrature max_depth must be >= 1");
}

QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                    const QuadratureConfig& cfg,
                                    std::span<const double> breakpoints,
                                    ErrorTarget target) {
  check_interval(lo, hi);
  std::vector<double> cuts{lo};
  for (double b : breakpoints) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel, std::vector<Panel>, ByError> active;
  std::vector<Panel> finished;
  std::size_t evaluations = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    active.push(kronrod21(f, cuts[i], cuts[i + 1], 0));
    evaluations += 21;
  }

  auto totals = [&]() {
    QuadratureResult r;
    auto add = [&r](const Panel& p) {
      r.value += p.value;
      r.error += p.error;
      r.l1 += p.l1;
    };
    for (const Panel& p : finished) add(p);
    // priority_queue has no iteration; copy is cheap relative to sampling.
    auto copy = active;
    while (!copy.empty()) {
      add(copy.top());
      copy.pop();
    }
    return r;
  };

  QuadratureResult running = totals();
  bool converged = true;
  std::size_t since_refresh = 0;
  while (!active.empty()) {
    const double scale =
        target == ErrorTarget::value ? std::abs(running.value) : running.l1;
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * scale);
    if (running.error <= tol) {
      // Refresh to shed accumulated rounding before accepting.
      running = totals();
      const double s2 =
          target == ErrorTarget::value ? std::abs(running.value) : running.l1;
      if (running.error <= std::max(cfg.abs_tol, cfg.rel_tol * s2)) break;
    }
    if (evaluations >= kMaxEvaluations) {
      converged = false;
      break;
    }
    Panel worst = active.top();
    active.pop();
    if (worst.depth >= cfg.max_depth) {
      converged = false;
      finished.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = kronrod21(f, worst.lo, mid, worst.depth + 1);
    const Panel right = kronrod21(f, mid, worst.hi, worst.depth + 1);
    evaluations += 42;
    running.value += left.value + right.value - worst.value;
    running.error += left.error + right.error - worst.error;
    running.l1 += left.l1 + right.l1 - worst.l1;
    active.push(left);
    active.push(right);
    if (++since_refresh == 4096) {
      running = totals();
      since_refresh = 0;
    }
  }

  // Fixed summation order: left to right.
  std::vector<Panel> all = std::move(finished);
  while (!active.empty()) {
    all.push_back(active.top());
    active.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  QuadratureResult out;
  for (const Panel& p : all) {
    out.value += p.value;
    out.error += p.error;
    out.l1 += p.l1;
  }
  out.converged = converged;
  out.evaluations = evaluations;
  return out;
}

QuadratureResult integrate_to_infinity(const Integrand& f, double lo,
                                       double split,
                                       const QuadratureConfig& cfg,
                                       std::span<const double> breakpoints,
                                       ErrorTarget target) {
  if (!(split > lo) || !(split > 0.0) || !std::isfinite(split)) {
    throw DomainError("semi-infinite quadrature needs 0 < split and lo < split");
  }
  QuadratureResult head =
      integrate_adaptive(f, lo, split, cfg, breakpoints, target);
  // t = split / u maps [split, inf) onto (0, 1]; dt = split / u^2 du.
  std::vector<double> mapped;
  for (double b : breakpoints) {
    if (b > split) mapped.push_back(split / b);
  }
  const Integrand g = [&f, split](double u) {
    return f(split / u) * (split / (u * u));
  };
  head += integrate_adaptive(g, 0.0, 1.0, cfg, mapped, target);
  return head;
}

QuadratureResult integrate_principal_value(const Integrand& f, double pole,
                                           double lo, double hi,
                                           const QuadratureConfig& cfg,
                                           std::span<const double> breakpoints,
                                           ErrorTarget target) {
  check_interval(lo, hi);
  if (!(pole > lo) || !(pole < hi)) {
    std::ostringstream os;
    os.precision(17);
    os << "principal value: pole " << pole << " is not strictly inside ["
       << lo << ", " << hi << "]";
    throw DomainError(os.str());
  }
  const double reach = std::min(pole - lo, hi - pole);
  const double r = std::min(cfg.pv_excision, 0.25 * reach);

  const Integrand folded = [&f, pole](double t) {
    return (f(pole + t) - f(pole - t)) / t;
  };
  const Integrand with_pole = [&f, pole](double t) { return f(t) / (t - pole); };

  // Breakpoints become offsets from the pole for the folded part.
  std::vector<double> offsets;
  for (double b : breakpoints) {
    const double d = std::abs(b - pole);
    if (d > r && d < reach) offsets.push_back(d);
  }

  QuadratureResult out = integrate_adaptive(folded, r, reach, cfg, offsets, target);
  out += integrate_adaptive(folded, 0.0, r, cfg, {}, target);
  if (pole - reach > lo) {
    out += integrate_adaptive(with_pole, lo, pole - reach, cfg, breakpoints,
                              target);
  }
  if (pole + reach < hi) {
    out += integrate_adaptive(with_pole, pole + reach, hi, cfg, breakpoints,
                              target);
  }
  return out;
}

}  // namespace skin
