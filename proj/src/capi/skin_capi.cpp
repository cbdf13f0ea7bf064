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

#include "skin/skin.h"

#include <cmath>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/dispersion.hpp"
#include "core/error.hpp"
#include "core/factorization.hpp"
#include "core/solution.hpp"
#include "core/spectrum.hpp"

struct skin_params {
  skin::PlasmaParams p;
};

struct skin_spectrum {
  skin::SpectrumInfo info;
};

struct skin_boundary {
  skin::DomainBoundary b;
};

struct skin_factorization {
  skin::FactorizationContext ctx;
};

struct skin_solution {
  skin::PlasmaParams p;
  skin::QuadratureConfig cfg;
  skin_spectrum spectrum;
  skin::SolutionCoefficients coeffs;
};

namespace {

thread_local std::string g_last_error;

skin_status fail(skin_status s, const char* what) {
  g_last_error = what;
  return s;
}

// Runs body, translating exceptions into status codes.
template <typename F>
skin_status guarded(F&& body) {
  try {
    body();
    return SKIN_OK;
  } catch (const skin::Error& e) {
    switch (e.kind()) {
      case skin::ErrorKind::validation:
        return fail(SKIN_ERR_INVALID_ARGUMENT, e.what());
      case skin::ErrorKind::domain:
        return fail(SKIN_ERR_DOMAIN, e.what());
      case skin::ErrorKind::numeric:
        return fail(SKIN_ERR_NUMERIC, e.what());
    }
    return fail(SKIN_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SKIN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SKIN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SKIN_ERR_INTERNAL, "unknown error");
  }
}

template <typename... Ptrs>
void require(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) {
    throw skin::ValidationError("null pointer argument");
  }
}

skin::cplx load(const double z[2]) { return {z[0], z[1]}; }

void store(skin::cplx v, double out[2]) {
  out[0] = v.real();
  out[1] = v.imag();
}

skin::QuadratureConfig to_config(const skin_quad_config* c) {
  skin::QuadratureConfig cfg;
  if (c != nullptr) {
    cfg.rel_tol = c->rel_tol;
    cfg.abs_tol = c->abs_tol;
    cfg.max_depth = c->max_depth;
    cfg.tail_cut = c->tail_cut;
    cfg.pv_excision = c->pv_excision;
  }
  cfg.validate();
  return cfg;
}

}  // namespace

extern "C" {

const char* skin_version(void) { return SKIN_VERSION_STRING; }

const char* skin_last_error(void) { return g_last_error.c_str(); }

const char* skin_status_string(skin_status status) {
  switch (status) {
    case SKIN_OK:
      return "ok";
    case SKIN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SKIN_ERR_DOMAIN:
      return "domain error";
    case SKIN_ERR_NUMERIC:
      return "numeric failure";
    case SKIN_ERR_OUT_OF_RANGE:
      return "index out of range";
    case SKIN_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

skin_quad_config skin_quad_config_default(void) {
  const skin::QuadratureConfig d;
  return {d.rel_tol, d.abs_tol, d.max_depth, d.tail_cut, d.pv_excision};
}

skin_status skin_params_create(double alpha, double omega, skin_params** out) {
  return guarded([&] {
    require(out);
    *out = new skin_params{skin::PlasmaParams::from_alpha_omega(alpha, omega)};
  });
}

skin_status skin_params_from_frequencies(double omega1, double nu1,
                                         skin_params** out) {
  return guarded([&] {
    require(out);
    *out = new skin_params{skin::params_from_frequencies({omega1, nu1})};
  });
}

void skin_params_destroy(skin_params* p) { delete p; }

skin_status skin_params_get(const skin_params* p, double* alpha, double* omega,
                            double z0[2], double a[2]) {
  return guarded([&] {
    require(p);
    if (alpha) *alpha = p->p.alpha();
    if (omega) *omega = p->p.omega();
    if (z0) store(p->p.z0(), z0);
    if (a) store(p->p.a(), a);
  });
}

skin_status skin_params_frequencies(const skin_params* p, double* omega1,
                                    double* nu1) {
  return guarded([&] {
    require(p, omega1, nu1);
    const skin::FrequencyPair f = skin::frequencies_from_params(p->p);
    *omega1 = f.omega1;
    *nu1 = f.nu1;
  });
}

skin_status skin_lambda(const skin_params* p, const double z[2],
                        double out[2]) {
  return guarded([&] {
    require(p, z, out);
    store(skin::eval_lambda(load(z), p->p), out);
  });
}

skin_status skin_lambda_prime(const skin_params* p, const double z[2],
                              double out[2]) {
  return guarded([&] {
    require(p, z, out);
    store(skin::eval_lambda_prime(load(z), p->p), out);
  });
}

skin_status skin_lambda_boundary(const skin_params* p, double eta,
                                 double plus[2], double minus[2]) {
  return guarded([&] {
    require(p, plus, minus);
    const skin::BoundaryValues b = skin::eval_boundary(eta, p->p);
    store(b.lambda_plus, plus);
    store(b.lambda_minus, minus);
  });
}

skin_status skin_winding(const skin_params* p, int* pairs, double* winding) {
  return guarded([&] {
    require(p, pairs);
    const skin::WindingInfo w = skin::winding_count(p->p);
    *pairs = w.pairs;
    if (winding) *winding = w.winding;
  });
}

skin_status skin_spectrum_create(const skin_params* p, skin_spectrum** out) {
  return guarded([&] {
    require(p, out);
    *out = new skin_spectrum{skin::find_zeros(p->p)};
  });
}

void skin_spectrum_destroy(skin_spectrum* s) { delete s; }

size_t skin_spectrum_size(const skin_spectrum* s) {
  return s ? s->info.zeros.size() : 0;
}

skin_status skin_spectrum_zero(const skin_spectrum* s, size_t k, double eta[2],
                               double lambda_prime[2], double* residual) {
  try {
    require(s);
  } catch (const skin::Error& e) {
    return fail(SKIN_ERR_INVALID_ARGUMENT, e.what());
  }
  if (k >= s->info.zeros.size()) {
    return fail(SKIN_ERR_OUT_OF_RANGE, "zero index out of range");
  }
  if (eta) store(s->info.zeros[k], eta);
  if (lambda_prime) store(s->info.lambda_prime[k], lambda_prime);
  if (residual) *residual = s->info.residuals[k];
  return SKIN_OK;
}

skin_status skin_boundary_trace(skin_plane plane, double mu_min, double mu_max,
                                int n_points, skin_boundary** out) {
  return guarded([&] {
    require(out);
    skin::DomainPlane dp;
    switch (plane) {
      case SKIN_PLANE_ALPHA_OMEGA:
        dp = skin::DomainPlane::alpha_omega;
        break;
      case SKIN_PLANE_OMEGA1_NU1:
        dp = skin::DomainPlane::omega1_nu1;
        break;
      default:
        throw skin::ValidationError("unknown parameter plane");
    }
    *out = new skin_boundary{
        skin::trace_domain_boundary(dp, mu_min, mu_max, n_points)};
  });
}

void skin_boundary_destroy(skin_boundary* b) { delete b; }

size_t skin_boundary_size(const skin_boundary* b) {
  return b ? b->b.points.size() : 0;
}

size_t skin_boundary_skipped(const skin_boundary* b) {
  return b ? b->b.skipped_mu.size() : 0;
}

skin_status skin_boundary_point(const skin_boundary* b, size_t k, double* x,
                                double* y, double* mu, double* residual) {
  if (b == nullptr) return fail(SKIN_ERR_INVALID_ARGUMENT, "null boundary");
  if (k >= b->b.points.size()) {
    return fail(SKIN_ERR_OUT_OF_RANGE, "boundary point index out of range");
  }
  if (x) *x = b->b.points[k].first;
  if (y) *y = b->b.points[k].second;
  if (mu) *mu = b->b.mu_values[k];
  if (residual) *residual = b->b.residuals[k];
  return SKIN_OK;
}

skin_status skin_factorization_create(const skin_params* p,
                                      const skin_quad_config* cfg,
                                      skin_factorization** out) {
  return guarded([&] {
    require(p, out);
    *out = new skin_factorization{
        skin::FactorizationContext(p->p, to_config(cfg))};
  });
}

void skin_factorization_destroy(skin_factorization* f) { delete f; }

int skin_factorization_index(const skin_factorization* f) {
  return f ? f->ctx.index() : -1;
}

skin_status skin_factorization_G(const skin_factorization* f, double tau,
                                 double out[2]) {
  return guarded([&] {
    require(f, out);
    if (!(tau >= 0.0)) throw skin::DomainError("G needs tau >= 0");
    store(f->ctx.eval_G(tau), out);
  });
}

skin_status skin_factorization_V(const skin_factorization* f,
                                 const double z[2], double out[2]) {
  return guarded([&] {
    require(f, z, out);
    store(f->ctx.eval_V(load(z)), out);
  });
}

skin_status skin_factorization_X(const skin_factorization* f,
                                 const double z[2], double out[2]) {
  return guarded([&] {
    require(f, z, out);
    store(f->ctx.eval_X(load(z)), out);
  });
}

skin_status skin_factorization_X1(const skin_factorization* f,
                                  const double z[2], double out[2]) {
  return guarded([&] {
    require(f, z, out);
    store(f->ctx.eval_X1(load(z)), out);
  });
}

skin_status skin_factorization_check(const skin_factorization* f,
                                     const skin_spectrum* s, const double z[2],
                                     double* residual) {
  return guarded([&] {
    require(f, s, z, residual);
    *residual = skin::check_factorization(load(z), f->ctx, s->info);
  });
}

skin_status skin_factorization_zero(const skin_factorization* f,
                                    const double z_ref[2], double out[2]) {
  return guarded([&] {
    require(f, z_ref, out);
    store(skin::zero_from_factorization(f->ctx, load(z_ref)), out);
  });
}

skin_status skin_solution_create(const skin_params* p,
                                 const skin_quad_config* cfg,
                                 skin_solution** out) {
  return guarded([&] {
    require(p, out);
    const skin::QuadratureConfig c = to_config(cfg);
    skin::SpectrumInfo spec = skin::find_zeros(p->p);
    skin::SolutionCoefficients coeffs = skin::coefficients(p->p, spec, c);
    *out = new skin_solution{p->p, c, skin_spectrum{std::move(spec)},
                             std::move(coeffs)};
  });
}

void skin_solution_destroy(skin_solution* s) { delete s; }

const skin_spectrum* skin_solution_spectrum(const skin_solution* s) {
  return s ? &s->spectrum : nullptr;
}

skin_status skin_solution_I(const skin_solution* s, double out[2]) {
  return guarded([&] {
    require(s, out);
    store(s->coeffs.I_norm(), out);
  });
}

skin_status skin_solution_coefficient(const skin_solution* s, size_t k,
                                      double out[2]) {
  if (s == nullptr || out == nullptr) {
    return fail(SKIN_ERR_INVALID_ARGUMENT, "null pointer argument");
  }
  if (k >= s->coeffs.A_discrete().size()) {
    return fail(SKIN_ERR_OUT_OF_RANGE, "coefficient index out of range");
  }
  store(s->coeffs.A_discrete()[k], out);
  return SKIN_OK;
}

skin_status skin_solution_A(const skin_solution* s, double eta, double out[2]) {
  return guarded([&] {
    require(s, out);
    store(s->coeffs.A_continuous(eta), out);
  });
}

skin_status skin_solution_field(const skin_solution* s, const double* x,
                                size_t n, double* e_discrete,
                                double* e_continuous, int* converged) {
  return guarded([&] {
    require(s, e_discrete, e_continuous);
    if (n > 0) require(x);
    const std::vector<double> grid(x, x + n);
    const skin::FieldProfile f = skin::field_profile(
        s->p, s->spectrum.info, s->coeffs, grid, s->cfg);
    for (size_t i = 0; i < n; ++i) {
      store(f.e_discrete[i], e_discrete + 2 * i);
      store(f.e_continuous[i], e_continuous + 2 * i);
      if (converged) converged[i] = f.converged[i] ? 1 : 0;
    }
  });
}

skin_status skin_solution_distribution(const skin_solution* s, double x,
                                       const double* mu, size_t n,
                                       double* h_discrete,
                                       double* h_continuous, int* flagged) {
  return guarded([&] {
    require(s, h_discrete, h_continuous);
    if (n > 0) require(mu);
    if (!std::isfinite(x) || x < 0.0) {
      throw skin::ValidationError("depth x must be finite and nonnegative");
    }
    const std::vector<double> grid(mu, mu + n);
    const skin::DistributionSlice d =
        x == 0.0 ? skin::distribution_boundary(s->p, s->spectrum.info,
                                               s->coeffs, grid, s->cfg)
                 : skin::distribution_profile(s->p, s->spectrum.info,
                                              s->coeffs, x, grid, s->cfg);
    for (size_t i = 0; i < n; ++i) {
      store(d.h_discrete[i], h_discrete + 2 * i);
      store(d.h_continuous[i], h_continuous + 2 * i);
      if (flagged) flagged[i] = d.flagged[i] ? 1 : 0;
    }
  });
}

skin_status skin_solution_impedance(const skin_solution* s,
                                    const skin_physical_scales* scales,
                                    double e_prime[2], double z_reduced[2],
                                    double z_physical[2]) {
  return guarded([&] {
    require(s);
    std::optional<skin::PhysicalScales> sc;
    if (scales) {
      require(z_physical);
      sc = skin::PhysicalScales{scales->nu, scales->ell, scales->c_light,
                                scales->omega};
    }
    const skin::ImpedanceResult r =
        skin::impedance(s->p, s->spectrum.info, s->coeffs, s->cfg, sc);
    if (e_prime) store(r.e_prime_at_0, e_prime);
    if (z_reduced) store(r.z_reduced, z_reduced);
    if (r.z_physical) store(*r.z_physical, z_physical);
  });
}

}  // extern "C"
