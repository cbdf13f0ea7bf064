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

/*
 * C interface to the skin-effect solver.
 *
 * Objects are opaque handles created by skin_*_create and released by the
 * matching skin_*_destroy. Every fallible call returns a skin_status; on
 * failure the message is available from skin_last_error() on the calling
 * thread until the next failing call. Complex numbers cross the boundary as
 * double[2] = {re, im}.
 */

#ifndef SKIN_SKIN_H
#define SKIN_SKIN_H

#include <stddef.h>

#if defined(SKIN_BUILDING_LIBRARY)
#define SKIN_API __attribute__((visibility("default")))
#else
#define SKIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skin_status {
  SKIN_OK = 0,
  SKIN_ERR_INVALID_ARGUMENT = 1, /* bad parameters, grids or null pointers */
  SKIN_ERR_DOMAIN = 2,           /* argument outside an operation's domain */
  SKIN_ERR_NUMERIC = 3,          /* quadrature, root finding or tracing failed */
  SKIN_ERR_OUT_OF_RANGE = 4,     /* index past the end of a result */
  SKIN_ERR_INTERNAL = 5
} skin_status;

typedef struct skin_params skin_params;
typedef struct skin_spectrum skin_spectrum;
typedef struct skin_boundary skin_boundary;
typedef struct skin_factorization skin_factorization;
typedef struct skin_solution skin_solution;

typedef struct skin_quad_config {
  double rel_tol;
  double abs_tol;
  int max_depth;
  double tail_cut;
  double pv_excision;
} skin_quad_config;

typedef struct skin_physical_scales {
  double nu;      /* collision frequency */
  double ell;     /* mean free path */
  double c_light; /* speed of light in ell units per second */
  double omega;   /* field angular frequency */
} skin_physical_scales;

typedef enum skin_plane {
  SKIN_PLANE_ALPHA_OMEGA = 0,
  SKIN_PLANE_OMEGA1_NU1 = 1
} skin_plane;

SKIN_API const char* skin_version(void);
SKIN_API const char* skin_last_error(void);
SKIN_API const char* skin_status_string(skin_status status);
SKIN_API skin_quad_config skin_quad_config_default(void);

/* Parameters. alpha > 0, omega >= 0. */
SKIN_API skin_status skin_params_create(double alpha, double omega,
                                        skin_params** out);
SKIN_API skin_status skin_params_from_frequencies(double omega1, double nu1,
                                                  skin_params** out);
SKIN_API void skin_params_destroy(skin_params* p);
SKIN_API skin_status skin_params_get(const skin_params* p, double* alpha,
                                     double* omega, double z0[2], double a[2]);
SKIN_API skin_status skin_params_frequencies(const skin_params* p,
                                             double* omega1, double* nu1);

/* Dispersion function off the real axis and its boundary values on it. */
SKIN_API skin_status skin_lambda(const skin_params* p, const double z[2],
                                 double out[2]);
SKIN_API skin_status skin_lambda_prime(const skin_params* p, const double z[2],
                                       double out[2]);
SKIN_API skin_status skin_lambda_boundary(const skin_params* p, double eta,
                                          double plus[2], double minus[2]);

/* Zeros of the dispersion function. */
SKIN_API skin_status skin_winding(const skin_params* p, int* pairs,
                                  double* winding);
SKIN_API skin_status skin_spectrum_create(const skin_params* p,
                                          skin_spectrum** out);
SKIN_API void skin_spectrum_destroy(skin_spectrum* s);
SKIN_API size_t skin_spectrum_size(const skin_spectrum* s);
SKIN_API skin_status skin_spectrum_zero(const skin_spectrum* s, size_t k,
                                        double eta[2], double lambda_prime[2],
                                        double* residual);

/* Boundary of the four-zero domain, traced over mu in [mu_min, mu_max]. */
SKIN_API skin_status skin_boundary_trace(skin_plane plane, double mu_min,
                                         double mu_max, int n_points,
                                         skin_boundary** out);
SKIN_API void skin_boundary_destroy(skin_boundary* b);
SKIN_API size_t skin_boundary_size(const skin_boundary* b);
SKIN_API skin_status skin_boundary_point(const skin_boundary* b, size_t k,
                                         double* x, double* y, double* mu,
                                         double* residual);
SKIN_API size_t skin_boundary_skipped(const skin_boundary* b);

/* Factorization lambda = a (eta0^2 - z^2) X(z) X(-z) and its variants. */
SKIN_API skin_status skin_factorization_create(const skin_params* p,
                                               const skin_quad_config* cfg,
                                               skin_factorization** out);
SKIN_API void skin_factorization_destroy(skin_factorization* f);
SKIN_API int skin_factorization_index(const skin_factorization* f);
SKIN_API skin_status skin_factorization_G(const skin_factorization* f,
                                          double tau, double out[2]);
SKIN_API skin_status skin_factorization_V(const skin_factorization* f,
                                          const double z[2], double out[2]);
SKIN_API skin_status skin_factorization_X(const skin_factorization* f,
                                          const double z[2], double out[2]);
SKIN_API skin_status skin_factorization_X1(const skin_factorization* f,
                                           const double z[2], double out[2]);
SKIN_API skin_status skin_factorization_check(const skin_factorization* f,
                                              const skin_spectrum* s,
                                              const double z[2],
                                              double* residual);
SKIN_API skin_status skin_factorization_zero(const skin_factorization* f,
                                             const double z_ref[2],
                                             double out[2]);

/* Solution: zeros, normalization and expansion coefficients for one point. */
SKIN_API skin_status skin_solution_create(const skin_params* p,
                                          const skin_quad_config* cfg,
                                          skin_solution** out);
SKIN_API void skin_solution_destroy(skin_solution* s);
SKIN_API const skin_spectrum* skin_solution_spectrum(const skin_solution* s);
SKIN_API skin_status skin_solution_I(const skin_solution* s, double out[2]);
SKIN_API skin_status skin_solution_coefficient(const skin_solution* s,
                                               size_t k, double out[2]);
SKIN_API skin_status skin_solution_A(const skin_solution* s, double eta,
                                     double out[2]);

/*
 * Field e(x) on an ascending grid. e_discrete and e_continuous receive 2*n
 * doubles each (interleaved re, im); converged receives n flags and may be
 * null.
 */
SKIN_API skin_status skin_solution_field(const skin_solution* s,
                                         const double* x, size_t n,
                                         double* e_discrete,
                                         double* e_continuous,
                                         int* converged);

/*
 * Distribution h(x, mu). x = 0 uses the closed boundary form, x > 0 the
 * eigenfunction expansion. Output layout as for skin_solution_field.
 */
SKIN_API skin_status skin_solution_distribution(const skin_solution* s,
                                                double x, const double* mu,
                                                size_t n, double* h_discrete,
                                                double* h_continuous,
                                                int* flagged);

/* scales may be null; z_physical is then left untouched. */
SKIN_API skin_status skin_solution_impedance(const skin_solution* s,
                                             const skin_physical_scales* scales,
                                             double e_prime[2],
                                             double z_reduced[2],
                                             double z_physical[2]);

#ifdef __cplusplus
}
#endif

#endif /* SKIN_SKIN_H */
