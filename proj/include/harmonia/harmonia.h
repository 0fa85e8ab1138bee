/* harmonia - volume-density calculus on harmonic model spaces.
 *
 * C interface of the shared library.  Objects are opaque handles created
 * and destroyed through this API; every function returns a status code and
 * writes results through out parameters.  On failure a thread-local message
 * is available from harmonia_last_error().
 */

#ifndef HARMONIA_H
#define HARMONIA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct harmonia_space harmonia_space;
typedef struct harmonia_green harmonia_green;

typedef enum harmonia_status {
    HARMONIA_OK = 0,
    HARMONIA_ERR_INVALID_ARGUMENT = 1,
    HARMONIA_ERR_UNSUPPORTED = 2,   /* documented domain errors, e.g. no Green kernel */
    HARMONIA_ERR_RUNTIME = 3
} harmonia_status;

typedef enum harmonia_growth_class {
    HARMONIA_GROWTH_POLYNOMIAL = 0,
    HARMONIA_GROWTH_PURELY_EXPONENTIAL = 1
} harmonia_growth_class;

/* Library version string, e.g. "1.0.0". */
const char* harmonia_version(void);

/* Message describing the most recent failure on this thread. */
const char* harmonia_last_error(void);

/* Override one configuration key ("node_count", "green_tail_cut", ...). */
harmonia_status harmonia_config_set(const char* key, const char* value);

/* Release a string returned by this API. */
void harmonia_string_free(char* s);

/* ------------------------------------------------------------- catalog -- */

/* kind: "euclidean" | "real_hyperbolic" | "complex_hyperbolic" |
 * "rank1_model".  For rank1_model pass n_eigen Jacobi eigenvalues with
 * multiplicities summing to dim-1; other kinds ignore the arrays. */
harmonia_status harmonia_space_create(const char* kind, int dim,
                                      const double* eigenvalues,
                                      const int* multiplicities, int n_eigen,
                                      harmonia_space** out);
void harmonia_space_destroy(harmonia_space* space);

harmonia_status harmonia_space_density(const harmonia_space* space, double r,
                                       double* f, double* f1, double* f2);
harmonia_status harmonia_space_mean_curvature(const harmonia_space* space,
                                              double* h);
harmonia_status harmonia_space_ricci(const harmonia_space* space, double* ricci);
harmonia_status harmonia_space_sphere_volume(const harmonia_space* space,
                                             double r, double* volume);
harmonia_status harmonia_space_growth_exponents(const harmonia_space* space,
                                                int* m, double* h, double* c);
harmonia_status harmonia_space_classify_growth(const harmonia_space* space,
                                               harmonia_growth_class* cls);

/* ------------------------------------------------------ radial calculus -- */

harmonia_status harmonia_mu(const harmonia_space* space, double r, double* out);
harmonia_status harmonia_sphere_eigenvalue(const harmonia_space* space,
                                           double r, double* out);
harmonia_status harmonia_sphere_scalar_curvature(const harmonia_space* space,
                                                 double r, double* out);
harmonia_status harmonia_horosphere_scalar_curvature(
    const harmonia_space* space, double* out);

/* -------------------------------------------------------- green kernel -- */

harmonia_status harmonia_green_create(const harmonia_space* space,
                                      harmonia_green** out);
void harmonia_green_destroy(harmonia_green* kernel);
harmonia_status harmonia_green_radial(const harmonia_green* kernel, double r,
                                      double* out);
harmonia_status harmonia_green_martin_ratio(const harmonia_green* kernel,
                                            double a, double s, double* out);
/* Fundamental-solution residual for the built-in bump test function. */
harmonia_status harmonia_green_fundamental_residual(
    const harmonia_green* kernel, double* out);

/* ----------------------------------------------------------- disk model -- */

harmonia_status harmonia_disk_distance(double z_re, double z_im, double w_re,
                                       double w_im, double* out);
harmonia_status harmonia_disk_busemann(double xi_theta, double z_re,
                                       double z_im, double* out);
harmonia_status harmonia_disk_gromov(double x_re, double x_im, double y_re,
                                     double y_im, double p_re, double p_im,
                                     double* out);
harmonia_status harmonia_disk_divergence(double alpha, double t,
                                         double* actual, double* bound);

/* ------------------------------------------------------ boundary values -- */

/* phi_expr: sums of k*theta harmonics, e.g. "cos(2*theta)+0.5". */
harmonia_status harmonia_dirichlet_solve(const char* phi_expr, double z_re,
                                         double z_im, int node_count,
                                         double* out);
/* Averages of H_phi over horocycle arcs; out_averages must hold n_arcs. */
harmonia_status harmonia_mean_value_at_infinity(const char* phi_expr,
                                                double xi_theta,
                                                const double* arc_lengths,
                                                int n_arcs,
                                                double* out_averages);

/* ------------------------------------------------------------- fitting -- */

/* Fit the space density on [t0, t1] with spacing dt; returns a JSON
 * description of the recovered exponential-polynomial terms. */
harmonia_status harmonia_fit_density(const harmonia_space* space, double t0,
                                     double t1, double dt, char** json_out);

/* --------------------------------------------------------- suites, I/O -- */

/* suite: "radial" | "jacobi" | "green" | "disk" | "poisson" | "all".
 * space may be NULL for disk/poisson (and for jacobi when eigenvalues are
 * given).  grid is an optional "a:b:step" radius grid for the radial rows
 * (NULL for the default).  Returns the JSON report and whether every check
 * passed. */
harmonia_status harmonia_run_suite(const char* suite,
                                   const harmonia_space* space,
                                   const double* eigenvalues,
                                   const int* multiplicities, int n_eigen,
                                   double tmax, const char* grid,
                                   int parallel, char** json_out,
                                   int* all_pass);

/* Same run, emitted as CSV rows (r, quantity, value, reference, residual). */
harmonia_status harmonia_run_suite_csv(const char* suite,
                                       const harmonia_space* space,
                                       const double* eigenvalues,
                                       const int* multiplicities, int n_eigen,
                                       double tmax, const char* grid,
                                       int parallel, char** csv_out,
                                       int* all_pass);

/* quantity: "density" | "mu" | "green" | "eigenvalue" | "scal_sphere" |
 * "martin_ratio"; format: "csv" | "json".  Byte-deterministic output. */
harmonia_status harmonia_emit_table(const harmonia_space* space,
                                    const char* quantity, double lo, double hi,
                                    double step, const char* format,
                                    double martin_a, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HARMONIA_H */
