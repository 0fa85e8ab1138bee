#include "harmonia/harmonia.h"

#include <cstring>
#include <exception>
#include <string>

#include "config.hpp"
#include "disk.hpp"
#include "exppoly.hpp"
#include "green.hpp"
#include "model_space.hpp"
#include "poisson.hpp"
#include "radial.hpp"
#include "report.hpp"

#include <json.hpp>

namespace {

thread_local std::string g_last_error;

harmonia_status fail(harmonia_status code, const char* what)
{
    g_last_error = what;
    return code;
}

template <typename F>
harmonia_status guard(F&& fn)
{
    try {
        fn();
        return HARMONIA_OK;
    } catch (const std::invalid_argument& e) {
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(HARMONIA_ERR_UNSUPPORTED, e.what());
    } catch (const std::exception& e) {
        return fail(HARMONIA_ERR_RUNTIME, e.what());
    }
}

char* dupString(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<harmonia::CurvatureEigen> eigenList(const double* eigenvalues,
                                                const int* multiplicities,
                                                int n_eigen)
{
    std::vector<harmonia::CurvatureEigen> out;
    for (int i = 0; i < n_eigen; ++i)
        out.push_back({eigenvalues[i], multiplicities[i]});
    return out;
}

}  // namespace

struct harmonia_space {
    harmonia::ModelSpace space;
};

struct harmonia_green {
    harmonia::GreenKernel kernel;
};

extern "C" {

const char* harmonia_version(void) { return "1.0.0"; }

const char* harmonia_last_error(void) { return g_last_error.c_str(); }

harmonia_status harmonia_config_set(const char* key, const char* value)
{
    if (!key || !value)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null config key or value");
    return guard([&] { harmonia::Config::global().set(key, value); });
}

void harmonia_string_free(char* s) { delete[] s; }

harmonia_status harmonia_space_create(const char* kind, int dim,
                                      const double* eigenvalues,
                                      const int* multiplicities, int n_eigen,
                                      harmonia_space** out)
{
    if (!kind || !out || (n_eigen > 0 && (!eigenvalues || !multiplicities)))
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *out = new harmonia_space{harmonia::makeSpace(
            kind, dim, eigenList(eigenvalues, multiplicities, n_eigen))};
    });
}

void harmonia_space_destroy(harmonia_space* space) { delete space; }

harmonia_status harmonia_space_density(const harmonia_space* space, double r,
                                       double* f, double* f1, double* f2)
{
    if (!space || !f || !f1 || !f2)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const harmonia::DensityValue d = space->space.density(r);
        *f = d.f;
        *f1 = d.f1;
        *f2 = d.f2;
    });
}

harmonia_status harmonia_space_mean_curvature(const harmonia_space* space,
                                              double* h)
{
    if (!space || !h)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    *h = space->space.meanCurvature();
    return HARMONIA_OK;
}

harmonia_status harmonia_space_ricci(const harmonia_space* space, double* ricci)
{
    if (!space || !ricci)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    *ricci = space->space.ricci();
    return HARMONIA_OK;
}

harmonia_status harmonia_space_sphere_volume(const harmonia_space* space,
                                             double r, double* volume)
{
    if (!space || !volume)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *volume = space->space.sphereVolume(r); });
}

harmonia_status harmonia_space_growth_exponents(const harmonia_space* space,
                                                int* m, double* h, double* c)
{
    if (!space || !m || !h || !c)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const harmonia::GrowthExponents g = space->space.growthExponents();
        *m = g.m;
        *h = g.h;
        *c = g.c;
    });
}

harmonia_status harmonia_space_classify_growth(const harmonia_space* space,
                                               harmonia_growth_class* cls)
{
    if (!space || !cls)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *cls = space->space.classifyGrowth() == harmonia::GrowthClass::Polynomial
                   ? HARMONIA_GROWTH_POLYNOMIAL
                   : HARMONIA_GROWTH_PURELY_EXPONENTIAL;
    });
}

harmonia_status harmonia_mu(const harmonia_space* space, double r, double* out)
{
    if (!space || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = harmonia::mu(space->space, r); });
}

harmonia_status harmonia_sphere_eigenvalue(const harmonia_space* space,
                                           double r, double* out)
{
    if (!space || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = harmonia::sphereEigenvalue(space->space, r); });
}

harmonia_status harmonia_sphere_scalar_curvature(const harmonia_space* space,
                                                 double r, double* out)
{
    if (!space || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard(
        [&] { *out = harmonia::sphereScalarCurvature(space->space, r); });
}

harmonia_status harmonia_horosphere_scalar_curvature(
    const harmonia_space* space, double* out)
{
    if (!space || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard(
        [&] { *out = harmonia::horosphereScalarCurvature(space->space); });
}

harmonia_status harmonia_green_create(const harmonia_space* space,
                                      harmonia_green** out)
{
    if (!space || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard(
        [&] { *out = new harmonia_green{harmonia::GreenKernel(space->space)}; });
}

void harmonia_green_destroy(harmonia_green* kernel) { delete kernel; }

harmonia_status harmonia_green_radial(const harmonia_green* kernel, double r,
                                      double* out)
{
    if (!kernel || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = kernel->kernel.radial(r); });
}

harmonia_status harmonia_green_martin_ratio(const harmonia_green* kernel,
                                            double a, double s, double* out)
{
    if (!kernel || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = kernel->kernel.martinRatio(a, s); });
}

harmonia_status harmonia_green_fundamental_residual(
    const harmonia_green* kernel, double* out)
{
    if (!kernel || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        harmonia::RadialFunction bump{
            [](double r) {
                const double s = 1.0 - r * r;
                return r >= 1.0 ? 0.0 : s * s;
            },
            [](double r) { return r >= 1.0 ? 0.0 : -4.0 * r * (1.0 - r * r); },
            1.0};
        *out = harmonia::verifyFundamental(kernel->kernel, bump, 1.0);
    });
}

harmonia_status harmonia_disk_distance(double z_re, double z_im, double w_re,
                                       double w_im, double* out)
{
    if (!out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *out = harmonia::disk::distance(harmonia::DiskPoint({z_re, z_im}),
                                        harmonia::DiskPoint({w_re, w_im}));
    });
}

harmonia_status harmonia_disk_busemann(double xi_theta, double z_re,
                                       double z_im, double* out)
{
    if (!out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *out = harmonia::disk::busemann(harmonia::BoundaryAngle(xi_theta),
                                        harmonia::DiskPoint({z_re, z_im}));
    });
}

harmonia_status harmonia_disk_gromov(double x_re, double x_im, double y_re,
                                     double y_im, double p_re, double p_im,
                                     double* out)
{
    if (!out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *out = harmonia::disk::gromovProduct(harmonia::DiskPoint({x_re, x_im}),
                                             harmonia::DiskPoint({y_re, y_im}),
                                             harmonia::DiskPoint({p_re, p_im}));
    });
}

harmonia_status harmonia_disk_divergence(double alpha, double t,
                                         double* actual, double* bound)
{
    if (!actual || !bound)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const auto pair = harmonia::disk::divergenceCheck(alpha, t);
        *actual = pair.actual;
        *bound = pair.bound;
    });
}

harmonia_status harmonia_dirichlet_solve(const char* phi_expr, double z_re,
                                         double z_im, int node_count,
                                         double* out)
{
    if (!phi_expr || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const harmonia::BoundaryFn phi = harmonia::parseBoundaryExpr(phi_expr);
        *out = harmonia::dirichletSolve(phi, harmonia::DiskPoint({z_re, z_im}),
                                        node_count);
    });
}

harmonia_status harmonia_mean_value_at_infinity(const char* phi_expr,
                                                double xi_theta,
                                                const double* arc_lengths,
                                                int n_arcs,
                                                double* out_averages)
{
    if (!phi_expr || !arc_lengths || !out_averages || n_arcs < 1)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const harmonia::BoundaryFn phi = harmonia::parseBoundaryExpr(phi_expr);
        harmonia::AdaptiveDirichlet solver(phi,
                                           harmonia::Config::global().node_count);
        const std::vector<double> arcs(arc_lengths, arc_lengths + n_arcs);
        const auto averages = harmonia::meanValueAtInfinity(
            [&](std::complex<double> z) { return solver(z); },
            harmonia::BoundaryAngle(xi_theta), arcs);
        for (int i = 0; i < n_arcs; ++i)
            out_averages[i] = averages[i];
    });
}

harmonia_status harmonia_fit_density(const harmonia_space* space, double t0,
                                     double t1, double dt, char** json_out)
{
    if (!space || !json_out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        std::vector<double> ts, xs;
        for (double t = t0; t <= t1 + 1e-12; t += dt) {
            ts.push_back(t);
            xs.push_back(space->space.density(t).f);
        }
        const harmonia::FitResult fit = harmonia::fitExpPoly(
            ts, xs,
            {harmonia::Config::global().fit_max_terms,
             harmonia::Config::global().fit_max_degree});
        nlohmann::json j;
        j["schema"] = "v1";
        j["space"] = space->space.name();
        j["max_residual"] = fit.max_residual;
        j["rel_residual"] = fit.rel_residual;
        j["leading_rate"] = fit.poly.leadingRate();
        j["terms"] = nlohmann::json::array();
        for (const auto& term : fit.poly.terms) {
            nlohmann::json jt;
            jt["alpha"] = term.alpha;
            jt["beta"] = term.beta;
            jt["poly_cos"] = term.poly_cos;
            jt["poly_sin"] = term.poly_sin;
            j["terms"].push_back(std::move(jt));
        }
        *json_out = dupString(j.dump(2));
    });
}

namespace {

harmonia_status runSuiteImpl(const char* suite, const harmonia_space* space,
                             const double* eigenvalues,
                             const int* multiplicities, int n_eigen,
                             double tmax, const char* grid, int parallel,
                             char** out, int* all_pass, bool csv)
{
    if (!suite || !out || !all_pass)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        harmonia::SuiteOptions opts;
        opts.eigen = eigenList(eigenvalues, multiplicities, n_eigen);
        if (tmax > 0.0)
            opts.tmax = tmax;
        if (grid && *grid)
            opts.grid = harmonia::parseGrid(grid);
        opts.parallel = parallel != 0;
        std::optional<harmonia::ModelSpace> sp;
        if (space)
            sp = space->space;
        const harmonia::VerificationReport rep =
            harmonia::runSuite(suite, sp, opts);
        *out = dupString(csv ? rep.toCsv() : rep.toJson());
        *all_pass = rep.allPass() ? 1 : 0;
    });
}

}  // namespace

harmonia_status harmonia_run_suite(const char* suite,
                                   const harmonia_space* space,
                                   const double* eigenvalues,
                                   const int* multiplicities, int n_eigen,
                                   double tmax, const char* grid,
                                   int parallel, char** json_out,
                                   int* all_pass)
{
    return runSuiteImpl(suite, space, eigenvalues, multiplicities, n_eigen,
                        tmax, grid, parallel, json_out, all_pass, false);
}

harmonia_status harmonia_run_suite_csv(const char* suite,
                                       const harmonia_space* space,
                                       const double* eigenvalues,
                                       const int* multiplicities, int n_eigen,
                                       double tmax, const char* grid,
                                       int parallel, char** csv_out,
                                       int* all_pass)
{
    return runSuiteImpl(suite, space, eigenvalues, multiplicities, n_eigen,
                        tmax, grid, parallel, csv_out, all_pass, true);
}

harmonia_status harmonia_emit_table(const harmonia_space* space,
                                    const char* quantity, double lo, double hi,
                                    double step, const char* format,
                                    double martin_a, char** out)
{
    if (!space || !quantity || !format || !out)
        return fail(HARMONIA_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        *out = dupString(harmonia::emitTable(space->space, quantity, lo, hi,
                                             step, format, martin_a));
    });
}

}  // extern "C"
