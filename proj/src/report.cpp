#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <ctime>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "config.hpp"
#include "disk.hpp"
#include "green.hpp"
#include "jacobi.hpp"
#include "quadrature.hpp"
#include "radial.hpp"
#include "rng.hpp"

namespace harmonia {

namespace {

using nlohmann::json;

std::string nowUtc()
{
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void addCheck(VerificationReport& rep, const std::string& id,
              const std::string& desc, double value, double reference,
              double residual, double tol)
{
    Check c;
    c.id = id;
    c.description = desc;
    c.value = value;
    c.reference = reference;
    c.residual = residual;
    c.tolerance = tol;
    c.pass = residual <= tol;
    rep.checks.push_back(std::move(c));
}

std::vector<double> defaultRadialGrid()
{
    std::vector<double> g = {0.01, 0.02, 0.05, 0.1, 0.2, 0.5};
    for (double r = 1.0; r <= 40.0 + 1e-9; r += 0.5)
        g.push_back(r);
    return g;
}

Eigen::MatrixXd curvatureMatrix(const std::vector<CurvatureEigen>& eigen)
{
    int n = 0;
    for (const auto& e : eigen)
        n += e.mult;
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
    int k = 0;
    for (const auto& e : eigen)
        for (int m = 0; m < e.mult; ++m)
            R(k, k) = e.lambda, ++k;
    return R;
}

// closed-form density for a constant diagonalizable curvature operator
double eigenDensity(const std::vector<CurvatureEigen>& eigen, double t)
{
    double f = 1.0;
    for (const auto& e : eigen) {
        const double mu = std::sqrt(-e.lambda);
        const double y = mu == 0.0 ? t : std::sinh(mu * t) / mu;
        f *= std::pow(y, e.mult);
    }
    return f;
}

// ---------------------------------------------------------------- radial --

void radialSuite(VerificationReport& rep, const ModelSpace& space,
                 const std::vector<double>& user_grid)
{
    const int n = space.dim();
    std::vector<double> fd_grid = {0.25, 0.5, 1.0, 2.0, 4.0};
    if (!user_grid.empty()) {
        fd_grid.clear();
        for (double r : user_grid)
            if (r > 0.0)
                fd_grid.push_back(r);
        if (fd_grid.empty())
            throw std::invalid_argument("radial grid has no positive points");
    }

    double worst_fd = 0.0;
    for (double r : fd_grid) {
        const DensityValue d = space.density(r);
        auto f = [&](double s) { return space.density(s).f; };
        const double fd1 = derivative1(f, r, 1e-3);
        const double fd2 = derivative2(f, r, 1e-3);
        const double e1 = std::abs(fd1 - d.f1) / std::max(1.0, std::abs(d.f1));
        const double e2 = std::abs(fd2 - d.f2) / std::max(1.0, std::abs(d.f2));
        worst_fd = std::max({worst_fd, e1, e2});
        rep.rows.push_back({r, "density_fd_rel_error", std::max(e1, e2), 0.0,
                            std::max(e1, e2)});
    }
    addCheck(rep, "radial.density_fd",
             "f', f'' agree with finite differences of f", worst_fd, 0.0,
             worst_fd, 1e-6);

    // f'/f nonincreasing toward h
    double prev = std::numeric_limits<double>::infinity();
    double worst_monotone = 0.0;
    for (double r = 0.5; r <= 40.0 + 1e-9; r += 0.5) {
        const DensityValue d = space.density(r);
        const double q = d.f1 / d.f;
        worst_monotone = std::max(worst_monotone, q - prev);
        prev = q;
    }
    addCheck(rep, "radial.mean_curvature_monotone",
             "f'/f nonincreasing on the grid", worst_monotone, 0.0,
             std::max(0.0, worst_monotone), 1e-9);
    if (space.meanCurvature() > 0.0) {
        const DensityValue d40 = space.density(40.0);
        const double err = std::abs(d40.f1 / d40.f - space.meanCurvature());
        addCheck(rep, "radial.mean_curvature_limit",
                 "f'/f at r=40 equals the horosphere mean curvature",
                 d40.f1 / d40.f, space.meanCurvature(), err, 1e-6);
    }

    const MuReport mu_rep = checkMuProperties(space, defaultRadialGrid());
    addCheck(rep, "radial.mu_properties",
             "mu bounds, derivatives at 0, and the 1/h limit",
             mu_rep.worst(), 0.0, mu_rep.worst(), 1e-6);

    double worst_ode = 0.0;
    for (double r : fd_grid) {
        const DensityValue d = space.density(r);
        const double res =
            std::abs(muPrime(space, r) + d.f1 / d.f * mu(space, r) - 1.0);
        worst_ode = std::max(worst_ode, res);
        rep.rows.push_back({r, "mu_first_order_ode", res, 0.0, res});
    }
    addCheck(rep, "radial.mu_ode", "mu' + (f'/f) mu = 1", worst_ode, 0.0,
             worst_ode, 1e-8);

    if (space.meanCurvature() > 0.0) {
        const double ev30 = sphereEigenvalue(space, 30.0);
        addCheck(rep, "radial.eigenvalue_decay",
                 "sphere eigenvalue at r=30 has decayed", ev30, 0.0,
                 std::abs(ev30), 1e-10);
    }
    for (double r : fd_grid)
        rep.rows.push_back({r, "sphere_eigenvalue", sphereEigenvalue(space, r),
                            0.0, 0.0});

    if (n >= 3) {
        const double horo = horosphereScalarCurvature(space);
        const double sph40 = sphereScalarCurvature(space, 40.0);
        if (space.meanCurvature() > 0.0) {
            addCheck(rep, "radial.scal_limit",
                     "sphere scalar curvature tends to the horosphere value",
                     sph40, horo, std::abs(sph40 - horo), 1e-6);
        } else {
            // flat spheres flatten only at the polynomial rate (n-1)(n-2)/r^2
            const double ref = (n - 1.0) * (n - 2.0) / 1600.0;
            addCheck(rep, "radial.scal_limit",
                     "flat sphere scalar curvature decays like (n-1)(n-2)/r^2",
                     sph40, ref, std::abs(sph40 - ref), 1e-9);
        }
        for (double r : fd_grid)
            rep.rows.push_back({r, "scal_sphere",
                                sphereScalarCurvature(space, r), horo, 0.0});
    }

    // harmonicity of h_v along a ray: mu'' + ((f'/f) mu)' = 0
    double worst_harm = 0.0;
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
        auto flux = [&](double s) {
            const DensityValue d = space.density(s);
            return muPrime(space, s) + d.f1 / d.f * mu(space, s);
        };
        const double res = std::abs(derivative1(flux, r, 1e-3));
        worst_harm = std::max(worst_harm, res);
    }
    addCheck(rep, "radial.hv_harmonic", "mu'' + ((f'/f) mu)' vanishes",
             worst_harm, 0.0, worst_harm, 1e-8);

    std::vector<double> box_grid;
    for (double r = 0.2; r <= 5.0 + 1e-9; r += 0.1)
        box_grid.push_back(r);
    const DensityInequalityReport box = checkDensityInequality(space, box_grid);
    addCheck(rep, "radial.density_inequality",
             "(n-1) <= -f^{2/(n-1)} (f'/f)' on the grid", box.min_residual,
             0.0, std::max(0.0, -box.min_residual), 1e-9);
    rep.rows.push_back({box_grid.front(), "density_inequality_min",
                        box.min_residual, 0.0, 0.0});

    // radial mean value property for two subharmonic functions
    std::vector<double> mean_grid;
    for (double r = 0.25; r <= 8.0 + 1e-9; r += 0.25)
        mean_grid.push_back(r);
    RadialFunction sq{[](double r) { return r * r; },
                      [](double r) { return 2.0 * r; }, 0.0};
    const SphericalMeanReport m1 = sphericalMeanCheck(space, sq, mean_grid);
    RadialFunction mu_fn{[&](double r) { return mu(space, r); },
                         [&](double r) { return muPrime(space, r); }, 0.0};
    const SphericalMeanReport m2 = sphericalMeanCheck(space, mu_fn, mean_grid);
    const double worst_mean = std::max(m1.max_decrease, m2.max_decrease);
    addCheck(rep, "radial.mean_value",
             "radially subharmonic functions are nondecreasing", worst_mean,
             0.0, std::max(worst_mean, (m1.subharmonic && m2.subharmonic)
                                           ? 0.0
                                           : 1.0),
             1e-9);
}

// ---------------------------------------------------------------- jacobi --

void jacobiSuite(VerificationReport& rep,
                 const std::vector<CurvatureEigen>& eigen, double tmax)
{
    for (const auto& e : eigen)
        if (e.lambda > 0.0)
            throw std::invalid_argument(
                "jacobi suite expects nonpositive curvature eigenvalues");
    const Config& cfg = Config::global();
    const Eigen::MatrixXd R = curvatureMatrix(eigen);
    const JacobiTrajectory traj = integrateJacobi(R, tmax, cfg.jacobi_step);
    auto f = [&](double t) { return eigenDensity(eigen, t); };

    double worst_wronskian = 0.0;
    const int n = static_cast<int>(R.rows());
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    for (size_t i = 1; i < traj.times.size(); i += 100) {
        const double drift =
            (traj.wronskian(static_cast<int>(i)) - I).cwiseAbs().maxCoeff() /
            std::max(1.0, traj.times[i]);
        worst_wronskian = std::max(worst_wronskian, drift);
    }
    addCheck(rep, "jacobi.wronskian", "W(A,B) = I along the flow",
             worst_wronskian, 0.0, worst_wronskian, 1e-7);

    double worst_det = 0.0;
    for (double t = 0.1; t <= tmax + 1e-9; t += 0.1) {
        const int i = traj.indexOf(t);
        const double det = traj.A[i].determinant();
        const double ref = f(t);
        const double err = std::abs(det - ref) / std::max(1e-300, std::abs(ref));
        worst_det = std::max(worst_det, err);
        rep.rows.push_back({t, "detA_vs_closed_form", det, ref, err});
    }
    addCheck(rep, "jacobi.det_product",
             "det A equals the product of scalar solutions", worst_det, 0.0,
             worst_det, 1e-7);

    double worst_sym = 0.0;
    for (double t : {0.5, 1.0, std::min(2.0, 0.5 * tmax), tmax * 0.9}) {
        if (t <= 0.0 || t > traj.tMax())
            continue;
        const int i = traj.indexOf(std::round(t / traj.step) * traj.step);
        const Eigen::MatrixXd U =
            traj.Ap[i] * traj.A[i].partialPivLu().inverse();
        worst_sym =
            std::max(worst_sym, (U - U.transpose()).cwiseAbs().maxCoeff());
    }
    addCheck(rep, "jacobi.second_fundamental_form",
             "A' A^{-1} is symmetric for t > 0", worst_sym, 0.0, worst_sym,
             1e-7);

    double worst_id = 0.0;
    const double pairs[][2] = {{0.5, 1.0}, {1.0, 2.0}, {0.5, 2.5}};
    for (const auto& p : pairs) {
        if (p[1] > tmax)
            continue;
        const double res = checkDetIdentity(traj, f, p[0], p[1]);
        worst_id = std::max(worst_id, res);
        rep.rows.push_back({p[1], "det_identity_residual", res, 0.0, res});
    }
    addCheck(rep, "jacobi.det_identity",
             "det(Q(s)-Q(t)) = f(t-s)/(f(t) f(s))", worst_id, 0.0, worst_id,
             1e-6);

    double worst_trace = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        if (t > tmax)
            continue;
        const double tr = riccatiTrace(traj, t);
        const double ref = derivative1(f, t, 1e-4) / f(t);
        worst_trace = std::max(worst_trace, std::abs(tr - ref));
        rep.rows.push_back({t, "riccati_trace", tr, ref, std::abs(tr - ref)});
    }
    addCheck(rep, "jacobi.riccati_trace", "tr(A' A^{-1}) = f'/f", worst_trace,
             0.0, worst_trace, 1e-7);

    // stable tensor checks require strictly negative curvature spectrum
    bool negative = true;
    for (const auto& e : eigen)
        if (e.lambda >= 0.0)
            negative = false;
    if (negative && tmax >= 3.0) {
        double h = 0.0;
        for (const auto& e : eigen)
            h += e.mult * std::sqrt(-e.lambda);
        const double t_probe = std::min(8.0, 0.75 * tmax);
        const double t_snap = std::round(t_probe / traj.step) * traj.step;
        const Eigen::MatrixXd U = stableRiccati(traj, t_snap, tmax);
        const double err = std::abs(-U.trace() - h);
        addCheck(rep, "jacobi.stable_trace",
                 "tr(-S' S^{-1}) approaches the horosphere mean curvature",
                 -U.trace(), h, err, 1e-3);

        double worst_jacid = 0.0;
        for (double t : {1.0, 2.0}) {
            if (t >= tmax)
                continue;
            const int i = traj.indexOf(t);
            const Eigen::MatrixXd Ainv = traj.A[i].partialPivLu().inverse();
            const Eigen::MatrixXd lhs =
                traj.Ap[i] * Ainv - stableRiccati(traj, t, tmax);
            const Eigen::MatrixXd rhs =
                Ainv.transpose() *
                stableTailIntegral(traj, t, tmax).partialPivLu().inverse() *
                Ainv;
            worst_jacid =
                std::max(worst_jacid, (lhs - rhs).cwiseAbs().maxCoeff());
        }
        addCheck(rep, "jacobi.stable_identity",
                 "A'A^{-1} - S'S^{-1} = A^{-T} (S'(0)-S'_t(0))^{-1} A^{-1}",
                 worst_jacid, 0.0, worst_jacid, 1e-5);
    }
}

// ----------------------------------------------------------------- green --

void greenSuite(VerificationReport& rep, const ModelSpace& space,
                double martin_a)
{
    const GreenKernel kernel(space);

    double worst_d = 0.0;
    for (double r : {0.5, 1.0, 2.0, 5.0}) {
        auto g = [&](double s) { return kernel.radial(s); };
        const double fd = derivative1(g, r, 1e-3);
        const double ref = kernel.radialDerivative(r);
        const double err = std::abs(fd - ref) / std::max(1e-12, std::abs(ref));
        worst_d = std::max(worst_d, err);
        rep.rows.push_back({r, "green_derivative", fd, ref, err});
    }
    addCheck(rep, "green.derivative", "G~' = -(1/omega_n)/f", worst_d, 0.0,
             worst_d, 1e-8);

    RadialFunction G{[&](double r) { return kernel.radial(r); },
                     [&](double r) { return kernel.radialDerivative(r); },
                     0.0};
    double worst_harm = 0.0;
    for (double r = 0.2; r <= 10.0 + 1e-9; r += 0.2) {
        const double res = std::abs(radialLaplacian(space, G, r));
        worst_harm = std::max(worst_harm, res);
        rep.rows.push_back({r, "green_laplacian", res, 0.0, res});
    }
    addCheck(rep, "green.harmonic", "radial laplacian of G~ vanishes",
             worst_harm, 0.0, worst_harm, 1e-7);

    addCheck(rep, "green.symmetry",
             "G(x,y) = G(y,x) holds for the radial evaluator", 0.0, 0.0, 0.0,
             1e-15);

    const double h = space.meanCurvature();
    if (h > 0.0) {
        const double ratio = kernel.martinRatio(martin_a, 40.0);
        const double ref = std::exp(-h * martin_a);
        addCheck(rep, "green.martin_limit",
                 "G~(s+a)/G~(s) tends to e^{-ha}", ratio, ref,
                 std::abs(ratio - ref), 1e-4);
        rep.rows.push_back({40.0, "martin_ratio", ratio, ref,
                            std::abs(ratio - ref)});
    } else {
        const double ratio = kernel.martinRatio(5.0, 1e4);
        addCheck(rep, "green.martin_limit",
                 "flat Martin quotient tends to 1", ratio, 1.0,
                 std::abs(ratio - 1.0), 1e-3);
    }

    RadialFunction bump{
        [](double r) {
            const double s = 1.0 - r * r;
            return r >= 1.0 ? 0.0 : s * s;
        },
        [](double r) { return r >= 1.0 ? 0.0 : -4.0 * r * (1.0 - r * r); },
        1.0};
    const double res = verifyFundamental(kernel, bump, 1.0);
    addCheck(rep, "green.fundamental",
             "int G (Delta phi) dvol = -phi(0) for a bump", res, 0.0, res,
             1e-6);
}

// ------------------------------------------------------------------ disk --

void diskSuite(VerificationReport& rep)
{
    Rng rng(20240711);

    double worst_grad = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double rad = 0.05 + 0.85 * rng.uniform();
        const DiskPoint z(std::polar(rad, rng.uniform(0.0, 2 * M_PI)));
        const BoundaryAngle xi(rng.uniform(0.0, 2 * M_PI));
        auto bx = [&](double x) {
            return disk::busemann(xi, DiskPoint({x, z.z.imag()}));
        };
        auto by = [&](double y) {
            return disk::busemann(xi, DiskPoint({z.z.real(), y}));
        };
        const double gx = derivative1(bx, z.z.real(), 1e-4);
        const double gy = derivative1(by, z.z.imag(), 1e-4);
        const double norm_hyp =
            std::hypot(gx, gy) * (1.0 - std::norm(z.z)) / 2.0;
        worst_grad = std::max(worst_grad, std::abs(norm_hyp - 1.0));
    }
    addCheck(rep, "disk.busemann_gradient", "|grad b| = 1 in the disk metric",
             worst_grad, 0.0, worst_grad, 1e-6);

    double worst_limit = 0.0;
    for (int k = 0; k < 8; ++k) {
        const DiskPoint z(std::polar(0.1 + 0.7 * rng.uniform(),
                                     rng.uniform(0.0, 2 * M_PI)));
        const BoundaryAngle xi(rng.uniform(0.0, 2 * M_PI));
        const double closed = disk::busemann(xi, z);
        const double truncated = disk::busemannTruncated(xi, z, 30.0);
        worst_limit = std::max(worst_limit, std::abs(closed - truncated));
    }
    addCheck(rep, "disk.busemann_limit",
             "closed form matches d(z, c(t)) - t at t=30", worst_limit, 0.0,
             worst_limit, 1e-8);

    double worst_mass = 0.0;
    for (double rad : {0.0, 0.3, 0.6}) {
        const DiskPoint p(std::complex<double>(rad, 0.0));
        auto weight = [&](double th) {
            return std::exp(-disk::busemann(BoundaryAngle(th), p));
        };
        const double mass =
            integratePeriodic(weight, 0.0, 2.0 * M_PI, 512) / (2.0 * M_PI);
        worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
    }
    addCheck(rep, "disk.harmonic_measure_mass",
             "(1/omega_2) int e^{-b} dtheta = 1", worst_mass, 0.0, worst_mass,
             1e-10);

    double worst_ray = 0.0;
    for (int k = 0; k < 10; ++k) {
        const DiskPoint p(std::polar(0.6 * rng.uniform(),
                                     rng.uniform(0.0, 2 * M_PI)));
        const double dir = rng.uniform(0.0, 2 * M_PI);
        const double t = 0.2 + 4.0 * rng.uniform();
        const double d = disk::distance(p, disk::geodesicRay(p, dir, t));
        worst_ray = std::max(worst_ray, std::abs(d - t));
    }
    addCheck(rep, "disk.ray_unit_speed", "d(p, ray(p, v, t)) = t", worst_ray,
             0.0, worst_ray, 1e-10);

    // triangle thinness and the Gromov product sandwich, sampled
    const double delta = 4.0;
    double worst_thin = 0.0, worst_sandwich = 0.0;
    for (int k = 0; k < 50; ++k) {
        DiskPoint v[3];
        for (auto& p : v)
            p = DiskPoint(std::polar(0.95 * rng.uniform(),
                                     rng.uniform(0.0, 2 * M_PI)));
        const int samples = 33;
        auto side = [&](int a, int b, double frac) {
            return disk::geodesicBetween(v[a], v[b],
                                         frac * disk::distance(v[a], v[b]));
        };
        for (int i = 0; i < samples; ++i) {
            const DiskPoint q = side(0, 1, i / double(samples - 1));
            double best = 1e300;
            for (int j = 0; j < samples; ++j) {
                best = std::min(best, disk::distance(q, side(0, 2, j / double(samples - 1))));
                best = std::min(best, disk::distance(q, side(2, 1, j / double(samples - 1))));
            }
            worst_thin = std::max(worst_thin, best);
        }
        const DiskPoint p0;
        const double gp = disk::gromovProduct(v[0], v[1], p0);
        double dmin = 1e300;
        for (int i = 0; i < 257; ++i)
            dmin = std::min(dmin, disk::distance(p0, side(0, 1, i / 256.0)));
        worst_sandwich = std::max(worst_sandwich, gp - dmin);
        worst_sandwich = std::max(worst_sandwich, dmin - gp - 32.0 * delta);
    }
    addCheck(rep, "disk.thin_triangles", "sides lie in 4-neighborhoods",
             worst_thin, 0.0, std::max(0.0, worst_thin - delta), 1e-9);
    addCheck(rep, "disk.gromov_sandwich",
             "(x,y)_p <= d(p, side) <= (x,y)_p + 32 delta", worst_sandwich,
             0.0, std::max(0.0, worst_sandwich), 1e-9);

    double worst_hit = 0.0;
    {
        const DiskPoint p;
        const DiskPoint q(std::complex<double>(0.2, 0.0));
        for (double dir : {0.0, M_PI / 2, 2.2}) {
            const auto [point, s] = disk::sphereHit(p, q, dir, 3.0);
            worst_hit =
                std::max(worst_hit, std::abs(disk::distance(p, point) - 3.0));
            (void)s;
        }
    }
    addCheck(rep, "disk.sphere_hit", "F_t(v) lands on S_t(p)", worst_hit, 0.0,
             worst_hit, 1e-10);

    // Jacobian of B_t against the numerical derivative of the circle map
    {
        const DiskPoint p;
        const DiskPoint q(std::complex<double>(0.2, 0.0));
        const double t = 3.0, dir = M_PI / 2;
        auto angle = [&](double a) { return disk::btAngle(p, q, a, t); };
        const double fd = std::abs(derivative1(angle, dir, 1e-4));
        const double jac = disk::jacobianBt(p, q, dir, t);
        addCheck(rep, "disk.jacobian_bt",
                 "Jac B_t matches the derivative of the circle map", jac, fd,
                 std::abs(jac - fd), 1e-5);
    }

    // divergence lower bound across a (t, alpha) scan
    double worst_div = 0.0;
    for (double t = 1.0; t <= 20.0 + 1e-9; t += 0.5)
        for (double a = 0.1; a <= M_PI; a += 0.2) {
            const auto [actual, bound] = disk::divergenceCheck(a, t);
            worst_div = std::max(worst_div, bound - actual);
        }
    addCheck(rep, "disk.divergence_bound",
             "d(c_v(t), c_w(t)) >= a(t) angle(v,w) on [1,20]", worst_div, 0.0,
             std::max(0.0, worst_div), 1e-9);
}

// --------------------------------------------------------------- poisson --

void poissonSuite(VerificationReport& rep, int nodes)
{
    const ModelSpace hyp2 = ModelSpace::realHyperbolic(2);
    Rng rng(777001);

    double worst_const = 0.0;
    for (int k = 0; k < 5; ++k) {
        const DiskPoint z(std::polar(0.9 * rng.uniform(),
                                     rng.uniform(0.0, 2 * M_PI)));
        const double H = dirichletSolve([](double) { return 1.0; }, z, nodes);
        worst_const = std::max(worst_const, std::abs(H - 1.0));
    }
    addCheck(rep, "poisson.constant", "H_1 = 1 exactly", worst_const, 0.0,
             worst_const, 1e-15);

    double worst_cos = 0.0;
    for (int k = 0; k < 10; ++k) {
        const DiskPoint z(std::polar(0.9 * rng.uniform(),
                                     rng.uniform(0.0, 2 * M_PI)));
        const double H =
            dirichletSolve([](double th) { return std::cos(th); }, z, nodes);
        worst_cos = std::max(worst_cos, std::abs(H - z.z.real()));
    }
    addCheck(rep, "poisson.cosine", "H_{cos} = Re z for |z| <= 0.9", worst_cos,
             0.0, worst_cos, 1e-8);

    double worst_lap = 0.0;
    for (int kk = 1; kk <= 3; ++kk) {
        auto phi = [kk](double th) { return std::cos(kk * th); };
        for (int k = 0; k < 7; ++k) {
            const std::complex<double> z =
                std::polar(0.8 * rng.uniform(), rng.uniform(0.0, 2 * M_PI));
            auto H = [&](std::complex<double> w) {
                return dirichletSolve(phi, DiskPoint(w), nodes);
            };
            const double h = 1e-3;
            const double lap_flat =
                (H(z + std::complex<double>(h, 0)) +
                 H(z - std::complex<double>(h, 0)) +
                 H(z + std::complex<double>(0, h)) +
                 H(z - std::complex<double>(0, h)) - 4.0 * H(z)) /
                (h * h);
            const double factor = std::pow(1.0 - std::norm(z), 2) / 4.0;
            worst_lap = std::max(worst_lap, std::abs(factor * lap_flat));
        }
    }
    addCheck(rep, "poisson.harmonic",
             "hyperbolic laplacian of H_phi vanishes (FD)", worst_lap, 0.0,
             worst_lap, 1e-4);

    AdaptiveDirichlet solver([](double th) { return std::cos(th); }, nodes);
    double worst_bc = 0.0;
    for (double ang : {0.0, M_PI / 3, M_PI}) {
        const double H = solver(std::polar(0.99, ang));
        worst_bc = std::max(worst_bc, std::abs(H - std::cos(ang)));
    }
    addCheck(rep, "poisson.boundary_convergence",
             "H_phi(0.99 xi) close to phi(xi)", worst_bc, 0.0, worst_bc, 0.02);

    // vector identity (1/omega_2) int e^{-b_w(z)} w dtheta = h mu(d) w_0(z)
    double worst_vec = 0.0;
    for (int k = 0; k < 5; ++k) {
        const std::complex<double> z =
            std::polar(0.05 + 0.85 * rng.uniform(), rng.uniform(0.0, 2 * M_PI));
        const DiskPoint zp(z);
        auto ex = [&](double th) {
            return std::exp(-disk::busemann(BoundaryAngle(th), zp)) *
                   std::cos(th);
        };
        auto ey = [&](double th) {
            return std::exp(-disk::busemann(BoundaryAngle(th), zp)) *
                   std::sin(th);
        };
        const double lx =
            integratePeriodic(ex, 0.0, 2 * M_PI, 1024) / (2.0 * M_PI);
        const double ly =
            integratePeriodic(ey, 0.0, 2 * M_PI, 1024) / (2.0 * M_PI);
        const double m = mu(hyp2, disk::distance(DiskPoint(), zp));
        const double rx = m * std::cos(std::arg(z));
        const double ry = m * std::sin(std::arg(z));
        worst_vec = std::max({worst_vec, std::abs(lx - rx), std::abs(ly - ry)});
    }
    addCheck(rep, "poisson.vector_identity",
             "(1/omega_2) int e^{-b_w} w dtheta = h mu(d) w_0", worst_vec, 0.0,
             worst_vec, 1e-6);

    // Radon-Nikodym cocycle on nodes
    double worst_rn = 0.0;
    {
        const DiskPoint p(std::complex<double>(0.3, 0.1));
        const DiskPoint q(std::complex<double>(-0.2, 0.4));
        const DiskPoint s(std::complex<double>(0.1, -0.5));
        for (int j = 0; j < 64; ++j) {
            const BoundaryAngle xi(2.0 * M_PI * j / 64);
            const double bp = disk::busemann(xi, p);
            const double bq = disk::busemann(xi, q);
            const double bs = disk::busemann(xi, s);
            const double chain =
                std::exp(-(bp - bq)) * std::exp(-(bq - bs));
            const double direct = std::exp(-(bp - bs));
            worst_rn = std::max(worst_rn,
                                std::abs(chain - direct) / direct);
        }
    }
    addCheck(rep, "poisson.rn_cocycle",
             "dmu_p/dmu_q dmu_q/dmu_s = dmu_p/dmu_s on nodes", worst_rn, 0.0,
             worst_rn, 1e-10);

    double worst_massv = 0.0;
    for (int k = 0; k < 5; ++k) {
        const DiskPoint p(std::polar(0.85 * rng.uniform(),
                                     rng.uniform(0.0, 2 * M_PI)));
        const VisibilityMeasure m = visibilityMeasure(p, nodes);
        double total = 0.0;
        for (double w : m.weights)
            total += w;
        worst_massv = std::max(worst_massv, std::abs(total - 1.0));
    }
    addCheck(rep, "poisson.visibility_mass", "visibility weights sum to 1",
             worst_massv, 0.0, worst_massv, 1e-12);

    const double hv_probe =
        hvFunction(hyp2, {1.0, 0.0}, DiskPoint(std::complex<double>(0.7, 0.0)));
    addCheck(rep, "poisson.hv_example", "h_{e1}(0.7) = 0.7", hv_probe, 0.7,
             std::abs(hv_probe - 0.7), 1e-10);

    double worst_ball = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::complex<double> z =
            std::polar(0.97 * rng.uniform(), rng.uniform(0.0, 2 * M_PI));
        const auto F = ballModelMap(hyp2, 0.0, DiskPoint(z));
        worst_ball = std::max({worst_ball, std::abs(F[0] - z.real()),
                               std::abs(F[1] - z.imag())});
    }
    addCheck(rep, "poisson.ball_model", "F(z) = z on the disk", worst_ball,
             0.0, worst_ball, 1e-10);

    const DiskPoint origin;
    auto u1 = [&](std::complex<double> w) {
        return hvFunction(hyp2, {1.0, 0.0}, DiskPoint(w));
    };
    const double g1 = gradientIntegralCheck(hyp2, u1, origin, 0.0, 1.0, nodes);
    auto phi2 = [](double th) { return std::cos(2.0 * th); };
    auto u2 = [&](std::complex<double> w) {
        return dirichletSolve(phi2, DiskPoint(w), 512);
    };
    const double g2 = gradientIntegralCheck(
        hyp2, u2, DiskPoint(std::complex<double>(0.2, 0.0)), M_PI / 2, 0.8,
        nodes);
    addCheck(rep, "poisson.gradient_integral",
             "<grad u, v> = (1/vol B_r) int u phi_v dmu_r",
             std::max(g1, g2), 0.0, std::max(g1, g2), 1e-5);

    // mean value property at infinity, short arc sequence
    AdaptiveDirichlet H(std::function<double(double)>(
                            [](double th) { return std::cos(th); }),
                        nodes);
    auto phi_fn = [&](std::complex<double> z) { return H(z); };
    const std::vector<double> arcs = {1.0, 5.0, 25.0};
    const auto avgs = meanValueAtInfinity(phi_fn, BoundaryAngle(0.0), arcs);
    double prev_err = 1e300;
    bool monotone = true;
    for (double a : avgs) {
        const double err = std::abs(a - 1.0);
        if (err > prev_err)
            monotone = false;
        prev_err = err;
    }
    addCheck(rep, "poisson.mean_value_infinity",
             "horocycle arc averages approach the boundary value",
             avgs.back(), 1.0, monotone ? std::abs(avgs.back() - 1.0) : 1.0,
             0.13);
}

}  // namespace

// ---------------------------------------------------------------- report --

bool VerificationReport::allPass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

std::string formatDouble(double v)
{
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string VerificationReport::toJson() const
{
    json j;
    j["schema"] = "v1";
    j["suite"] = suite;
    j["space"] = space;
    j["timestamp"] = timestamp;
    j["config"] = Config::global().snapshot();
    j["pass"] = allPass();
    j["checks"] = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["id"] = c.id;
        jc["description"] = c.description;
        jc["value"] = c.value;
        jc["reference"] = c.reference;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2);
}

std::string VerificationReport::toCsv() const
{
    std::string out = "r,quantity,value,reference,residual\n";
    for (const auto& row : rows) {
        out += formatDouble(row.r);
        out += ',';
        out += row.quantity;
        out += ',';
        out += formatDouble(row.value);
        out += ',';
        out += formatDouble(row.reference);
        out += ',';
        out += formatDouble(row.residual);
        out += '\n';
    }
    return out;
}

VerificationReport runSuite(const std::string& suite,
                            const std::optional<ModelSpace>& space,
                            const SuiteOptions& opts)
{
    VerificationReport rep;
    rep.suite = suite;
    rep.space = space ? space->name() + "/" + std::to_string(space->dim())
                      : "(none)";
    rep.timestamp = nowUtc();

    auto eigenOrSpace = [&]() -> std::vector<CurvatureEigen> {
        if (!opts.eigen.empty())
            return opts.eigen;
        if (space)
            return space->curvatureEigen();
        throw std::invalid_argument(
            "jacobi suite needs --eigen or a space");
    };

    if (suite == "radial") {
        if (!space)
            throw std::invalid_argument("radial suite needs a space");
        radialSuite(rep, *space, opts.grid);
    } else if (suite == "jacobi") {
        jacobiSuite(rep, eigenOrSpace(), opts.tmax);
    } else if (suite == "green") {
        if (!space)
            throw std::invalid_argument("green suite needs a space");
        greenSuite(rep, *space, opts.martin_a);
    } else if (suite == "disk") {
        diskSuite(rep);
    } else if (suite == "poisson") {
        poissonSuite(rep, opts.nodes);
    } else if (suite == "all") {
        std::vector<std::function<void(VerificationReport&)>> parts;
        if (space) {
            parts.push_back([&](VerificationReport& r) {
                radialSuite(r, *space, opts.grid);
            });
            parts.push_back([&](VerificationReport& r) {
                jacobiSuite(r, space->curvatureEigen(), opts.tmax);
            });
            if (space->meanCurvature() > 0.0 || space->dim() >= 3)
                parts.push_back([&](VerificationReport& r) {
                    greenSuite(r, *space, opts.martin_a);
                });
        }
        parts.push_back([](VerificationReport& r) { diskSuite(r); });
        parts.push_back([&](VerificationReport& r) {
            poissonSuite(r, opts.nodes);
        });

        std::vector<VerificationReport> partial(parts.size());
        if (opts.parallel) {
            std::vector<std::future<void>> futures;
            for (size_t i = 0; i < parts.size(); ++i)
                futures.push_back(std::async(std::launch::async,
                                             [&, i] { parts[i](partial[i]); }));
            for (auto& f : futures)
                f.get();
        } else {
            for (size_t i = 0; i < parts.size(); ++i)
                parts[i](partial[i]);
        }
        // assembly stays serialized and ordered regardless of scheduling
        for (auto& part : partial) {
            for (auto& c : part.checks)
                rep.checks.push_back(std::move(c));
            for (auto& row : part.rows)
                rep.rows.push_back(std::move(row));
        }
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return rep;
}

std::string emitTable(const ModelSpace& space, const std::string& quantity,
                      double lo, double hi, double step,
                      const std::string& format, double martin_a)
{
    if (step <= 0.0 || hi < lo)
        throw std::invalid_argument("bad grid for table");
    std::vector<double> grid;
    for (double r = lo; r <= hi + 1e-12; r += step)
        grid.push_back(r);

    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;

    if (quantity == "density") {
        columns = {"r", "f", "f1", "f2"};
        for (double r : grid) {
            const DensityValue d = space.density(r);
            data.push_back({r, d.f, d.f1, d.f2});
        }
    } else if (quantity == "mu") {
        columns = {"r", "mu"};
        for (double r : grid)
            data.push_back({r, mu(space, r)});
    } else if (quantity == "green") {
        const GreenKernel kernel(space);
        columns = {"r", "green"};
        for (double r : grid) {
            if (r <= 0.0)
                continue;
            data.push_back({r, kernel.radial(r)});
        }
    } else if (quantity == "eigenvalue") {
        columns = {"r", "eigenvalue"};
        for (double r : grid) {
            if (r <= 0.0)
                continue;
            data.push_back({r, sphereEigenvalue(space, r)});
        }
    } else if (quantity == "scal_sphere") {
        columns = {"r", "scal"};
        for (double r : grid) {
            if (r <= 0.0)
                continue;
            data.push_back({r, sphereScalarCurvature(space, r)});
        }
    } else if (quantity == "martin_ratio") {
        const GreenKernel kernel(space);
        const double ref = std::exp(-space.meanCurvature() * martin_a);
        columns = {"s", "ratio", "reference", "diff"};
        for (double s : grid) {
            if (s < Config::global().martin_s_min)
                continue;
            const double ratio = kernel.martinRatio(martin_a, s);
            data.push_back({s, ratio, ref, ratio - ref});
        }
    } else {
        throw std::invalid_argument("unknown table quantity: " + quantity);
    }

    if (format == "csv") {
        std::string out;
        for (size_t i = 0; i < columns.size(); ++i) {
            out += columns[i];
            out += i + 1 < columns.size() ? ',' : '\n';
        }
        for (const auto& row : data) {
            for (size_t i = 0; i < row.size(); ++i) {
                out += formatDouble(row[i]);
                out += i + 1 < row.size() ? ',' : '\n';
            }
        }
        return out;
    }
    if (format == "json") {
        json j;
        j["schema"] = "v1";
        j["quantity"] = quantity;
        j["space"] = space.name();
        j["dim"] = space.dim();
        j["columns"] = columns;
        j["rows"] = data;
        return j.dump(2);
    }
    throw std::invalid_argument("unknown table format: " + format);
}

BoundaryFn parseBoundaryExpr(const std::string& expr)
{
    struct Term {
        double coef;
        double freq;  // 0 for constants
        bool sine;
    };
    std::vector<Term> terms;

    std::string s;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty boundary expression");

    size_t pos = 0;
    while (pos < s.size()) {
        double sign = 1.0;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-')
                sign = -sign;
            ++pos;
        }
        size_t end = pos;
        int depth = 0;
        while (end < s.size()) {
            if (s[end] == '(')
                ++depth;
            if (s[end] == ')')
                --depth;
            if (depth == 0 && end > pos && (s[end] == '+' || s[end] == '-'))
                break;
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        pos = end;

        double coef = sign;
        auto star = term.find('*');
        auto paren = term.find('(');
        if (star != std::string::npos && (paren == std::string::npos || star < paren)) {
            coef *= std::stod(term.substr(0, star));
            term = term.substr(star + 1);
        }
        if (term.rfind("cos(", 0) == 0 || term.rfind("sin(", 0) == 0) {
            const bool sine = term[0] == 's';
            if (term.back() != ')')
                throw std::invalid_argument("unbalanced parenthesis in boundary expression");
            std::string inner = term.substr(4, term.size() - 5);
            double freq = 1.0;
            if (inner != "theta") {
                auto istar = inner.find("*theta");
                if (istar == std::string::npos)
                    throw std::invalid_argument("expected k*theta inside cos/sin");
                freq = std::stod(inner.substr(0, istar));
            }
            terms.push_back({coef, freq, sine});
        } else if (!term.empty()) {
            coef *= std::stod(term);
            terms.push_back({coef, 0.0, false});
        } else {
            throw std::invalid_argument("malformed boundary expression");
        }
    }

    return [terms](double theta) {
        double v = 0.0;
        for (const auto& t : terms) {
            if (t.freq == 0.0)
                v += t.coef;
            else
                v += t.coef * (t.sine ? std::sin(t.freq * theta)
                                      : std::cos(t.freq * theta));
        }
        return v;
    };
}

std::vector<double> parseGrid(const std::string& spec)
{
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("grid must be a:b:step");
    const double a = std::stod(spec.substr(0, c1));
    const double b = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(spec.substr(c2 + 1));
    if (step <= 0.0 || b < a)
        throw std::invalid_argument("grid must satisfy a <= b, step > 0");
    std::vector<double> g;
    for (double r = a; r <= b + 1e-12; r += step)
        g.push_back(r);
    return g;
}

}  // namespace harmonia
