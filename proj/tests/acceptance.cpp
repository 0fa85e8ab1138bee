// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "disk.hpp"
#include "exppoly.hpp"
#include "green.hpp"
#include "jacobi.hpp"
#include "model_space.hpp"
#include "poisson.hpp"
#include "quadrature.hpp"
#include "radial.hpp"
#include "rng.hpp"

using namespace harmonia;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, double worst, double tol,
            bool pass)
{
    std::printf("[%s] criterion %2d: %-58s worst %.3e  tol %.1e\n",
                pass ? "PASS" : "FAIL", criterion, what.c_str(), worst, tol);
    if (!pass)
        ++g_failures;
}

void check(int criterion, const std::string& what, double worst, double tol)
{
    report(criterion, what, worst, tol, worst <= tol);
}

RadialFunction bumpFunction()
{
    return {[](double r) {
                const double s = 1.0 - r * r;
                return r >= 1.0 ? 0.0 : s * s;
            },
            [](double r) { return r >= 1.0 ? 0.0 : -4.0 * r * (1.0 - r * r); },
            1.0};
}

// 1. green_radial on flat 3-space equals 1/(4 pi r) to 1e-10 relative
void criterion1()
{
    const GreenKernel kernel(makeSpace("euclidean", 3));
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0, 5.0}) {
        const double ref = 1.0 / (4.0 * M_PI * r);
        worst = std::max(worst, std::abs(kernel.radial(r) - ref) / ref);
    }
    check(1, "Green kernel matches 1/(4 pi r) on flat 3-space", worst, 1e-10);
}

// 2. fundamental-solution residual for the bump test function
void criterion2()
{
    const RadialFunction bump = bumpFunction();
    double worst = 0.0;
    for (const char* kind : {"euclidean", "real_hyperbolic"}) {
        const GreenKernel kernel(makeSpace(kind, 3));
        worst = std::max(worst, verifyFundamental(kernel, bump, 1.0));
    }
    check(2, "fundamental-solution residual for the bump", worst, 1e-6);
}

// 3. boxed determinant identity for the three curvature operators
void criterion3()
{
    double worst = 0.0;
    const double pairs[][2] = {{0.5, 1.0}, {1.0, 2.0}, {0.5, 2.5}};

    const JacobiTrajectory neg =
        integrateJacobi(Eigen::MatrixXd::Constant(1, 1, -1.0), 3.0, 1e-3);
    auto f_sinh = [](double t) { return std::sinh(t); };
    const JacobiTrajectory flat =
        integrateJacobi(Eigen::MatrixXd::Zero(1, 1), 3.0, 1e-3);
    auto f_lin = [](double t) { return t; };
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(3, 3);
    R.diagonal() << -4.0, -1.0, -1.0;
    const JacobiTrajectory cplx = integrateJacobi(R, 3.0, 1e-3);
    auto f_ch = [](double t) { return std::pow(std::sinh(t), 3) * std::cosh(t); };

    for (const auto& p : pairs) {
        worst = std::max(worst, checkDetIdentity(neg, f_sinh, p[0], p[1]));
        worst = std::max(worst, checkDetIdentity(flat, f_lin, p[0], p[1]));
        worst = std::max(worst, checkDetIdentity(cplx, f_ch, p[0], p[1]));
    }
    check(3, "det(Q(s)-Q(t)) = f(t-s)/(f(t)f(s)) for R in {-1, 0, cplx}",
          worst, 1e-6);
}

// 4. boxed differential inequality: equality for the constant-curvature
// models on [0.2, 5]; strictly positive for complex hyperbolic
void criterion4()
{
    std::vector<double> grid;
    for (double r = 0.2; r <= 5.0 + 1e-9; r += 0.1)
        grid.push_back(r);
    double worst_eq = 0.0;
    for (const auto& [kind, dim] :
         std::vector<std::pair<const char*, int>>{{"euclidean", 3},
                                                  {"euclidean", 4},
                                                  {"real_hyperbolic", 3},
                                                  {"real_hyperbolic", 4}}) {
        const auto rep = checkDensityInequality(makeSpace(kind, dim), grid);
        worst_eq = std::max(worst_eq, std::max(std::abs(rep.min_residual),
                                               std::abs(rep.max_residual)));
    }
    check(4, "density inequality: equality residual on model grids", worst_eq,
          1e-8);

    // the complex hyperbolic residual behaves like r^4/3 near zero, so the
    // strictness scan starts at 0.5
    std::vector<double> cgrid;
    for (double r = 0.5; r <= 5.0 + 1e-9; r += 0.1)
        cgrid.push_back(r);
    const auto rep =
        checkDensityInequality(makeSpace("complex_hyperbolic", 4), cgrid);
    report(4, "density inequality strictly positive (complex hyperbolic)",
           rep.min_residual, 1e-3, rep.min_residual >= 1e-3);
}

// 5. mu-property suite across the catalog
void criterion5()
{
    std::vector<double> grid = {0.01, 0.02, 0.05, 0.1, 0.2, 0.5};
    for (double r = 1.0; r <= 40.0 + 1e-9; r += 0.5)
        grid.push_back(r);
    double worst = 0.0;
    const std::vector<ModelSpace> spaces = {
        makeSpace("euclidean", 3), makeSpace("euclidean", 4),
        makeSpace("real_hyperbolic", 2), makeSpace("real_hyperbolic", 3),
        makeSpace("complex_hyperbolic", 4),
        makeSpace("rank1_model", 4, {{-4.0, 1}, {-1.0, 2}})};
    for (const ModelSpace& s : spaces) {
        const MuReport rep = checkMuProperties(s, grid);
        worst = std::max(worst, rep.worst());
    }
    check(5, "mu bounds, series at 0, and mu(40) = 1/h on the catalog", worst,
          1e-6);
}

// 6. Martin quotient limits
void criterion6()
{
    const GreenKernel kernel(makeSpace("real_hyperbolic", 2));
    const double ratio = kernel.martinRatio(1.0, 40.0);
    check(6, "martin ratio at s=40 equals e^{-1}",
          std::abs(ratio - std::exp(-1.0)), 1e-6);

    const DiskPoint p0;
    double worst = 0.0;
    const std::vector<DiskPoint> points = {
        DiskPoint(std::complex<double>(0.0, 0.3)),
        DiskPoint(std::complex<double>(-0.25, 0.4)),
        DiskPoint(std::complex<double>(0.5, -0.2))};
    for (const auto& x : points) {
        const BoundaryAngle xi(0.0);
        const double ref = std::exp(-disk::busemann(xi, x));
        const auto seq = martinKernelAlongRay(kernel, x, p0, xi, {40.0});
        worst = std::max(worst, std::abs(seq[0] - ref));
    }
    check(6, "Green quotients along the ray converge to e^{-b}", worst, 1e-4);
}

// 7. Dirichlet solver
void criterion7()
{
    Rng rng(2024);
    double worst_const = 0.0, worst_cos = 0.0;
    for (int k = 0; k < 25; ++k) {
        const DiskPoint z(std::polar(0.9 * rng.uniform(),
                                     rng.uniform(0.0, 2 * M_PI)));
        worst_const = std::max(
            worst_const,
            std::abs(dirichletSolve([](double) { return 1.0; }, z, 512) - 1.0));
        worst_cos = std::max(
            worst_cos,
            std::abs(dirichletSolve([](double th) { return std::cos(th); }, z,
                                    512) -
                     z.z.real()));
    }
    report(7, "H_1 = 1 exactly", worst_const, 0.0, worst_const == 0.0);
    check(7, "H_cos = Re z to 1e-8 for |z| <= 0.9", worst_cos, 1e-8);

    double worst_lap = 0.0;
    for (int kk = 1; kk <= 3; ++kk) {
        auto phi = [kk](double th) { return std::cos(kk * th); };
        for (int k = 0; k < 7; ++k) {
            const std::complex<double> z =
                std::polar(0.8 * rng.uniform(), rng.uniform(0.0, 2 * M_PI));
            auto H = [&](std::complex<double> w) {
                return dirichletSolve(phi, DiskPoint(w), 512);
            };
            const double h = 1e-3;
            const double lap =
                (H(z + std::complex<double>(h, 0)) +
                 H(z - std::complex<double>(h, 0)) +
                 H(z + std::complex<double>(0, h)) +
                 H(z - std::complex<double>(0, h)) - 4.0 * H(z)) /
                (h * h) * std::pow(1.0 - std::norm(z), 2) / 4.0;
            worst_lap = std::max(worst_lap, std::abs(lap));
        }
    }
    check(7, "hyperbolic-laplacian FD residual of H_phi", worst_lap, 1e-4);
}

// 8. ball model reproduces the identity chart
void criterion8()
{
    const ModelSpace h2 = makeSpace("real_hyperbolic", 2);
    Rng rng(88);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::complex<double> z =
            std::polar(0.97 * rng.uniform(), rng.uniform(0.0, 2 * M_PI));
        const auto F = ballModelMap(h2, 0.0, DiskPoint(z));
        worst = std::max({worst, std::abs(F[0] - z.real()),
                          std::abs(F[1] - z.imag())});
    }
    check(8, "ball model map F(z) = z at 100 random points", worst, 1e-10);
}

// 9. change of variables through B_t
void criterion9()
{
    const DiskPoint p;
    const DiskPoint q(std::complex<double>(0.2, 0.0));
    const double t = 4.0;
    auto lhs_fn = [&](double a) {
        return std::cos(disk::btAngle(p, q, a, t)) *
               disk::jacobianBt(p, q, a, t);
    };
    const double lhs =
        integratePeriodic(lhs_fn, 0.0, 2.0 * M_PI, 1024) / (2.0 * M_PI);
    const double rhs = integratePeriodic([](double w) { return std::cos(w); },
                                         0.0, 2.0 * M_PI, 1024) /
                       (2.0 * M_PI);
    check(9, "Jacobian change of variables for g = cos, t = 4",
          std::abs(lhs - rhs), 1e-5);
}

// 10. mean value property at infinity over growing horocycle arcs
void criterion10()
{
    AdaptiveDirichlet H([](double th) { return std::cos(th); }, 512);
    const std::vector<double> arcs = {1.0, 5.0, 25.0, 125.0};
    const auto avgs = meanValueAtInfinity(
        [&](std::complex<double> z) { return H(z); }, BoundaryAngle(0.0),
        arcs);
    bool monotone = true;
    double prev = 1e300;
    for (double a : avgs) {
        const double err = std::abs(a - 1.0);
        if (err > prev)
            monotone = false;
        prev = err;
    }
    report(10, "horocycle averages converge monotonically in error", prev,
           1.0, monotone);
    // The exact average over half-length L is 1 - 2 arctan(L/2)/L, so the
    // error at L = 125 is 2 arctan(62.5)/125 = 0.0249: the 0.01 target
    // cannot be met with these arcs (L >= 315 would be needed).  The
    // assertion is kept and expected red.
    check(10, "final arc average error (exact value 2 atan(62.5)/125)", prev,
          0.01);
}

// 11. exponential-polynomial recovery and translation rank
void criterion11()
{
    double worst_res = 0.0, worst_rate = 0.0;
    for (int n : {2, 3}) {
        const ModelSpace s = makeSpace("real_hyperbolic", n);
        std::vector<double> ts, xs;
        for (double t = 0.0; t <= 10.0 + 1e-12; t += 0.1) {
            ts.push_back(t);
            xs.push_back(s.density(t).f);
        }
        const FitResult fit = fitExpPoly(ts, xs);
        worst_res = std::max(worst_res, fit.rel_residual);
        worst_rate = std::max(worst_rate,
                              std::abs(fit.poly.leadingRate() - (n - 1.0)));
    }
    check(11, "Prony fit of sinh^{n-1}: relative residual", worst_res, 1e-6);
    check(11, "Prony fit leading rate vs n-1", worst_rate, 1e-4);

    auto f = [](double t) { return std::sinh(t); };
    std::vector<double> coarse, fine;
    for (double t = 0.0; t <= 6.0 + 1e-12; t += 0.25)
        coarse.push_back(t);
    for (double t = 0.0; t <= 6.0 + 1e-12; t += 0.125)
        fine.push_back(t);
    const int r1 = translationRank(f, coarse, coarse, 1e-9);
    const int r2 = translationRank(f, fine, fine, 1e-9);
    report(11, "translation rank of sinh stable under doubling",
           double(std::abs(r1 - 2) + std::abs(r2 - 2)), 0.0,
           r1 == 2 && r2 == 2);
}

// 12. Wronskian conservation
void criterion12()
{
    std::vector<Eigen::MatrixXd> ops;
    ops.push_back(Eigen::MatrixXd::Constant(1, 1, -1.0));
    ops.push_back(Eigen::MatrixXd::Zero(2, 2));
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(3, 3);
    R.diagonal() << -4.0, -1.0, -1.0;
    ops.push_back(R);
    double worst = 0.0;
    for (const auto& op : ops) {
        const JacobiTrajectory traj = integrateJacobi(op, 5.0, 1e-3);
        const Eigen::MatrixXd I =
            Eigen::MatrixXd::Identity(op.rows(), op.cols());
        for (size_t i = 1; i < traj.times.size(); i += 50) {
            const double drift =
                (traj.wronskian(static_cast<int>(i)) - I).cwiseAbs().maxCoeff() /
                std::max(1e-9, traj.times[i]);
            worst = std::max(worst, drift);
        }
    }
    check(12, "Wronskian drift per unit time on [0,5]", worst, 1e-7);
}

// 13. gradient integral formula
void criterion13()
{
    const ModelSpace h2 = makeSpace("real_hyperbolic", 2);
    auto u1 = [&](std::complex<double> w) {
        return hvFunction(h2, {1.0, 0.0}, DiskPoint(w));
    };
    const double r1 = gradientIntegralCheck(h2, u1, DiskPoint(), 0.0, 1.0);
    auto phi = [](double th) { return std::cos(2.0 * th); };
    auto u2 = [&](std::complex<double> w) {
        return dirichletSolve(phi, DiskPoint(w), 512);
    };
    const double r2 = gradientIntegralCheck(
        h2, u2, DiskPoint(std::complex<double>(0.2, 0.0)), M_PI / 2, 0.8);
    check(13, "gradient integral formula for h_v and a solved u",
          std::max(r1, r2), 1e-5);
}

}  // namespace

int main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion check(s) failed\n", g_failures);
    return 1;
}
