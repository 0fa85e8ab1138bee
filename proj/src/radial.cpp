#include "radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "config.hpp"
#include "quadrature.hpp"

namespace harmonia {

double radialLaplacian(const ModelSpace& space, const RadialFunction& F,
                       double r)
{
    if (r <= 0.0)
        throw std::invalid_argument("radial laplacian requires r > 0");
    const Config& cfg = Config::global();
    const double h = std::min(cfg.fd_step, 0.5 * r);
    const double F2 = derivative1(F.d1, r, h);
    const DensityValue d = space.density(r);
    return F2 + d.f1 / d.f * F.d1(r);
}

double mu(const ModelSpace& space, double r)
{
    if (r < 0.0)
        throw std::invalid_argument("mu requires r >= 0");
    if (r == 0.0)
        return 0.0;
    const Config& cfg = Config::global();
    const double I = integrate([&](double s) { return space.density(s).f; },
                               0.0, r, cfg.quad_rel_tol, cfg.quad_abs_tol);
    return I / space.density(r).f;
}

double muPrime(const ModelSpace& space, double r)
{
    const DensityValue d = space.density(r);
    if (r == 0.0)
        return 1.0 / space.dim();
    return 1.0 - d.f1 / d.f * mu(space, r);
}

double sphereEigenvalue(const ModelSpace& space, double r)
{
    if (r <= 0.0)
        throw std::invalid_argument("sphere eigenvalue requires r > 0");
    const DensityValue d = space.density(r);
    // (f'/f)' = (f'' f - f'^2) / f^2
    return -(d.f2 * d.f - d.f1 * d.f1) / (d.f * d.f);
}

double sphereScalarCurvature(const ModelSpace& space, double r)
{
    if (space.dim() < 3)
        throw std::invalid_argument("spheres of a surface are 1-dimensional");
    if (r <= 0.0)
        throw std::invalid_argument("sphere curvature requires r > 0");
    const DensityValue d = space.density(r);
    return d.f2 / d.f + (space.dim() - 1) * space.ricci();
}

double horosphereScalarCurvature(const ModelSpace& space)
{
    if (space.dim() < 3)
        throw std::invalid_argument("horospheres of a surface are 1-dimensional");
    const double h = space.meanCurvature();
    return h * h + (space.dim() - 1) * space.ricci();
}

double MuReport::worst() const
{
    return std::max({max_neg_mu, max_mu_prime_low, max_mu_prime_high,
                     max_product_bound, mu_prime0_error, mu_third0_error,
                     mu_limit_error});
}

MuReport checkMuProperties(const ModelSpace& space,
                           const std::vector<double>& grid)
{
    if (grid.empty())
        throw std::invalid_argument("mu check needs a nonempty grid");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("mu check grid must be sorted");

    MuReport rep;
    const int n = space.dim();
    // mu extends to an odd function of r; reflect for stencils near 0
    auto mu_odd = [&](double r) {
        return r >= 0.0 ? mu(space, r) : -mu(space, -r);
    };

    for (double r : grid) {
        const double m = mu(space, r);
        rep.max_neg_mu = std::max(rep.max_neg_mu, -m);
        const double h = std::min(Config::global().fd_step, 0.5 * (r + 1.0));
        const double m1 = derivative1(mu_odd, r, h);
        rep.max_mu_prime_low = std::max(rep.max_mu_prime_low, -m1);
        rep.max_mu_prime_high = std::max(rep.max_mu_prime_high, m1 - 1.0);
        const double m2 = derivative2(mu_odd, r, h);
        rep.max_product_bound =
            std::max(rep.max_product_bound, -m2 * m - 0.25);
    }

    rep.mu_prime0_error = std::abs(derivative1(mu_odd, 0.0, 1e-3) - 1.0 / n);
    const double third_ref = 2.0 * space.ricci() / (n * (n + 2.0));
    rep.mu_third0_error =
        std::abs(derivative3(mu_odd, 0.0, 0.03) - third_ref);
    if (space.meanCurvature() > 0.0)
        rep.mu_limit_error =
            std::abs(mu(space, grid.back()) - 1.0 / space.meanCurvature());
    return rep;
}

DensityInequalityReport checkDensityInequality(
    const ModelSpace& space, const std::vector<double>& grid)
{
    if (grid.empty())
        throw std::invalid_argument("density inequality check needs a grid");
    DensityInequalityReport rep;
    const int n = space.dim();
    bool first = true;
    for (double r : grid) {
        const DensityValue d = space.density(r);
        const double quot_prime = (d.f2 * d.f - d.f1 * d.f1) / (d.f * d.f);
        const double lhs = -std::pow(d.f, 2.0 / (n - 1)) * quot_prime;
        const double residual = lhs - (n - 1);
        if (first) {
            rep.min_residual = rep.max_residual = residual;
            first = false;
        } else {
            rep.min_residual = std::min(rep.min_residual, residual);
            rep.max_residual = std::max(rep.max_residual, residual);
        }
    }
    rep.equality = std::max(std::abs(rep.min_residual),
                            std::abs(rep.max_residual)) <= 1e-9;
    return rep;
}

SphericalMeanReport sphericalMeanCheck(const ModelSpace& space,
                                       const RadialFunction& F,
                                       const std::vector<double>& grid)
{
    if (grid.empty())
        throw std::invalid_argument("spherical mean check needs a grid");
    SphericalMeanReport rep;
    rep.min_laplacian = radialLaplacian(space, F, grid.front());
    for (double r : grid)
        rep.min_laplacian =
            std::min(rep.min_laplacian, radialLaplacian(space, F, r));
    rep.subharmonic = rep.min_laplacian >= -1e-9;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double drop = F.eval(grid[i]) - F.eval(grid[i + 1]);
        rep.max_decrease = std::max(rep.max_decrease, drop);
    }
    rep.nondecreasing = rep.max_decrease <= 1e-9;
    return rep;
}

}  // namespace harmonia
