#pragma once

#include <functional>
#include <vector>

#include "model_space.hpp"

namespace harmonia {

/// A radial function F(r) with analytic first derivative; the second
/// derivative is obtained by finite differences of d1 where needed.
struct RadialFunction {
    std::function<double(double)> eval;
    std::function<double(double)> d1;
    double origin_value = 0.0;
};

/// Delta(F o d_p)(r) = F''(r) + (f'/f)(r) F'(r); requires r > 0.
double radialLaplacian(const ModelSpace& space, const RadialFunction& F,
                       double r);

/// mu(r) = int_0^r f(s) ds / f(r); mu(0) = 0.
double mu(const ModelSpace& space, double r);

/// First derivative of mu from the defining quotient,
/// mu'(r) = 1 - (f'/f)(r) mu(r).
double muPrime(const ModelSpace& space, double r);

/// Eigenvalue -(f'/f)'(r) of the sphere Laplacian on the phi_v family.
double sphereEigenvalue(const ModelSpace& space, double r);

/// scal of the geodesic sphere S_r: f''/f(r) + (n-1) Ric; requires n >= 3.
double sphereScalarCurvature(const ModelSpace& space, double r);

/// scal of any horosphere: h^2 + (n-1) Ric; zero iff constant curvature.
double horosphereScalarCurvature(const ModelSpace& space);

/// Checks of mu(0)=0, mu'(0)=1/n, mu'''(0) = 2 Ric / (n(n+2)),
/// 0 <= mu' <= 1, mu >= 0, -mu'' mu <= 1/4, and mu(r_max) vs 1/h.
struct MuReport {
    double max_neg_mu = 0.0;          // violation of mu >= 0
    double max_mu_prime_low = 0.0;    // violation of mu' >= 0
    double max_mu_prime_high = 0.0;   // violation of mu' <= 1
    double max_product_bound = 0.0;   // violation of -mu'' mu <= 1/4
    double mu_prime0_error = 0.0;     // |mu'(0+) - 1/n|
    double mu_third0_error = 0.0;     // |mu'''(0+) - 2 Ric/(n(n+2))|
    double mu_limit_error = 0.0;      // |mu(r_max) - 1/h| when h > 0
    double worst() const;
};

MuReport checkMuProperties(const ModelSpace& space,
                           const std::vector<double>& grid);

/// Boxed differential inequality: residual
/// -f^{2/(n-1)}(r) (f'/f)'(r) - (n-1), nonnegative on harmonic spaces.
struct DensityInequalityReport {
    double min_residual = 0.0;
    double max_residual = 0.0;
    bool equality = false;  // |residual| tiny across the whole grid
};

DensityInequalityReport checkDensityInequality(const ModelSpace& space,
                                               const std::vector<double>& grid);

/// Radial mean value inequality: a radially subharmonic F is nondecreasing.
struct SphericalMeanReport {
    bool subharmonic = true;        // radial Laplacian >= -tol on the grid
    double min_laplacian = 0.0;
    double max_decrease = 0.0;      // worst F(r_{i+1}) - F(r_i) undershoot
    bool nondecreasing = true;
};

SphericalMeanReport sphericalMeanCheck(const ModelSpace& space,
                                       const RadialFunction& F,
                                       const std::vector<double>& grid);

}  // namespace harmonia
