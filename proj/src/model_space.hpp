#pragma once

#include <memory>
#include <string>
#include <vector>

namespace harmonia {

/// Value of the volume density and its first two radial derivatives.
struct DensityValue {
    double f;
    double f1;
    double f2;
};

/// One eigenvalue of the radial Jacobi operator R(t)w = R(w,c')c' together
/// with its multiplicity.  Constant in t for every catalog space.
struct CurvatureEigen {
    double lambda;
    int mult;
};

/// Growth data of the density: f(t) / (t^m e^{ht}) -> c as t -> infinity.
struct GrowthExponents {
    int m;
    double h;
    double c;
};

enum class GrowthClass { Polynomial, PurelyExponential };

/// Scalar Jacobi solution y'' + lambda*y = 0 with y(0)=0, y'(0)=1.
/// Either a closed form (catalog spaces) or a cached ODE integration
/// (rank1 models).  y2 is always -lambda*y.
class ScalarFactor {
public:
    virtual ~ScalarFactor() = default;
    virtual double y(double r) const = 0;
    virtual double y1(double r) const = 0;
    double lambda() const { return lambda_; }

protected:
    explicit ScalarFactor(double lambda) : lambda_(lambda) {}
    double lambda_;
};

/// A harmonic model manifold: dimension, density evaluator, horosphere mean
/// curvature h = lim f'/f, Ricci constant, and the Jacobi-operator spectrum.
/// Immutable after construction; all methods are const and thread safe.
class ModelSpace {
public:
    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    double meanCurvature() const { return h_; }
    double ricci() const { return ricci_; }
    const std::vector<CurvatureEigen>& curvatureEigen() const { return eigen_; }

    /// (f(r), f'(r), f''(r)) for r >= 0.
    DensityValue density(double r) const;

    /// vol S(p,r) = omega_n * f(r); requires r > 0.
    double sphereVolume(double r) const;

    /// Estimate (m, h, c) with f(t)/(t^m e^{ht}) -> c by log-regression on
    /// large-t samples.  Throws if the samples do not settle.
    GrowthExponents growthExponents() const;

    /// Polynomial iff h = 0; PurelyExponential iff h > 0 and f e^{-ht} is
    /// bounded away from 0 and infinity.  Throws for spaces outside the
    /// dichotomy (h > 0 with a residual polynomial factor).
    GrowthClass classifyGrowth() const;

    static ModelSpace euclidean(int n);
    static ModelSpace realHyperbolic(int n);
    static ModelSpace complexHyperbolic(int n);
    static ModelSpace rank1(int n, const std::vector<CurvatureEigen>& eigen);

private:
    ModelSpace() = default;

    std::string name_;
    int dim_ = 0;
    double h_ = 0.0;
    double ricci_ = 0.0;
    std::vector<CurvatureEigen> eigen_;
    // one factor per catalog eigenvalue; density = prod factor^mult
    std::vector<std::shared_ptr<const ScalarFactor>> factors_;
};

/// Catalog construction by kind string: "euclidean", "real_hyperbolic",
/// "complex_hyperbolic", "rank1_model" (the latter requires eigenvalues).
ModelSpace makeSpace(const std::string& kind, int dim,
                     const std::vector<CurvatureEigen>& eigen = {});

/// Volume of the (n-1)-dimensional Euclidean unit sphere, 2 pi^{n/2} / Gamma(n/2).
double unitSphereVolume(int n);

}  // namespace harmonia
