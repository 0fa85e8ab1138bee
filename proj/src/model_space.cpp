#include "model_space.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "config.hpp"

namespace harmonia {

namespace {

// y'' + lambda y = 0, y(0)=0, y'(0)=1 in closed form.
class ClosedFactor final : public ScalarFactor {
public:
    explicit ClosedFactor(double lambda) : ScalarFactor(lambda)
    {
        if (lambda > 0.0)
            throw std::invalid_argument("positive Jacobi eigenvalue has conjugate points");
        mu_ = std::sqrt(-lambda);
    }
    double y(double r) const override
    {
        return mu_ == 0.0 ? r : std::sinh(mu_ * r) / mu_;
    }
    double y1(double r) const override
    {
        return mu_ == 0.0 ? 1.0 : std::cosh(mu_ * r);
    }

private:
    double mu_;
};

// Same solution obtained by a classical 4th-order one-step integration,
// cached on a uniform grid and evaluated by two-point Hermite interpolation
// using (y, y', y'') at the bracketing nodes.  This is the operational
// definition of rank1 densities; closed forms are reserved for the named
// catalog spaces and used as oracles in the tests.
class OdeFactor final : public ScalarFactor {
public:
    OdeFactor(double lambda, double horizon, double step)
        : ScalarFactor(lambda), step_(step)
    {
        if (lambda > 0.0)
            throw std::invalid_argument("positive Jacobi eigenvalue has conjugate points");
        const int n = static_cast<int>(std::ceil(horizon / step)) + 1;
        ys_.resize(n);
        y1s_.resize(n);
        double y = 0.0, yp = 1.0;
        ys_[0] = y;
        y1s_[0] = yp;
        for (int i = 1; i < n; ++i) {
            rk4Step(y, yp);
            ys_[i] = y;
            y1s_[i] = yp;
        }
        horizon_ = (n - 1) * step_;
    }

    double y(double r) const override { return eval(r).first; }
    double y1(double r) const override { return eval(r).second; }

private:
    void rk4Step(double& y, double& yp) const
    {
        const double h = step_, lam = lambda_;
        auto acc = [lam](double yy) { return -lam * yy; };
        double k1y = yp, k1p = acc(y);
        double k2y = yp + 0.5 * h * k1p, k2p = acc(y + 0.5 * h * k1y);
        double k3y = yp + 0.5 * h * k2p, k3p = acc(y + 0.5 * h * k2y);
        double k4y = yp + h * k3p, k4p = acc(y + h * k3y);
        y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
        yp += h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
    }

    std::pair<double, double> eval(double r) const
    {
        if (r < 0.0)
            throw std::invalid_argument("density evaluated at negative radius");
        if (r > horizon_)
            throw std::domain_error("rank1 density evaluated beyond ODE horizon");
        int i = static_cast<int>(r / step_);
        if (i >= static_cast<int>(ys_.size()) - 1)
            i = static_cast<int>(ys_.size()) - 2;
        const double a = i * step_;
        const double t = r - a;
        const double h = step_;
        const double ya = ys_[i], pa = y1s_[i], sa = -lambda_ * ya;
        const double yb = ys_[i + 1], pb = y1s_[i + 1], sb = -lambda_ * yb;
        // quintic two-point Hermite in the local variable t on [0,h]
        // basis: match value, first and second derivative at both ends
        const double u = t / h;
        const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
        const double H0 = 1 - 10 * u3 + 15 * u4 - 6 * u5;
        const double H1 = u - 6 * u3 + 8 * u4 - 3 * u5;
        const double H2 = 0.5 * u2 - 1.5 * u3 + 1.5 * u4 - 0.5 * u5;
        const double H3 = 10 * u3 - 15 * u4 + 6 * u5;
        const double H4 = -4 * u3 + 7 * u4 - 3 * u5;
        const double H5 = 0.5 * u3 - u4 + 0.5 * u5;
        const double val = H0 * ya + H1 * h * pa + H2 * h * h * sa +
                           H3 * yb + H4 * h * pb + H5 * h * h * sb;
        // derivative of the interpolant
        const double d0 = (-30 * u2 + 60 * u3 - 30 * u4) / h;
        const double d1 = 1 - 18 * u2 + 32 * u3 - 15 * u4;
        const double d2 = (u - 4.5 * u2 + 6 * u3 - 2.5 * u4) * h;
        const double d3 = (30 * u2 - 60 * u3 + 30 * u4) / h;
        const double d4 = -12 * u2 + 28 * u3 - 15 * u4;
        const double d5 = (1.5 * u2 - 4 * u3 + 2.5 * u4) * h;
        const double der = d0 * ya + d1 * pa + d2 * sa +
                           d3 * yb + d4 * pb + d5 * sb;
        return {val, der};
    }

    double step_;
    double horizon_;
    std::vector<double> ys_, y1s_;
};

void checkDim(int n, int min)
{
    if (n < min)
        throw std::invalid_argument("invalid dimension");
}

double eigenRicci(const std::vector<CurvatureEigen>& eigen)
{
    double s = 0.0;
    for (const auto& e : eigen)
        s += e.lambda * e.mult;
    return s;
}

}  // namespace

double unitSphereVolume(int n)
{
    return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

DensityValue ModelSpace::density(double r) const
{
    if (r < 0.0)
        throw std::invalid_argument("density requires r >= 0");
    double P = 1.0, P1 = 0.0, P2 = 0.0;
    for (size_t k = 0; k < eigen_.size(); ++k) {
        const ScalarFactor& fac = *factors_[k];
        const double y = fac.y(r), y1 = fac.y1(r);
        const double y2 = -fac.lambda() * y;
        for (int m = 0; m < eigen_[k].mult; ++m) {
            const double nP = P * y;
            const double nP1 = P1 * y + P * y1;
            const double nP2 = P2 * y + 2.0 * P1 * y1 + P * y2;
            P = nP;
            P1 = nP1;
            P2 = nP2;
        }
    }
    return {P, P1, P2};
}

double ModelSpace::sphereVolume(double r) const
{
    if (r <= 0.0)
        throw std::invalid_argument("sphereVolume requires r > 0");
    return unitSphereVolume(dim_) * density(r).f;
}

GrowthExponents ModelSpace::growthExponents() const
{
    const Config& cfg = Config::global();
    std::vector<double> ts, ls;
    for (double t = cfg.growth_fit_lo; t <= cfg.growth_fit_hi + 1e-9;
         t += cfg.growth_step) {
        ts.push_back(t);
        ls.push_back(std::log(density(t).f));
    }
    const int N = static_cast<int>(ts.size());
    // first pass: ln f ~ ln c + m ln t + h t
    Eigen::MatrixXd A(N, 3);
    Eigen::VectorXd b(N);
    for (int i = 0; i < N; ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = std::log(ts[i]);
        A(i, 2) = ts[i];
        b(i) = ls[i];
    }
    Eigen::Vector3d sol = A.colPivHouseholderQr().solve(b);
    int m = static_cast<int>(std::lround(sol(1)));
    if (m < 0)
        m = 0;
    // second pass with m pinned to the integer
    Eigen::MatrixXd A2(N, 2);
    Eigen::VectorXd b2(N);
    for (int i = 0; i < N; ++i) {
        A2(i, 0) = 1.0;
        A2(i, 1) = ts[i];
        b2(i) = ls[i] - m * std::log(ts[i]);
    }
    Eigen::Vector2d sol2 = A2.colPivHouseholderQr().solve(b2);
    double h = sol2(1);
    if (std::abs(h) < cfg.growth_tol_h)
        h = 0.0;
    double residual = 0.0;
    for (int i = 0; i < N; ++i)
        residual = std::max(residual,
                            std::abs(sol2(0) + h * ts[i] + m * std::log(ts[i]) - ls[i]));
    if (residual > 1e-5)
        throw std::runtime_error("growth exponents did not converge within horizon");
    return {m, h, std::exp(sol2(0))};
}

GrowthClass ModelSpace::classifyGrowth() const
{
    const Config& cfg = Config::global();
    if (h_ <= cfg.growth_tol_h)
        return GrowthClass::Polynomial;
    GrowthExponents g = growthExponents();
    if (g.m != 0)
        throw std::domain_error(
            "space has h > 0 with a residual polynomial factor; "
            "outside the polynomial/purely-exponential dichotomy");
    // f e^{-ht} bounded above and below on [1, horizon]
    double lo = 1e300, hi = 0.0;
    for (double t = 1.0; t <= cfg.growth_fit_hi + 1e-9; t += 0.5) {
        const double ratio = density(t).f * std::exp(-h_ * t);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    if (!(lo > 0.0) || !std::isfinite(hi))
        throw std::domain_error("density ratio f e^{-ht} not bounded");
    return GrowthClass::PurelyExponential;
}

ModelSpace ModelSpace::euclidean(int n)
{
    checkDim(n, 2);
    ModelSpace s;
    s.name_ = "euclidean";
    s.dim_ = n;
    s.h_ = 0.0;
    s.eigen_ = {{0.0, n - 1}};
    s.ricci_ = 0.0;
    s.factors_ = {std::make_shared<ClosedFactor>(0.0)};
    return s;
}

ModelSpace ModelSpace::realHyperbolic(int n)
{
    checkDim(n, 2);
    ModelSpace s;
    s.name_ = "real_hyperbolic";
    s.dim_ = n;
    s.h_ = n - 1.0;
    s.eigen_ = {{-1.0, n - 1}};
    s.ricci_ = -(n - 1.0);
    s.factors_ = {std::make_shared<ClosedFactor>(-1.0)};
    return s;
}

ModelSpace ModelSpace::complexHyperbolic(int n)
{
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("complex hyperbolic requires even real dimension >= 4");
    ModelSpace s;
    s.name_ = "complex_hyperbolic";
    s.dim_ = n;
    s.h_ = n;  // (2m-1)*1 + 1*1 with eigenvalues {-4, -1 x (2m-2)}
    s.eigen_ = {{-4.0, 1}, {-1.0, n - 2}};
    s.ricci_ = eigenRicci(s.eigen_);
    s.factors_ = {std::make_shared<ClosedFactor>(-4.0),
                  std::make_shared<ClosedFactor>(-1.0)};
    return s;
}

ModelSpace ModelSpace::rank1(int n, const std::vector<CurvatureEigen>& eigen)
{
    checkDim(n, 2);
    if (eigen.empty())
        throw std::invalid_argument("rank1 model needs curvature eigenvalues");
    int total = 0;
    for (const auto& e : eigen) {
        if (e.mult < 1)
            throw std::invalid_argument("eigenvalue multiplicity must be positive");
        if (e.lambda > 0.0)
            throw std::invalid_argument("positive Jacobi eigenvalue has conjugate points");
        total += e.mult;
    }
    if (total != n - 1)
        throw std::invalid_argument("eigenvalue multiplicities must sum to n-1");
    const Config& cfg = Config::global();
    ModelSpace s;
    s.name_ = "rank1_model";
    s.dim_ = n;
    s.eigen_ = eigen;
    s.ricci_ = eigenRicci(eigen);
    double h = 0.0;
    for (const auto& e : eigen) {
        h += e.mult * std::sqrt(-e.lambda);
        s.factors_.push_back(std::make_shared<OdeFactor>(
            e.lambda, cfg.rank1_horizon, cfg.jacobi_step));
    }
    s.h_ = h;
    return s;
}

ModelSpace makeSpace(const std::string& kind, int dim,
                     const std::vector<CurvatureEigen>& eigen)
{
    if (kind == "euclidean")
        return ModelSpace::euclidean(dim);
    if (kind == "real_hyperbolic")
        return ModelSpace::realHyperbolic(dim);
    if (kind == "complex_hyperbolic")
        return ModelSpace::complexHyperbolic(dim);
    if (kind == "rank1_model")
        return ModelSpace::rank1(dim, eigen);
    throw std::invalid_argument("unknown space kind: " + kind);
}

}  // namespace harmonia
