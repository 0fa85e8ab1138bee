#pragma once

#include <vector>

#include "disk.hpp"
#include "model_space.hpp"
#include "radial.hpp"

namespace harmonia {

/// Radial Green's kernel G(x,y) = G~(d(x,y)) = (1/omega_n) int_d^inf dt/f(t).
/// Finite for h > 0 or polynomial growth of order >= 2; construction throws
/// otherwise (flat n = 2 has no positive kernel).
class GreenKernel {
public:
    explicit GreenKernel(const ModelSpace& space);

    const ModelSpace& space() const { return space_; }
    double beta() const { return beta_; }
    const GrowthExponents& tailParams() const { return tail_; }

    /// G~(r) for r > 0: quadrature to the tail cut plus the analytic tail.
    double radial(double r) const;

    /// G~'(r) = -beta / f(r).
    double radialDerivative(double r) const;

    /// G~(s+a) / G~(s); tends to e^{-h a} as s grows.
    double martinRatio(double a, double s) const;

private:
    double tailFrom(double s) const;
    double integralToCut(double r) const;

    ModelSpace space_;
    double beta_;
    GrowthExponents tail_;
    double cut_;
    // suffix integrals int_{bp_[k]}^{cut} dt/f over fixed breakpoints
    std::vector<double> bp_;
    std::vector<double> suffix_;
};

/// omega_n int_0^R G~(r) (Delta phi)(r) f(r) dr + phi(0); near zero for a
/// compactly supported radial test function (fundamental solution property).
double verifyFundamental(const GreenKernel& kernel, const RadialFunction& phi,
                         double support_radius);

/// Green quotient G~(d(x, c(t))) / G~(d(p0, c(t))) along the ray from p0
/// toward xi, evaluated at the given parameters; converges to e^{-b_xi(x)}
/// on the disk testbed (h = 1).
std::vector<double> martinKernelAlongRay(const GreenKernel& kernel,
                                         const DiskPoint& x,
                                         const DiskPoint& p0,
                                         const BoundaryAngle& xi,
                                         const std::vector<double>& t_seq);

}  // namespace harmonia
