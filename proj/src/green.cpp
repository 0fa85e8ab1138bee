#include "green.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "config.hpp"
#include "quadrature.hpp"

namespace harmonia {

GreenKernel::GreenKernel(const ModelSpace& space)
    : space_(space),
      beta_(1.0 / unitSphereVolume(space.dim())),
      tail_(space.growthExponents()),
      cut_(Config::global().green_tail_cut)
{
    if (tail_.h <= 0.0 && tail_.m < 2)
        throw std::domain_error("no positive Green's kernel: 1/f is not integrable");
    // precompute suffix integrals so evaluations only integrate one panel;
    // the panel errors share a sign, keeping the total at panel accuracy
    for (double r = 1e-4; r < 0.5; r *= 1.3)
        bp_.push_back(r);
    for (double r = 0.5; r < cut_ - 1e-9; r += 0.125)
        bp_.push_back(r);
    bp_.push_back(cut_);
    suffix_.assign(bp_.size(), 0.0);
    auto inv_f = [this](double t) { return 1.0 / space_.density(t).f; };
    for (size_t k = bp_.size() - 1; k-- > 0;)
        suffix_[k] = suffix_[k + 1] +
                     integrate(inv_f, bp_[k], bp_[k + 1], 1e-14, 0.0);
}

double GreenKernel::integralToCut(double r) const
{
    auto inv_f = [this](double t) { return 1.0 / space_.density(t).f; };
    const auto it = std::lower_bound(bp_.begin(), bp_.end(), r);
    if (it == bp_.end())
        return 0.0;
    const size_t k = it - bp_.begin();
    double local = 0.0;
    if (bp_[k] > r)
        local = integrate(inv_f, r, bp_[k], 1e-13, 0.0);
    return local + suffix_[k];
}

double GreenKernel::tailFrom(double s) const
{
    // int_s^inf dt / (c t^m e^{ht}), asymptotic series to three terms
    const double m = tail_.m, h = tail_.h, c = tail_.c;
    if (h == 0.0)
        return std::pow(s, 1.0 - m) / ((m - 1.0) * c);
    const double hs = h * s;
    const double series = 1.0 - m / hs + m * (m + 1.0) / (hs * hs);
    return std::exp(-hs) * std::pow(s, -m) / (c * h) * series;
}

double GreenKernel::radial(double r) const
{
    if (r <= 0.0)
        throw std::invalid_argument("green kernel requires r > 0");
    if (r >= cut_)
        return beta_ * tailFrom(r);
    return beta_ * (integralToCut(r) + tailFrom(cut_));
}

double GreenKernel::radialDerivative(double r) const
{
    if (r <= 0.0)
        throw std::invalid_argument("green kernel requires r > 0");
    return -beta_ / space_.density(r).f;
}

double GreenKernel::martinRatio(double a, double s) const
{
    if (s < Config::global().martin_s_min)
        throw std::invalid_argument("martin ratio requires s at or beyond the horizon start");
    if (s + a <= 0.0)
        throw std::invalid_argument("martin ratio requires s + a > 0");
    return radial(s + a) / radial(s);
}

double verifyFundamental(const GreenKernel& kernel, const RadialFunction& phi,
                         double support_radius)
{
    if (support_radius <= 0.0)
        throw std::invalid_argument("support radius must be positive");
    if (std::abs(phi.eval(support_radius)) > 1e-10 ||
        std::abs(phi.d1(support_radius)) > 1e-10)
        throw std::invalid_argument("test function not supported inside the quadrature range");
    const ModelSpace& space = kernel.space();
    const double omega_n = unitSphereVolume(space.dim());
    auto integrand = [&](double r) {
        return kernel.radial(r) * radialLaplacian(space, phi, r) *
               space.density(r).f;
    };
    const double I =
        omega_n * integrate(integrand, 1e-8, support_radius, 1e-11, 1e-12);
    return std::abs(I + phi.origin_value);
}

std::vector<double> martinKernelAlongRay(const GreenKernel& kernel,
                                         const DiskPoint& x,
                                         const DiskPoint& p0,
                                         const BoundaryAngle& xi,
                                         const std::vector<double>& t_seq)
{
    std::vector<double> out;
    out.reserve(t_seq.size());
    for (double t : t_seq) {
        const double dx = disk::distanceToRayPoint(x, p0, xi, t);
        const double dp = t;  // the ray is unit speed from p0
        if (dx <= 0.0) {
            out.push_back(1.0);  // x sits on the ray point itself
            continue;
        }
        out.push_back(kernel.radial(dx) / kernel.radial(dp));
    }
    return out;
}

}  // namespace harmonia
