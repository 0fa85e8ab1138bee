#include "disk.hpp"

#include <cmath>
#include <stdexcept>

#include "config.hpp"
#include "quadrature.hpp"

namespace harmonia {

namespace {

constexpr double kBoundaryMargin = 1e-12;

std::complex<double> mobiusFrom(const DiskPoint& p, std::complex<double> w)
{
    // isometry taking 0 to p
    return (w + p.z) / (1.0 + std::conj(p.z) * w);
}

std::complex<double> mobiusTo(const DiskPoint& p, std::complex<double> x)
{
    // isometry taking p to 0
    return (x - p.z) / (1.0 - std::conj(p.z) * x);
}

}  // namespace

DiskPoint::DiskPoint(std::complex<double> zz) : z(zz)
{
    if (std::abs(zz) >= 1.0 - kBoundaryMargin)
        throw std::invalid_argument("disk point must satisfy |z| < 1");
}

BoundaryAngle::BoundaryAngle(double t)
{
    theta = std::fmod(t, 2.0 * M_PI);
    if (theta < 0.0)
        theta += 2.0 * M_PI;
}

std::complex<double> BoundaryAngle::unit() const
{
    return std::polar(1.0, theta);
}

namespace disk {

double distance(const DiskPoint& z, const DiskPoint& w)
{
    const double num = std::abs(z.z - w.z);
    const double den = std::abs(1.0 - std::conj(z.z) * w.z);
    return 2.0 * std::atanh(num / den);
}

DiskPoint geodesicRay(const DiskPoint& p, double dir, double t)
{
    if (t < 0.0)
        throw std::invalid_argument("ray parameter must be nonnegative");
    const std::complex<double> w = std::tanh(0.5 * t) * std::polar(1.0, dir);
    return DiskPoint(mobiusFrom(p, w));
}

double distanceToRayPoint(const DiskPoint& x, const DiskPoint& p,
                          const BoundaryAngle& xi, double t)
{
    // translate p to the origin; the Mobius map extends to |z| = 1
    std::complex<double> xiu =
        (xi.unit() - p.z) / (1.0 - std::conj(p.z) * xi.unit());
    xiu /= std::abs(xiu);
    const std::complex<double> x0 = mobiusTo(p, x.z);
    const double d0 = 2.0 * std::atanh(std::abs(x0));
    if (d0 == 0.0)
        return t;
    const double cosang = std::cos(std::arg(x0) - std::arg(xiu));
    // hyperbolic law of cosines from the origin, written to stay finite:
    // cosh d = cosh d0 cosh t - sinh d0 cos(ang) sinh t
    const double A = std::cosh(d0) - std::sinh(d0) * cosang;  // e^t coefficient
    const double B = std::cosh(d0) + std::sinh(d0) * cosang;  // e^-t coefficient
    if (t > 350.0)
        return t + std::log(A);  // B e^{-t} negligible and e^t overflows
    const double coshd = 0.5 * (A * std::exp(t) + B * std::exp(-t));
    return std::acosh(std::max(1.0, coshd));
}

double busemann(const BoundaryAngle& xi, const DiskPoint& z)
{
    const double num = std::norm(xi.unit() - z.z);
    const double den = 1.0 - std::norm(z.z);
    return std::log(num / den);
}

double busemannTruncated(const BoundaryAngle& xi, const DiskPoint& z, double t)
{
    return distanceToRayPoint(z, DiskPoint(), xi, t) - t;
}

double gromovProduct(const DiskPoint& x, const DiskPoint& y, const DiskPoint& p)
{
    return 0.5 * (distance(x, p) + distance(y, p) - distance(x, y));
}

double directionToward(const DiskPoint& p, const DiskPoint& x)
{
    return std::arg(mobiusTo(p, x.z));
}

double radialDirectionAt(const DiskPoint& p, const DiskPoint& x)
{
    const std::complex<double> w = mobiusTo(p, x.z);
    if (std::abs(w) == 0.0)
        throw std::invalid_argument("radial direction undefined at the center");
    // pull the radial direction at w back through the inverse chart map
    const std::complex<double> d =
        (w / std::abs(w)) * std::pow(1.0 - std::conj(p.z) * x.z, 2);
    return std::arg(d);
}

std::pair<DiskPoint, double> sphereHit(const DiskPoint& p, const DiskPoint& q,
                                       double dir, double t)
{
    if (t <= 0.0)
        throw std::invalid_argument("sphere radius must be positive");
    const double dpq = distance(p, q);
    if (dpq >= t)
        throw std::invalid_argument("sphere hit requires q inside the ball");
    const double lo = std::max(0.0, t - dpq - 1e-9);
    const double hi = t + dpq + 1e-9;
    auto g = [&](double s) {
        return distance(p, geodesicRay(q, dir, s)) - t;
    };
    if (g(lo) > 0.0 || g(hi) < 0.0)
        throw std::runtime_error("sphere hit: bracketing failure");
    const double s = bisect(g, lo, hi, 1e-12);
    return {geodesicRay(q, dir, s), s};
}

double jacobianBt(const DiskPoint& p, const DiskPoint& q, double dir, double t)
{
    const auto [F, s] = sphereHit(p, q, dir, t);
    // conformal metric: the inner product of the two unit normals is the
    // cosine of the chart angle between them
    const double ang = radialDirectionAt(p, F) - radialDirectionAt(q, F);
    return std::sinh(s) / std::sinh(t) / std::cos(ang);
}

double btAngle(const DiskPoint& p, const DiskPoint& q, double dir, double t)
{
    const auto [F, s] = sphereHit(p, q, dir, t);
    (void)s;
    return directionToward(p, F);
}

DivergencePair divergenceCheck(double alpha, double t)
{
    if (alpha <= 0.0 || alpha > M_PI)
        throw std::invalid_argument("angle must lie in (0, pi]");
    if (t <= 0.0)
        throw std::invalid_argument("time must be positive");
    const double ch = std::cosh(t), sh = std::sinh(t);
    const double actual =
        std::acosh(std::max(1.0, ch * ch - sh * sh * std::cos(alpha)));
    const double a_const = Config::global().divergence_a_const;
    const double quot = std::cosh(0.5 * t) / std::sinh(0.5 * t);  // f'/f at t/2
    const double a_t = std::min(t / M_PI, a_const / std::sqrt(quot - 1.0));
    return {actual, a_t * alpha};
}

DiskPoint geodesicBetween(const DiskPoint& x, const DiskPoint& y, double s)
{
    const std::complex<double> w = mobiusTo(x, y.z);
    if (std::abs(w) == 0.0)
        return x;
    const std::complex<double> u =
        std::tanh(0.5 * s) * (w / std::abs(w));
    return DiskPoint(mobiusFrom(x, u));
}

}  // namespace disk

}  // namespace harmonia
