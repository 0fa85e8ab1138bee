#pragma once

#include <complex>
#include <utility>

namespace harmonia {

/// Point of the Poincare unit disk, metric 4|dz|^2/(1-|z|^2)^2.
struct DiskPoint {
    std::complex<double> z;
    DiskPoint() : z(0.0) {}
    explicit DiskPoint(std::complex<double> zz);
};

/// Boundary point xi = e^{i theta}, theta normalized to [0, 2pi).
struct BoundaryAngle {
    double theta;
    explicit BoundaryAngle(double t);
    std::complex<double> unit() const;
};

namespace disk {

/// d(z, w) = 2 artanh(|z - w| / |1 - conj(z) w|).
double distance(const DiskPoint& z, const DiskPoint& w);

/// Unit-speed geodesic ray from p with initial chart direction e^{i dir}.
DiskPoint geodesicRay(const DiskPoint& p, double dir, double t);

/// d(x, c(t)) for the ray from p toward xi, stable for large t (the ray
/// point itself leaves the representable disk around t ~ 28).
double distanceToRayPoint(const DiskPoint& x, const DiskPoint& p,
                          const BoundaryAngle& xi, double t);

/// Busemann function normalized at the origin:
/// b_xi(z) = ln(|xi - z|^2 / (1 - |z|^2)).
double busemann(const BoundaryAngle& xi, const DiskPoint& z);

/// Truncated Busemann d(z, c_xi(t)) - t along the ray from the origin.
double busemannTruncated(const BoundaryAngle& xi, const DiskPoint& z, double t);

/// Gromov product (x, y)_p = (d(x,p) + d(y,p) - d(x,y)) / 2.
double gromovProduct(const DiskPoint& x, const DiskPoint& y, const DiskPoint& p);

/// Chart angle at p of the initial direction of the geodesic from p to x.
double directionToward(const DiskPoint& p, const DiskPoint& x);

/// Chart angle at x of the outward direction of the geodesic from p through x.
double radialDirectionAt(const DiskPoint& p, const DiskPoint& x);

/// Point on the sphere S_t(p) hit by the ray from q with direction dir, and
/// the ray parameter of the hit.  Requires d(p, q) < t.
std::pair<DiskPoint, double> sphereHit(const DiskPoint& p, const DiskPoint& q,
                                       double dir, double t);

/// Jacobian of B_t: S_q -> S_p at the direction dir,
/// f(d(q, F_t(v))) / f(t) / <N_p(F), N_q(F)> with f = sinh.
double jacobianBt(const DiskPoint& p, const DiskPoint& q, double dir, double t);

/// Angle coordinate at p of B_t(v) = (1/t) exp_p^{-1}(F_t(v)).
double btAngle(const DiskPoint& p, const DiskPoint& q, double dir, double t);

/// Divergence of two rays from the origin at angle alpha: the exact
/// separation at time t and the lower bound a(t) * alpha with
/// a(t) = min(t/pi, a_const / sqrt((f'/f)(t/2) - h)).
struct DivergencePair {
    double actual;
    double bound;
};
DivergencePair divergenceCheck(double alpha, double t);

/// Point at arclength fraction s in [0, d(x,y)] along the geodesic from x to y.
DiskPoint geodesicBetween(const DiskPoint& x, const DiskPoint& y, double s);

}  // namespace disk

}  // namespace harmonia
