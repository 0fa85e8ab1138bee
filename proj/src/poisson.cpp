#include "poisson.hpp"

#include <cmath>
#include <stdexcept>

#include "config.hpp"
#include "quadrature.hpp"
#include "radial.hpp"

namespace harmonia {

namespace {

// e^{-b_xi(z)}, the Poisson kernel of the disk (h = 1)
double poissonWeight(double cos_t, double sin_t, std::complex<double> z)
{
    const double dx = cos_t - z.real();
    const double dy = sin_t - z.imag();
    return (1.0 - std::norm(z)) / (dx * dx + dy * dy);
}

}  // namespace

VisibilityMeasure visibilityMeasure(const DiskPoint& p, int node_count)
{
    if (node_count < 8)
        throw std::invalid_argument("visibility measure needs at least 8 nodes");
    VisibilityMeasure m;
    m.basepoint = p;
    m.nodes.reserve(node_count);
    m.weights.resize(node_count);
    double total = 0.0;
    for (int j = 0; j < node_count; ++j) {
        const double theta = 2.0 * M_PI * j / node_count;
        m.nodes.emplace_back(theta);
        const double w = poissonWeight(std::cos(theta), std::sin(theta), p.z);
        m.weights[j] = w;
        total += w;
    }
    for (double& w : m.weights)
        w /= total;
    return m;
}

double dirichletSolve(const BoundaryFn& phi, const DiskPoint& z,
                      int node_count)
{
    if (node_count < 8)
        throw std::invalid_argument("dirichlet solve needs at least 8 nodes");
    // normalize by division so constant data reproduces exactly
    double total = 0.0, acc = 0.0;
    for (int j = 0; j < node_count; ++j) {
        const double theta = 2.0 * M_PI * j / node_count;
        const double w = poissonWeight(std::cos(theta), std::sin(theta), z.z);
        total += w;
        acc += w * phi(theta);
    }
    return acc / total;
}

AdaptiveDirichlet::AdaptiveDirichlet(BoundaryFn phi, int base_nodes)
    : phi_(std::move(phi)), base_(base_nodes)
{
    if (base_nodes < 8)
        throw std::invalid_argument("adaptive solver needs at least 8 base nodes");
}

const AdaptiveDirichlet::Table& AdaptiveDirichlet::table(int n) const
{
    auto it = cache_.find(n);
    if (it != cache_.end())
        return it->second;
    Table t;
    t.re.resize(n);
    t.im.resize(n);
    t.phi.resize(n);
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * M_PI * j / n;
        t.re[j] = std::cos(theta);
        t.im[j] = std::sin(theta);
        t.phi[j] = phi_(theta);
    }
    return cache_.emplace(n, std::move(t)).first->second;
}

double AdaptiveDirichlet::operator()(std::complex<double> z) const
{
    const double margin = 1.0 - std::abs(z);
    int n = base_;
    // trapezoid error decays like |z|^n: keep n * margin comfortably large
    while (n * margin < 45.0 && n < (1 << 23))
        n *= 2;
    const Table& t = table(n);
    double total = 0.0, acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double w = poissonWeight(t.re[j], t.im[j], z);
        total += w;
        acc += w * t.phi[j];
    }
    return acc / total;
}

double hvFunction(const ModelSpace& disk_space, std::array<double, 2> v,
                  const DiskPoint& q)
{
    if (std::abs(q.z) == 0.0)
        return 0.0;
    const double d = disk::distance(DiskPoint(), q);
    const double phi_v = v[0] * std::cos(std::arg(q.z)) +
                         v[1] * std::sin(std::arg(q.z));
    return mu(disk_space, d) * phi_v;
}

std::array<double, 2> ballModelMap(const ModelSpace& disk_space,
                                   double frame_angle, const DiskPoint& q)
{
    const double c = std::cos(frame_angle), s = std::sin(frame_angle);
    const double h1 = hvFunction(disk_space, {c, s}, q);
    const double h2 = hvFunction(disk_space, {-s, c}, q);
    return {h1, h2};
}

double gradientIntegralCheck(const ModelSpace& disk_space, const InteriorFn& u,
                             const DiskPoint& p, double v_angle, double r,
                             int quad_nodes)
{
    if (r <= 0.0)
        throw std::invalid_argument("gradient integral requires r > 0");
    // left side: directional derivative along the unit vector at p whose
    // chart representative is e^{i v_angle} (1 - |p|^2)/2
    const std::complex<double> chart_v =
        std::polar(1.0, v_angle) * (1.0 - std::norm(p.z)) / 2.0;
    auto along = [&](double s) { return u(p.z + s * chart_v); };
    const double lhs = derivative1(along, 0.0, 1e-3);

    // right side: (1 / vol B_r) int_{S_r(p)} u phi_v dmu_r
    const double fr = disk_space.density(r).f;
    const double volume_ball =
        unitSphereVolume(2) *
        integrate([&](double s) { return disk_space.density(s).f; }, 0.0, r,
                  1e-12, 1e-14);
    auto integrand = [&](double alpha) {
        const DiskPoint x = disk::geodesicRay(p, alpha, r);
        return u(x.z) * std::cos(alpha - v_angle);
    };
    const double rhs =
        fr / volume_ball *
        integratePeriodic(integrand, 0.0, 2.0 * M_PI, quad_nodes);
    return std::abs(lhs - rhs);
}

std::vector<double> meanValueAtInfinity(const InteriorFn& phi,
                                        const BoundaryAngle& xi,
                                        const std::vector<double>& arc_lengths)
{
    for (size_t j = 0; j + 1 < arc_lengths.size(); ++j)
        if (!(arc_lengths[j] < arc_lengths[j + 1]))
            throw std::invalid_argument("arc lengths must increase");
    if (!arc_lengths.empty() && arc_lengths.front() <= 0.0)
        throw std::invalid_argument("arc lengths must be positive");

    // conjugate to the upper half plane: w = i (xi + z)/(xi - z) sends the
    // horocycle through 0 centered at xi to the line Im w = 1, where the
    // intrinsic length element is dx
    const std::complex<double> xiu = xi.unit();
    auto pullback = [&](double x) {
        const std::complex<double> w(x, 1.0);
        const std::complex<double> i(0.0, 1.0);
        return xiu * (w - i) / (w + i);
    };
    std::vector<double> averages;
    averages.reserve(arc_lengths.size());
    for (double L : arc_lengths) {
        const double I = integrate(
            [&](double x) { return phi(pullback(x)); }, -L, L, 1e-8, 1e-10);
        averages.push_back(I / (2.0 * L));
    }
    return averages;
}

}  // namespace harmonia
