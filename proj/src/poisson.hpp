#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "disk.hpp"
#include "model_space.hpp"

namespace harmonia {

using BoundaryFn = std::function<double(double)>;           // of the angle
using InteriorFn = std::function<double(std::complex<double>)>;

/// Discretized visibility measure at a basepoint: uniform boundary nodes
/// reweighted by e^{-b_xi(p)} and normalized to total mass one.
struct VisibilityMeasure {
    DiskPoint basepoint;
    std::vector<BoundaryAngle> nodes;
    std::vector<double> weights;
};

VisibilityMeasure visibilityMeasure(const DiskPoint& p, int node_count);

/// Poisson integral H_phi(z) = sum_j phi(theta_j) w_j(z); solves the
/// Dirichlet problem at infinity on the disk.
double dirichletSolve(const BoundaryFn& phi, const DiskPoint& z,
                      int node_count);

/// Same solver with the node count scaled to the boundary proximity of the
/// evaluation point; caches node tables per count.  Not thread safe.
class AdaptiveDirichlet {
public:
    AdaptiveDirichlet(BoundaryFn phi, int base_nodes);
    double operator()(std::complex<double> z) const;

private:
    struct Table {
        std::vector<double> re, im, phi;
    };
    const Table& table(int n) const;

    BoundaryFn phi_;
    int base_;
    mutable std::map<int, Table> cache_;
};

/// h_v(q) = mu(d(0,q)) <v, w_0(q)> for a tangent vector v at the origin
/// given in the standard orthonormal frame; h_v(0) = 0.
double hvFunction(const ModelSpace& disk_space, std::array<double, 2> v,
                  const DiskPoint& q);

/// Ball model map F(q) = (h_{e1}(q), h_{e2}(q)) for the frame rotated by
/// frame_angle; lands in the ball of radius 1/h.
std::array<double, 2> ballModelMap(const ModelSpace& disk_space,
                                   double frame_angle, const DiskPoint& q);

/// |<grad u(p), v> - (1/vol B_r(p)) int_{S_r(p)} u phi_v dmu_r| for a
/// harmonic u; v is the unit direction at p with the given chart angle.
double gradientIntegralCheck(const ModelSpace& disk_space, const InteriorFn& u,
                             const DiskPoint& p, double v_angle, double r,
                             int quad_nodes = 512);

/// Intrinsic averages of phi over horocycle arcs of half-length L_j centered
/// on the ray toward xi, on the horocycle through the origin.
std::vector<double> meanValueAtInfinity(const InteriorFn& phi,
                                        const BoundaryAngle& xi,
                                        const std::vector<double>& arc_lengths);

}  // namespace harmonia
