#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace harmonia {

/// Samples of the canonical Jacobi tensor pair along a geodesic with
/// constant curvature operator R: A'' + R A = 0 with A(0)=0, A'(0)=I and
/// B(0)=I, B'(0)=0, on a uniform time grid starting at 0.
struct JacobiTrajectory {
    double step = 0.0;
    std::vector<double> times;
    std::vector<Eigen::MatrixXd> A, Ap, B, Bp;
    Eigen::MatrixXd curvature;

    int indexOf(double t) const;
    double tMax() const { return times.empty() ? 0.0 : times.back(); }

    /// Wronskian A'^T B - A^T B' at sample i; identically I along the flow.
    Eigen::MatrixXd wronskian(int i) const;
};

/// Integrate the two initial-value problems with a classical 4th-order
/// one-step method.  R must be symmetric; step at most 1e-2 * min(1, t_max).
JacobiTrajectory integrateJacobi(const Eigen::MatrixXd& R, double t_max,
                                 double step);

/// Q(s) - Q(t) = int_s^t (A^T A)^{-1}(u) du for 0 < s <= t, where
/// Q = A^{-1} B.  Composite quadrature over the trajectory grid.
Eigen::MatrixXd qDifference(const JacobiTrajectory& traj, double s, double t);

/// | det(Q(s)-Q(t)) - f(t-s) / (f(t) f(s)) | for a density evaluator f.
double checkDetIdentity(const JacobiTrajectory& traj,
                        const std::function<double(double)>& f,
                        double s, double t);

/// Stable tensor S(t) = A(t) int_t^infty (A^T A)^{-1}(u) du, the finite part
/// integrated to the horizon T and the tail summed per eigenvalue of R.
/// Requires all eigenvalues of R negative.
Eigen::MatrixXd stableTensor(const JacobiTrajectory& traj, double t, double T);

/// U(t) = S'(t) S(t)^{-1}, the stable Riccati solution.
Eigen::MatrixXd stableRiccati(const JacobiTrajectory& traj, double t, double T);

/// tr(A'(t) A(t)^{-1}); equals f'(t)/f(t) of the matching density.
double riccatiTrace(const JacobiTrajectory& traj, double t);

/// int_t^T (A^T A)^{-1} plus the analytic tail; equals S'(0) - S'_{,t}(0).
Eigen::MatrixXd stableTailIntegral(const JacobiTrajectory& traj, double t,
                                   double T);

}  // namespace harmonia
