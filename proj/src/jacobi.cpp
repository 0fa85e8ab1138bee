#include "jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonia {

namespace {

using Eigen::MatrixXd;

// composite Simpson over consecutive grid samples M[i0..i1]; falls back to
// a 3/8 closing rule when the panel count is odd
MatrixXd simpsonOnGrid(const std::vector<MatrixXd>& M, int i0, int i1,
                       double h)
{
    const int panels = i1 - i0;
    const int n = static_cast<int>(M[i0].rows());
    MatrixXd acc = MatrixXd::Zero(n, n);
    if (panels == 0)
        return acc;
    if (panels == 1)  // single panel: trapezoid with midpoint unavailable
        return 0.5 * h * (M[i0] + M[i1]);
    int even_end = i1;
    if (panels % 2 != 0)
        even_end = i1 - 3;  // close with a 3/8 rule on the last three panels
    for (int i = i0; i < even_end; i += 2)
        acc += h / 3.0 * (M[i] + 4.0 * M[i + 1] + M[i + 2]);
    if (panels % 2 != 0)
        acc += 3.0 * h / 8.0 *
               (M[even_end] + 3.0 * M[even_end + 1] + 3.0 * M[even_end + 2] +
                M[even_end + 3]);
    return acc;
}

}  // namespace

int JacobiTrajectory::indexOf(double t) const
{
    const int i = static_cast<int>(std::lround(t / step));
    if (i < 0 || i >= static_cast<int>(times.size()))
        throw std::invalid_argument("time outside trajectory range");
    if (std::abs(times[i] - t) > 0.5 * step + 1e-12)
        throw std::invalid_argument("time not on trajectory grid");
    return i;
}

Eigen::MatrixXd JacobiTrajectory::wronskian(int i) const
{
    return Ap[i].transpose() * B[i] - A[i].transpose() * Bp[i];
}

JacobiTrajectory integrateJacobi(const Eigen::MatrixXd& R, double t_max,
                                 double step)
{
    if (R.rows() != R.cols() || R.rows() < 1)
        throw std::invalid_argument("curvature operator must be square");
    if ((R - R.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("curvature operator must be symmetric");
    if (t_max <= 0.0)
        throw std::invalid_argument("t_max must be positive");
    if (step > 1e-2 * std::min(1.0, t_max))
        throw std::invalid_argument("step too large for requested accuracy");

    const int n = static_cast<int>(R.rows());
    const int steps = static_cast<int>(std::ceil(t_max / step - 1e-9));
    const double h = t_max / steps;

    JacobiTrajectory traj;
    traj.step = h;
    traj.curvature = R;
    traj.times.reserve(steps + 1);
    traj.A.reserve(steps + 1);
    traj.Ap.reserve(steps + 1);
    traj.B.reserve(steps + 1);
    traj.Bp.reserve(steps + 1);

    MatrixXd A = MatrixXd::Zero(n, n), Ap = MatrixXd::Identity(n, n);
    MatrixXd B = MatrixXd::Identity(n, n), Bp = MatrixXd::Zero(n, n);
    traj.times.push_back(0.0);
    traj.A.push_back(A);
    traj.Ap.push_back(Ap);
    traj.B.push_back(B);
    traj.Bp.push_back(Bp);

    auto rk4 = [&](MatrixXd& Y, MatrixXd& Yp) {
        const MatrixXd k1y = Yp, k1p = -R * Y;
        const MatrixXd k2y = Yp + 0.5 * h * k1p, k2p = -R * (Y + 0.5 * h * k1y);
        const MatrixXd k3y = Yp + 0.5 * h * k2p, k3p = -R * (Y + 0.5 * h * k2y);
        const MatrixXd k4y = Yp + h * k3p, k4p = -R * (Y + h * k3y);
        Y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        Yp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    };

    for (int i = 1; i <= steps; ++i) {
        rk4(A, Ap);
        rk4(B, Bp);
        traj.times.push_back(i * h);
        traj.A.push_back(A);
        traj.Ap.push_back(Ap);
        traj.B.push_back(B);
        traj.Bp.push_back(Bp);
    }
    return traj;
}

Eigen::MatrixXd qDifference(const JacobiTrajectory& traj, double s, double t)
{
    if (s <= 0.0)
        throw std::invalid_argument("q difference requires s > 0 (A singular at 0)");
    if (s > t)
        throw std::invalid_argument("q difference requires s <= t");
    const int i0 = traj.indexOf(s), i1 = traj.indexOf(t);
    if (i0 < 1)
        throw std::invalid_argument("s below minimum grid step");

    std::vector<MatrixXd> integrand;
    integrand.reserve(i1 - i0 + 1);
    for (int i = i0; i <= i1; ++i) {
        const MatrixXd G = traj.A[i].transpose() * traj.A[i];
        integrand.push_back(G.partialPivLu().inverse());
    }
    return simpsonOnGrid(integrand, 0, static_cast<int>(integrand.size()) - 1,
                         traj.step);
}

double checkDetIdentity(const JacobiTrajectory& traj,
                        const std::function<double(double)>& f,
                        double s, double t)
{
    const double lhs = qDifference(traj, s, t).determinant();
    const double rhs = f(t - s) / (f(t) * f(s));
    return std::abs(lhs - rhs);
}

Eigen::MatrixXd stableTailIntegral(const JacobiTrajectory& traj, double t,
                                   double T)
{
    const int i0 = traj.indexOf(t), i1 = traj.indexOf(T);
    std::vector<MatrixXd> integrand;
    integrand.reserve(i1 - i0 + 1);
    for (int i = i0; i <= i1; ++i) {
        const MatrixXd G = traj.A[i].transpose() * traj.A[i];
        integrand.push_back(G.partialPivLu().inverse());
    }
    MatrixXd finite = simpsonOnGrid(integrand, 0,
                                    static_cast<int>(integrand.size()) - 1,
                                    traj.step);

    // analytic tail: per eigenvalue the scalar solution is sinh(mu u)/mu,
    // so int_T^infty y^{-2} = mu (coth(mu T) - 1), written exponentially
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(traj.curvature);
    const Eigen::VectorXd lam = es.eigenvalues();
    if (lam.maxCoeff() >= 0.0)
        throw std::domain_error("no decaying stable solution: R has a nonnegative eigenvalue");
    Eigen::VectorXd tail(lam.size());
    for (int i = 0; i < lam.size(); ++i) {
        const double mu = std::sqrt(-lam(i));
        const double e = std::exp(-2.0 * mu * T);
        tail(i) = 2.0 * mu * e / (1.0 - e);
    }
    finite += es.eigenvectors() * tail.asDiagonal() *
              es.eigenvectors().transpose();
    return finite;
}

Eigen::MatrixXd stableTensor(const JacobiTrajectory& traj, double t, double T)
{
    if (t <= 0.0 || t >= T)
        throw std::invalid_argument("stable tensor requires 0 < t < T");
    const int it = traj.indexOf(t);
    return traj.A[it] * stableTailIntegral(traj, t, T);
}

Eigen::MatrixXd stableRiccati(const JacobiTrajectory& traj, double t, double T)
{
    const int it = traj.indexOf(t);
    const MatrixXd J = stableTailIntegral(traj, t, T);
    const MatrixXd G = traj.A[it].transpose() * traj.A[it];
    const MatrixXd Sp = traj.Ap[it] * J - traj.A[it] * G.partialPivLu().inverse();
    const MatrixXd S = traj.A[it] * J;
    return Sp * S.partialPivLu().inverse();
}

double riccatiTrace(const JacobiTrajectory& traj, double t)
{
    if (t <= 0.0)
        throw std::invalid_argument("riccati trace requires t > 0");
    const int i = traj.indexOf(t);
    return (traj.Ap[i] * traj.A[i].partialPivLu().inverse()).trace();
}

}  // namespace harmonia
