#pragma once

#include <functional>

namespace harmonia {

using Fn1 = std::function<double(double)>;

/// Adaptive Gauss-Legendre integration of f on [a,b].  A panel is accepted
/// when |G15(panel) - G15(left)+G15(right)| <= max(abs_tol, rel_tol*|total|),
/// with the budget split across subdivisions.
double integrate(const Fn1& f, double a, double b,
                 double rel_tol = 1e-13, double abs_tol = 1e-12);

/// Non-adaptive n-panel composite Gauss-Legendre (15 nodes per panel).
double integrateFixed(const Fn1& f, double a, double b, int panels);

/// Trapezoid rule on a uniform grid of n subintervals; spectrally accurate
/// for smooth periodic integrands over a full period.
double integratePeriodic(const Fn1& f, double a, double b, int n);

/// Central first derivative with one Richardson step (5-point accuracy).
double derivative1(const Fn1& f, double x, double h);

/// Central second derivative with one Richardson step.
double derivative2(const Fn1& f, double x, double h);

/// Central third derivative with one Richardson step.
double derivative3(const Fn1& f, double x, double h);

/// Bisection on [lo,hi]; f(lo) and f(hi) must bracket a sign change.
double bisect(const Fn1& f, double lo, double hi, double tol);

}  // namespace harmonia
