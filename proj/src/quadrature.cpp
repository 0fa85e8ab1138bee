#include "quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonia {

namespace {

// 15-point Gauss-Legendre rule on [-1,1], nodes computed once by Newton
// iteration on P_15 (symmetric; only the nonnegative half is stored).
struct Gauss15 {
    double x[15];
    double w[15];
    Gauss15()
    {
        const int n = 15;
        for (int i = 0; i < n; ++i) {
            // Chebyshev-like initial guess
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                // evaluate P_n and P_n' by recurrence
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16)
                    break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const Gauss15& rule()
{
    static const Gauss15 g;
    return g;
}

double gauss15(const Fn1& f, double a, double b)
{
    const Gauss15& g = rule();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 15; ++i)
        s += g.w[i] * f(c + h * g.x[i]);
    return s * h;
}

double adapt(const Fn1& f, double a, double b, double whole,
             double tol, int depth)
{
    const double c = 0.5 * (a + b);
    const double left = gauss15(f, a, c);
    const double right = gauss15(f, c, b);
    const double err = std::abs(left + right - whole);
    if (err <= tol || depth >= 48)
        return left + right;
    return adapt(f, a, c, left, 0.5 * tol, depth + 1) +
           adapt(f, c, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const Fn1& f, double a, double b,
                 double rel_tol, double abs_tol)
{
    if (a == b)
        return 0.0;
    double coarse = gauss15(f, a, b);
    double tol = std::max(abs_tol, rel_tol * std::abs(coarse));
    return adapt(f, a, b, coarse, tol, 0);
}

double integrateFixed(const Fn1& f, double a, double b, int panels)
{
    if (panels < 1)
        throw std::invalid_argument("integrateFixed: panels < 1");
    double s = 0.0, h = (b - a) / panels;
    for (int i = 0; i < panels; ++i)
        s += gauss15(f, a + i * h, a + (i + 1) * h);
    return s;
}

double integratePeriodic(const Fn1& f, double a, double b, int n)
{
    if (n < 2)
        throw std::invalid_argument("integratePeriodic: n < 2");
    const double h = (b - a) / n;
    double s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i)
        s += f(a + i * h);
    return s * h;
}

double derivative1(const Fn1& f, double x, double h)
{
    auto d = [&](double hh) { return (f(x + hh) - f(x - hh)) / (2.0 * hh); };
    const double r1 = (4.0 * d(0.5 * h) - d(h)) / 3.0;
    const double r2 = (4.0 * d(0.25 * h) - d(0.5 * h)) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

double derivative2(const Fn1& f, double x, double h)
{
    auto d = [&](double hh) {
        return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
    };
    const double r1 = (4.0 * d(0.5 * h) - d(h)) / 3.0;
    const double r2 = (4.0 * d(0.25 * h) - d(0.5 * h)) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

double derivative3(const Fn1& f, double x, double h)
{
    auto d = [&](double hh) {
        return (f(x + 2 * hh) - 2.0 * f(x + hh) + 2.0 * f(x - hh) -
                f(x - 2 * hh)) / (2.0 * hh * hh * hh);
    };
    double d1 = d(h), d2 = d(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

double bisect(const Fn1& f, double lo, double hi, double tol)
{
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if (flo * fhi > 0.0)
        throw std::runtime_error("bisect: endpoints do not bracket a root");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace harmonia
