#pragma once

#include <functional>
#include <vector>

namespace harmonia {

/// One term (q(t) cos(beta t) + p(t) sin(beta t)) e^{alpha t}; beta = 0
/// forces an empty sine part.  Coefficients are stored lowest degree first.
struct ExpPolyTerm {
    std::vector<double> poly_cos;
    std::vector<double> poly_sin;
    double alpha = 0.0;
    double beta = 0.0;
};

/// Finite sum of exponential-polynomial terms with distinct (alpha, beta).
struct ExpPoly {
    std::vector<ExpPolyTerm> terms;
    double eval(double t) const;
    /// Largest alpha among terms with a nonvanishing coefficient.
    double leadingRate() const;
};

/// Numerical dimension of span{ t -> f(t - s) : s in s_grid } sampled on
/// t_grid: the rank of M[i][j] = f(t_j - s_i) at relative tolerance tol.
int translationRank(const std::function<double(double)>& f,
                    const std::vector<double>& t_grid,
                    const std::vector<double>& s_grid, double tol);

struct FitOptions {
    int max_terms = 8;
    int max_degree = 4;
};

struct FitResult {
    ExpPoly poly;
    double max_residual = 0.0;  // max |fit - sample|
    double rel_residual = 0.0;  // residual / max |sample|
};

/// Prony-type fit of uniformly spaced samples (t_k, x_k): linear prediction
/// on the exponentially rescaled sequence, companion-matrix roots with
/// multiplicity-aware polishing, then a linear solve for the coefficients.
FitResult fitExpPoly(const std::vector<double>& ts,
                     const std::vector<double>& xs,
                     const FitOptions& options = {});

}  // namespace harmonia
