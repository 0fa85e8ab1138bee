#include "exppoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "config.hpp"

namespace harmonia {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using std::complex;

double evalPoly(const std::vector<double>& c, double t)
{
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;)
        v = v * t + c[i];
    return v;
}

bool polyVanishes(const std::vector<double>& c)
{
    for (double x : c)
        if (x != 0.0)
            return false;
    return true;
}

// roots of the monic polynomial z^p + c[p-1] z^{p-1} + ... + c[0]
// via the companion matrix
std::vector<complex<double>> companionRoots(const std::vector<double>& c)
{
    const int p = static_cast<int>(c.size());
    if (p == 0)
        return {};
    MatrixXd C = MatrixXd::Zero(p, p);
    for (int i = 1; i < p; ++i)
        C(i, i - 1) = 1.0;
    for (int i = 0; i < p; ++i)
        C(i, p - 1) = -c[i];
    Eigen::EigenSolver<MatrixXd> es(C);
    std::vector<complex<double>> roots(p);
    for (int i = 0; i < p; ++i)
        roots[i] = es.eigenvalues()(i);
    return roots;
}

// coefficients (monic * leading factor dropped) of the derivative
std::vector<complex<double>> deriveCoeffs(const std::vector<complex<double>>& full)
{
    // full holds coefficients a_0..a_d of a degree-d polynomial
    std::vector<complex<double>> out;
    for (size_t i = 1; i < full.size(); ++i)
        out.push_back(full[i] * static_cast<double>(i));
    return out;
}

complex<double> evalFull(const std::vector<complex<double>>& a, complex<double> z)
{
    complex<double> v = 0.0;
    for (size_t i = a.size(); i-- > 0;)
        v = v * z + a[i];
    return v;
}

// Newton-polish an m-fold root: a root of multiplicity m of P is a simple
// root of P^{(m-1)}
complex<double> polishRoot(const std::vector<double>& monic,
                           complex<double> z0, int mult)
{
    const int p = static_cast<int>(monic.size());
    std::vector<complex<double>> a(p + 1);
    for (int i = 0; i < p; ++i)
        a[i] = monic[i];
    a[p] = 1.0;
    for (int k = 0; k < mult - 1; ++k)
        a = deriveCoeffs(a);
    std::vector<complex<double>> da = deriveCoeffs(a);
    complex<double> z = z0;
    for (int it = 0; it < 60; ++it) {
        const complex<double> f = evalFull(a, z);
        const complex<double> df = evalFull(da, z);
        if (std::abs(df) == 0.0)
            break;
        const complex<double> dz = f / df;
        z -= dz;
        if (std::abs(dz) < 1e-15 * (1.0 + std::abs(z)))
            break;
    }
    return z;
}

struct Mode {
    double alpha;
    double beta;   // >= 0; 0 means purely real
    int degree;    // polynomial degree = multiplicity - 1
};

}  // namespace

double ExpPoly::eval(double t) const
{
    double v = 0.0;
    for (const auto& term : terms) {
        const double e = std::exp(term.alpha * t);
        double q = evalPoly(term.poly_cos, t);
        if (term.beta == 0.0) {
            v += q * e;
        } else {
            const double p = evalPoly(term.poly_sin, t);
            v += (q * std::cos(term.beta * t) + p * std::sin(term.beta * t)) * e;
        }
    }
    return v;
}

double ExpPoly::leadingRate() const
{
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& term : terms)
        if (!polyVanishes(term.poly_cos) || !polyVanishes(term.poly_sin))
            best = std::max(best, term.alpha);
    return best;
}

int translationRank(const std::function<double(double)>& f,
                    const std::vector<double>& t_grid,
                    const std::vector<double>& s_grid, double tol)
{
    if (t_grid.size() < 3 || s_grid.size() < 3)
        throw std::invalid_argument("translation rank needs at least 3x3 grids");
    MatrixXd M(s_grid.size(), t_grid.size());
    for (size_t i = 0; i < s_grid.size(); ++i)
        for (size_t j = 0; j < t_grid.size(); ++j)
            M(i, j) = f(t_grid[j] - s_grid[i]);
    Eigen::JacobiSVD<MatrixXd> svd(M);
    const VectorXd sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0)
        return 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0))
            ++rank;
    return rank;
}

FitResult fitExpPoly(const std::vector<double>& ts,
                     const std::vector<double>& xs,
                     const FitOptions& options)
{
    const int N = static_cast<int>(ts.size());
    if (N != static_cast<int>(xs.size()) || N < 4)
        throw std::invalid_argument("fit needs matching sample arrays, N >= 4");
    const double dt = ts[1] - ts[0];
    for (int k = 1; k < N; ++k)
        if (std::abs(ts[k] - ts[0] - k * dt) > 1e-9 * std::max(1.0, std::abs(ts[k])))
            throw std::invalid_argument("fit requires equally spaced samples");

    double xmax = 0.0;
    for (double x : xs)
        xmax = std::max(xmax, std::abs(x));
    if (xmax == 0.0)
        return {ExpPoly{}, 0.0, 0.0};

    // exponential rescale to tame the dynamic range; rates shift back later
    double sigma = 0.0;
    {
        double a1 = 0.0, a2 = 0.0;
        for (int k = 0; k < N / 2; ++k)
            a1 = std::max(a1, std::abs(xs[k]));
        for (int k = N / 2; k < N; ++k)
            a2 = std::max(a2, std::abs(xs[k]));
        if (a1 > 0.0 && a2 > 0.0)
            sigma = std::log(a2 / a1) / (dt * (N - N / 2));
    }
    std::vector<double> u(N);
    for (int k = 0; k < N; ++k)
        u[k] = xs[k] * std::exp(-sigma * (ts[k] - ts[0]));

    // model order from the numerical rank of a Hankel window
    const int p_cap = options.max_terms * (options.max_degree + 1);
    const int q = std::min(N / 2, p_cap + 4);
    const int rows = N - q + 1;
    MatrixXd H(rows, q);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < q; ++j)
            H(i, j) = u[i + j];
    Eigen::JacobiSVD<MatrixXd> hsvd(H);
    const VectorXd hsv = hsvd.singularValues();
    const double rank_tol = Config::global().rank_tol;
    int p = 0;
    for (int i = 0; i < hsv.size(); ++i)
        if (hsv(i) > rank_tol * hsv(0))
            ++p;
    if (p == 0)
        throw std::runtime_error("exp-poly fit: samples have no resolvable modes");
    const bool over_cap = p > p_cap;
    if (over_cap)
        p = p_cap;  // fit at the cap so the error can report what it achieved
    if (N < 4 * p)
        throw std::invalid_argument("fit needs at least 2x the free parameter count");

    // linear prediction u_{k+p} = sum_j a_j u_{k+j}
    const int lp_rows = N - p;
    MatrixXd L(lp_rows, p);
    VectorXd rhs(lp_rows);
    for (int k = 0; k < lp_rows; ++k) {
        for (int j = 0; j < p; ++j)
            L(k, j) = u[k + j];
        rhs(k) = u[k + p];
    }
    VectorXd a = L.colPivHouseholderQr().solve(rhs);
    std::vector<double> monic(p);
    for (int j = 0; j < p; ++j)
        monic[j] = -a(j);  // z^p - sum a_j z^j

    // roots, clustered into multiplicities and polished
    std::vector<complex<double>> roots = companionRoots(monic);
    std::vector<int> assigned(roots.size(), 0);
    struct Cluster {
        complex<double> z;
        int mult;
    };
    std::vector<Cluster> clusters;
    const double cluster_tol = 1e-3;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (assigned[i])
            continue;
        complex<double> c = roots[i];
        int m = 1;
        assigned[i] = 1;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (!assigned[j] && std::abs(roots[j] - c) <
                                    cluster_tol * (1.0 + std::abs(c))) {
                c = (c * static_cast<double>(m) + roots[j]) /
                    static_cast<double>(m + 1);
                ++m;
                assigned[j] = 1;
            }
        }
        clusters.push_back({polishRoot(monic, c, m), m});
    }

    // turn clusters into real modes (alpha, beta, degree)
    std::vector<Mode> modes;
    std::vector<int> used(clusters.size(), 0);
    const double imag_tol = 1e-7;
    for (size_t i = 0; i < clusters.size(); ++i) {
        if (used[i])
            continue;
        used[i] = 1;
        const complex<double> z = clusters[i].z;
        if (std::abs(z) < 1e-14)
            throw std::runtime_error("exp-poly fit: vanishing prediction root");
        const double alpha = std::log(std::abs(z)) / dt + sigma;
        const double beta = std::abs(std::arg(z)) / dt;
        if (std::abs(z.imag()) <= imag_tol * std::abs(z)) {
            modes.push_back({alpha, 0.0, clusters[i].mult - 1});
            continue;
        }
        // find the conjugate cluster
        bool paired = false;
        for (size_t j = i + 1; j < clusters.size(); ++j) {
            if (used[j])
                continue;
            if (std::abs(clusters[j].z - std::conj(z)) <
                    1e-6 * (1.0 + std::abs(z)) &&
                clusters[j].mult == clusters[i].mult) {
                used[j] = 1;
                paired = true;
                break;
            }
        }
        if (!paired)
            throw std::runtime_error("exp-poly fit: unpaired complex root");
        modes.push_back({alpha, beta, clusters[i].mult - 1});
    }
    for (const auto& m : modes)
        if (m.degree > options.max_degree)
            throw std::runtime_error("exp-poly fit: polynomial degree exceeds cap");

    // least squares for the polynomial coefficients on the raw samples
    struct Basis {
        int mode;
        int degree;
        bool sine;
    };
    std::vector<Basis> basis;
    for (size_t m = 0; m < modes.size(); ++m)
        for (int d = 0; d <= modes[m].degree; ++d) {
            basis.push_back({static_cast<int>(m), d, false});
            if (modes[m].beta != 0.0)
                basis.push_back({static_cast<int>(m), d, true});
        }
    MatrixXd Phi(N, basis.size());
    VectorXd y(N);
    for (int k = 0; k < N; ++k) {
        y(k) = xs[k];
        for (size_t b = 0; b < basis.size(); ++b) {
            const Mode& m = modes[basis[b].mode];
            double v = std::pow(ts[k], basis[b].degree) * std::exp(m.alpha * ts[k]);
            v *= basis[b].sine ? std::sin(m.beta * ts[k])
                               : std::cos(m.beta * ts[k]);
            Phi(k, b) = v;
        }
    }
    VectorXd coef = Phi.colPivHouseholderQr().solve(y);

    ExpPoly poly;
    for (size_t m = 0; m < modes.size(); ++m) {
        ExpPolyTerm term;
        term.alpha = modes[m].alpha;
        term.beta = modes[m].beta;
        term.poly_cos.assign(modes[m].degree + 1, 0.0);
        if (modes[m].beta != 0.0)
            term.poly_sin.assign(modes[m].degree + 1, 0.0);
        for (size_t b = 0; b < basis.size(); ++b) {
            if (basis[b].mode != static_cast<int>(m))
                continue;
            if (basis[b].sine)
                term.poly_sin[basis[b].degree] = coef(b);
            else
                term.poly_cos[basis[b].degree] = coef(b);
        }
        poly.terms.push_back(std::move(term));
    }

    FitResult out;
    out.poly = std::move(poly);
    for (int k = 0; k < N; ++k)
        out.max_residual =
            std::max(out.max_residual, std::abs(out.poly.eval(ts[k]) - xs[k]));
    out.rel_residual = out.max_residual / xmax;
    if (over_cap)
        throw std::runtime_error(
            "exp-poly fit: model order exceeds configured caps; capped fit "
            "achieved relative residual " +
            std::to_string(out.rel_residual));
    return out;
}

}  // namespace harmonia
