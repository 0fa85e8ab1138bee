#pragma once

#include <optional>
#include <string>
#include <vector>

#include "model_space.hpp"
#include "poisson.hpp"

namespace harmonia {

/// One verification check: measured value against its reference, with the
/// residual compared to the pinned tolerance.
struct Check {
    std::string id;
    std::string description;
    double value = 0.0;
    double reference = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Per-grid-point diagnostic row for the CSV export.
struct TableRow {
    double r = 0.0;
    std::string quantity;
    double value = 0.0;
    double reference = 0.0;
    double residual = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::string space;
    std::string timestamp;
    std::vector<Check> checks;
    std::vector<TableRow> rows;

    bool allPass() const;
    std::string toJson() const;  // schema "v1"
    std::string toCsv() const;   // columns r,quantity,value,reference,residual
};

struct SuiteOptions {
    std::vector<double> grid;             // empty -> suite default
    std::vector<CurvatureEigen> eigen;    // jacobi curvature operator
    double tmax = 5.0;
    double martin_a = 1.0;
    int nodes = 512;
    bool parallel = false;                // run the sub-suites of "all" concurrently
};

/// Execute one of {radial, jacobi, green, disk, poisson, all}; requires a
/// space for radial/green (and for jacobi when no eigenvalues are given).
VerificationReport runSuite(const std::string& suite,
                            const std::optional<ModelSpace>& space,
                            const SuiteOptions& opts);

/// Deterministic columnar table for one quantity over a radius grid.
/// quantity in {density, mu, green, eigenvalue, scal_sphere, martin_ratio};
/// format in {csv, json}.
std::string emitTable(const ModelSpace& space, const std::string& quantity,
                      double lo, double hi, double step,
                      const std::string& format, double martin_a = 1.0);

/// Boundary data parser for expressions like "cos(2*theta)",
/// "0.5*sin(theta) + 1", used by the CLI.
BoundaryFn parseBoundaryExpr(const std::string& expr);

/// Shortest-round-trip decimal rendering with 17 significant digits.
std::string formatDouble(double v);

/// "a:b:step" -> inclusive grid.
std::vector<double> parseGrid(const std::string& spec);

}  // namespace harmonia
