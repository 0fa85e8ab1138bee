// harmonia command line front end; all numerics go through the C API of
// the shared library.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmonia/harmonia.h"

namespace {

struct SpaceArgs {
    std::string kind;
    int dim = 0;
    std::string eigen;
};

void addSpaceOptions(CLI::App* cmd, SpaceArgs& args, bool required)
{
    auto* k = cmd->add_option("--space", args.kind,
                              "catalog kind: euclidean, real_hyperbolic, "
                              "complex_hyperbolic, rank1_model");
    auto* d = cmd->add_option("--dim", args.dim, "manifold dimension n");
    cmd->add_option("--eigen", args.eigen,
                    "Jacobi eigenvalues as lambda:mult,... (rank1_model)");
    if (required) {
        k->required();
        d->required();
    }
}

void parseEigenSpec(const std::string& spec, std::vector<double>& vals,
                    std::vector<int>& mults)
{
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--eigen", "expected lambda:mult");
        vals.push_back(std::stod(item.substr(0, colon)));
        mults.push_back(std::stoi(item.substr(colon + 1)));
    }
}

struct SpaceHandle {
    harmonia_space* ptr = nullptr;
    ~SpaceHandle() { harmonia_space_destroy(ptr); }
};

struct GreenHandle {
    harmonia_green* ptr = nullptr;
    ~GreenHandle() { harmonia_green_destroy(ptr); }
};

[[noreturn]] void die(const std::string& context)
{
    std::cerr << "error: " << context << ": " << harmonia_last_error() << "\n";
    std::exit(2);
}

void makeSpace(const SpaceArgs& args, SpaceHandle& handle)
{
    std::vector<double> vals;
    std::vector<int> mults;
    if (!args.eigen.empty())
        parseEigenSpec(args.eigen, vals, mults);
    if (harmonia_space_create(args.kind.c_str(), args.dim, vals.data(),
                              mults.data(), static_cast<int>(vals.size()),
                              &handle.ptr) != HARMONIA_OK)
        die("creating space");
}

std::string takeString(char* s)
{
    std::string out = s ? s : "";
    harmonia_string_free(s);
    return out;
}

void writeOutput(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(2);
    }
    f << text;
}

std::complex<double> parseComplex(const std::string& s)
{
    // accepts forms like "0.3+0.4i", "-0.2i", "0.5"
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty())
        throw CLI::ValidationError("--z", "empty complex literal");
    double re = 0.0, im = 0.0;
    if (t.back() == 'i' || t.back() == 'j') {
        t.pop_back();
        // split at the last +/- that is not an exponent sign
        size_t split = std::string::npos;
        for (size_t i = t.size(); i-- > 1;) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            im = t.empty() || t == "+" ? 1.0 : (t == "-" ? -1.0 : std::stod(t));
        } else {
            re = std::stod(t.substr(0, split));
            std::string imtxt = t.substr(split);
            im = imtxt == "+" ? 1.0 : (imtxt == "-" ? -1.0 : std::stod(imtxt));
        }
    } else {
        re = std::stod(t);
    }
    return {re, im};
}

int printReport(const std::string& json_text, bool all_pass)
{
    const auto j = nlohmann::json::parse(json_text);
    std::printf("suite: %s   space: %s\n", j["suite"].get<std::string>().c_str(),
                j["space"].get<std::string>().c_str());
    for (const auto& c : j["checks"]) {
        std::printf("  [%s] %-34s residual %-12.4g tol %-8.2g %s\n",
                    c["pass"].get<bool>() ? "PASS" : "FAIL",
                    c["id"].get<std::string>().c_str(),
                    c["residual"].get<double>(),
                    c["tolerance"].get<double>(),
                    c["description"].get<std::string>().c_str());
    }
    std::printf("%s\n", all_pass ? "all checks passed" : "CHECKS FAILED");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"harmonia: density calculus and boundary integrals on "
                 "harmonic model spaces"};
    app.require_subcommand(1);

    std::vector<std::string> config_overrides;
    app.add_option("--set", config_overrides,
                   "override a config key, key=value (repeatable)");

    // ------------------------------------------------------------ verify --
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "radial|jacobi|green|disk|poisson|all")
        ->required();
    SpaceArgs vspace;
    addSpaceOptions(verify, vspace, false);
    std::string vgrid, vcsv, vjson;
    double vtmax = 5.0;
    verify->add_option("--grid", vgrid, "radial grid a:b:step");
    verify->add_option("--tmax", vtmax, "jacobi integration horizon");
    verify->add_option("--csv", vcsv, "write the residual table CSV here");
    bool vparallel = false;
    verify->add_flag("--parallel", vparallel,
                     "run the sub-suites of 'all' concurrently");
    verify->add_option("--json", vjson, "write the JSON report here");

    // -------------------------------------------------------------- emit --
    auto* emit = app.add_subcommand("emit", "emit a quantity table");
    SpaceArgs espace;
    addSpaceOptions(emit, espace, true);
    std::string quantity, egrid, eformat = "csv", eout;
    double emartin_a = 1.0;
    emit->add_option("quantity", quantity,
                     "density|mu|green|eigenvalue|scal_sphere|martin_ratio")
        ->required();
    emit->add_option("--grid", egrid, "grid a:b:step")->required();
    emit->add_option("--format", eformat, "csv|json");
    emit->add_option("--a", emartin_a, "offset a for martin_ratio");
    emit->add_option("--out", eout, "output file (default stdout)");

    // ------------------------------------------------------------- green --
    auto* green = app.add_subcommand("green", "Green kernel value and checks");
    SpaceArgs gspace;
    addSpaceOptions(green, gspace, true);
    double gr = 1.0;
    green->add_option("--r", gr, "radius")->required();

    // ------------------------------------------------------------ martin --
    auto* martin = app.add_subcommand("martin", "Martin quotient vs e^{-ha}");
    SpaceArgs mspace;
    addSpaceOptions(martin, mspace, true);
    double ma = 1.0, ms = 40.0;
    martin->add_option("--a", ma, "offset a")->required();
    martin->add_option("--s", ms, "base distance s")->required();

    // -------------------------------------------------------------- disk --
    auto* diskcmd = app.add_subcommand("disk", "Poincare disk operations");
    std::string dop, dz, dw, dp = "0", dscan, dout;
    double dxi = 0.0, dalpha = M_PI / 2;
    diskcmd->add_option("--op", dop, "distance|busemann|gromov|divergence")
        ->required();
    diskcmd->add_option("--z", dz, "first point, e.g. 0.3+0.4i");
    diskcmd->add_option("--w", dw, "second point (distance/gromov)");
    diskcmd->add_option("--p", dp, "basepoint (gromov)");
    diskcmd->add_option("--xi", dxi, "boundary angle (busemann)");
    diskcmd->add_option("--alpha", dalpha, "angle between rays (divergence)");
    diskcmd->add_option("--scan", dscan, "time grid t0:t1:dt (divergence)");
    diskcmd->add_option("--out", dout, "CSV output file (divergence)");

    // --------------------------------------------------------- dirichlet --
    auto* dirichlet = app.add_subcommand("dirichlet",
                                         "solve the Dirichlet problem at infinity");
    std::string phi_expr = "cos(theta)", zarg;
    int nodes = 512;
    dirichlet->add_option("--phi", phi_expr, "boundary data, e.g. cos(2*theta)");
    dirichlet->add_option("--z", zarg, "evaluation point")->required();
    dirichlet->add_option("--nodes", nodes, "boundary node count");

    // --------------------------------------------------------- meanvalue --
    auto* meanvalue = app.add_subcommand("meanvalue",
                                         "horocycle averages toward a boundary point");
    std::string mv_phi = "cos(theta)", mv_arcs = "1,5,25";
    double mv_xi = 0.0;
    meanvalue->add_option("--phi", mv_phi, "boundary data");
    meanvalue->add_option("--xi", mv_xi, "boundary angle");
    meanvalue->add_option("--arcs", mv_arcs, "half-lengths l1,l2,...");

    // ------------------------------------------------------- fit-density --
    auto* fit = app.add_subcommand("fit-density",
                                   "recover the density as an exponential polynomial");
    SpaceArgs fspace;
    addSpaceOptions(fit, fspace, true);
    std::string frange = "0:10:0.1";
    fit->add_option("--range", frange, "sampling range a:b:step");

    CLI11_PARSE(app, argc, argv);

    for (const std::string& kv : config_overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos ||
            harmonia_config_set(kv.substr(0, eq).c_str(),
                                kv.substr(eq + 1).c_str()) != HARMONIA_OK)
            die("applying --set");
    }

    if (*verify) {
        SpaceHandle space;
        if (!vspace.kind.empty())
            makeSpace(vspace, space);
        std::vector<double> vals;
        std::vector<int> mults;
        if (!vspace.eigen.empty() && vspace.kind.empty())
            parseEigenSpec(vspace.eigen, vals, mults);
        const char* grid_arg = vgrid.empty() ? nullptr : vgrid.c_str();
        char* json_text = nullptr;
        int all_pass = 0;
        if (harmonia_run_suite(suite.c_str(), space.ptr, vals.data(),
                               mults.data(), static_cast<int>(vals.size()),
                               vtmax, grid_arg, vparallel ? 1 : 0,
                               &json_text, &all_pass) != HARMONIA_OK)
            die("running suite");
        const std::string report = takeString(json_text);
        if (!vjson.empty())
            writeOutput(report, vjson);
        if (!vcsv.empty()) {
            char* csv_text = nullptr;
            int unused = 0;
            if (harmonia_run_suite_csv(suite.c_str(), space.ptr, vals.data(),
                                       mults.data(),
                                       static_cast<int>(vals.size()), vtmax,
                                       grid_arg, vparallel ? 1 : 0,
                                       &csv_text, &unused) != HARMONIA_OK)
                die("writing CSV");
            writeOutput(takeString(csv_text), vcsv);
        }
        return printReport(report, all_pass != 0);
    }

    if (*emit) {
        SpaceHandle space;
        makeSpace(espace, space);
        const auto c1 = egrid.find(':');
        const auto c2 = egrid.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            std::cerr << "error: --grid must be a:b:step\n";
            return 2;
        }
        char* text = nullptr;
        if (harmonia_emit_table(space.ptr, quantity.c_str(),
                                std::stod(egrid.substr(0, c1)),
                                std::stod(egrid.substr(c1 + 1, c2 - c1 - 1)),
                                std::stod(egrid.substr(c2 + 1)),
                                eformat.c_str(), emartin_a, &text) != HARMONIA_OK)
            die("emitting table");
        writeOutput(takeString(text), eout);
        return 0;
    }

    if (*green) {
        SpaceHandle space;
        makeSpace(gspace, space);
        GreenHandle kernel;
        if (harmonia_green_create(space.ptr, &kernel.ptr) != HARMONIA_OK)
            die("building Green kernel");
        double value = 0.0, residual = 0.0;
        if (harmonia_green_radial(kernel.ptr, gr, &value) != HARMONIA_OK)
            die("evaluating Green kernel");
        if (harmonia_green_fundamental_residual(kernel.ptr, &residual) !=
            HARMONIA_OK)
            die("fundamental-solution check");
        std::printf("G(r=%g) = %.17g\nfundamental_residual = %.4g\n", gr,
                    value, residual);
        return residual <= 1e-6 ? 0 : 1;
    }

    if (*martin) {
        SpaceHandle space;
        makeSpace(mspace, space);
        GreenHandle kernel;
        if (harmonia_green_create(space.ptr, &kernel.ptr) != HARMONIA_OK)
            die("building Green kernel");
        double ratio = 0.0;
        if (harmonia_green_martin_ratio(kernel.ptr, ma, ms, &ratio) !=
            HARMONIA_OK)
            die("martin ratio");
        double h = 0.0;
        harmonia_space_mean_curvature(space.ptr, &h);
        const double ref = std::exp(-h * ma);
        std::printf("ratio = %.17g\ne^{-ha} = %.17g\ndiff = %.4g\n", ratio, ref,
                    ratio - ref);
        return 0;
    }

    if (*diskcmd) {
        if (dop == "divergence") {
            if (dscan.empty()) {
                std::cerr << "error: divergence needs --scan t0:t1:dt\n";
                return 2;
            }
            const auto c1 = dscan.find(':');
            const auto c2 = dscan.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos) {
                std::cerr << "error: --scan must be t0:t1:dt\n";
                return 2;
            }
            const double t0 = std::stod(dscan.substr(0, c1));
            const double t1 = std::stod(dscan.substr(c1 + 1, c2 - c1 - 1));
            const double dt = std::stod(dscan.substr(c2 + 1));
            std::string csv = "t,actual,bound\n";
            char line[128];
            for (double t = t0; t <= t1 + 1e-12; t += dt) {
                double actual = 0.0, bound = 0.0;
                if (harmonia_disk_divergence(dalpha, t, &actual, &bound) !=
                    HARMONIA_OK)
                    die("divergence scan");
                std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", t,
                              actual, bound);
                csv += line;
            }
            writeOutput(csv, dout);
            return 0;
        }
        if (dz.empty()) {
            std::cerr << "error: --z is required for " << dop << "\n";
            return 2;
        }
        const std::complex<double> z = parseComplex(dz);
        double out = 0.0;
        if (dop == "distance") {
            const std::complex<double> w = parseComplex(dw);
            if (harmonia_disk_distance(z.real(), z.imag(), w.real(), w.imag(),
                                       &out) != HARMONIA_OK)
                die("distance");
        } else if (dop == "busemann") {
            if (harmonia_disk_busemann(dxi, z.real(), z.imag(), &out) !=
                HARMONIA_OK)
                die("busemann");
        } else if (dop == "gromov") {
            const std::complex<double> w = parseComplex(dw);
            const std::complex<double> p = parseComplex(dp);
            if (harmonia_disk_gromov(z.real(), z.imag(), w.real(), w.imag(),
                                     p.real(), p.imag(), &out) != HARMONIA_OK)
                die("gromov");
        } else {
            std::cerr << "error: unknown disk op " << dop << "\n";
            return 2;
        }
        std::printf("%.17g\n", out);
        return 0;
    }

    if (*dirichlet) {
        const std::complex<double> z = parseComplex(zarg);
        double value = 0.0;
        if (harmonia_dirichlet_solve(phi_expr.c_str(), z.real(), z.imag(),
                                     nodes, &value) != HARMONIA_OK)
            die("dirichlet solve");
        // harmonicity residual from a five-point stencil
        const double h = 1e-3;
        double e = 0, w = 0, n = 0, s = 0;
        if (harmonia_dirichlet_solve(phi_expr.c_str(), z.real() + h, z.imag(),
                                     nodes, &e) != HARMONIA_OK ||
            harmonia_dirichlet_solve(phi_expr.c_str(), z.real() - h, z.imag(),
                                     nodes, &w) != HARMONIA_OK ||
            harmonia_dirichlet_solve(phi_expr.c_str(), z.real(), z.imag() + h,
                                     nodes, &n) != HARMONIA_OK ||
            harmonia_dirichlet_solve(phi_expr.c_str(), z.real(), z.imag() - h,
                                     nodes, &s) != HARMONIA_OK)
            die("dirichlet stencil");
        const double lap = (e + w + n + s - 4.0 * value) / (h * h) *
                           std::pow(1.0 - std::norm(z), 2) / 4.0;
        std::printf("H_phi(%s) = %.17g\nlaplacian_residual = %.4g\n",
                    zarg.c_str(), value, lap);
        return 0;
    }

    if (*meanvalue) {
        std::vector<double> arcs;
        std::stringstream ss(mv_arcs);
        std::string item;
        while (std::getline(ss, item, ','))
            arcs.push_back(std::stod(item));
        std::vector<double> averages(arcs.size());
        if (harmonia_mean_value_at_infinity(mv_phi.c_str(), mv_xi, arcs.data(),
                                            static_cast<int>(arcs.size()),
                                            averages.data()) != HARMONIA_OK)
            die("mean value at infinity");
        std::printf("arc_half_length,average\n");
        for (size_t i = 0; i < arcs.size(); ++i)
            std::printf("%.17g,%.17g\n", arcs[i], averages[i]);
        return 0;
    }

    if (*fit) {
        SpaceHandle space;
        makeSpace(fspace, space);
        const auto c1 = frange.find(':');
        const auto c2 = frange.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            std::cerr << "error: --range must be a:b:step\n";
            return 2;
        }
        char* text = nullptr;
        if (harmonia_fit_density(space.ptr, std::stod(frange.substr(0, c1)),
                                 std::stod(frange.substr(c1 + 1, c2 - c1 - 1)),
                                 std::stod(frange.substr(c2 + 1)),
                                 &text) != HARMONIA_OK)
            die("fitting density");
        std::cout << takeString(text) << "\n";
        return 0;
    }

    return 0;
}
