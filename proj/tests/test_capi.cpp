// C API surface tests: everything goes through the public header, as an
// external consumer of the shared library would.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "harmonia/harmonia.h"

static int g_failures = 0;

#define CHECK_TRUE(cond)                                                    \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);     \
            ++g_failures;                                                   \
        }                                                                   \
    } while (0)

#define CHECK_NEAR(a, b, tol)                                               \
    do {                                                                    \
        const double va = (a), vb = (b);                                    \
        if (!(std::fabs(va - vb) <= (tol))) {                               \
            std::printf("FAIL %s:%d: |%.17g - %.17g| > %g\n", __FILE__,     \
                        __LINE__, va, vb, (double)(tol));                   \
            ++g_failures;                                                   \
        }                                                                   \
    } while (0)

int main()
{
    CHECK_TRUE(std::strlen(harmonia_version()) > 0);

    harmonia_space* e3 = nullptr;
    CHECK_TRUE(harmonia_space_create("euclidean", 3, nullptr, nullptr, 0,
                                     &e3) == HARMONIA_OK);
    double f = 0, f1 = 0, f2 = 0;
    CHECK_TRUE(harmonia_space_density(e3, 2.0, &f, &f1, &f2) == HARMONIA_OK);
    CHECK_NEAR(f, 4.0, 1e-12);
    CHECK_NEAR(f1, 4.0, 1e-12);
    CHECK_NEAR(f2, 2.0, 1e-12);

    double vol = 0;
    CHECK_TRUE(harmonia_space_sphere_volume(e3, 2.0, &vol) == HARMONIA_OK);
    CHECK_NEAR(vol, 16.0 * M_PI, 1e-10);
    CHECK_TRUE(harmonia_space_sphere_volume(e3, -1.0, &vol) ==
               HARMONIA_ERR_INVALID_ARGUMENT);
    CHECK_TRUE(std::strlen(harmonia_last_error()) > 0);

    harmonia_growth_class cls;
    CHECK_TRUE(harmonia_space_classify_growth(e3, &cls) == HARMONIA_OK);
    CHECK_TRUE(cls == HARMONIA_GROWTH_POLYNOMIAL);

    double mu_val = 0;
    CHECK_TRUE(harmonia_mu(e3, 3.0, &mu_val) == HARMONIA_OK);
    CHECK_NEAR(mu_val, 1.0, 1e-10);

    // rank1 model through the eigenvalue interface
    const double lambdas[] = {-4.0, -1.0};
    const int mults[] = {1, 2};
    harmonia_space* r1 = nullptr;
    CHECK_TRUE(harmonia_space_create("rank1_model", 4, lambdas, mults, 2,
                                     &r1) == HARMONIA_OK);
    CHECK_TRUE(harmonia_space_density(r1, 1.5, &f, &f1, &f2) == HARMONIA_OK);
    CHECK_NEAR(f, std::pow(std::sinh(1.5), 3) * std::cosh(1.5), 1e-7);
    double h = 0;
    CHECK_TRUE(harmonia_space_mean_curvature(r1, &h) == HARMONIA_OK);
    CHECK_NEAR(h, 4.0, 1e-12);

    // unknown kind is a structured error
    harmonia_space* bad = nullptr;
    CHECK_TRUE(harmonia_space_create("nosuch", 3, nullptr, nullptr, 0, &bad) ==
               HARMONIA_ERR_INVALID_ARGUMENT);

    // Green kernel on hyperbolic 3-space
    harmonia_space* h3 = nullptr;
    CHECK_TRUE(harmonia_space_create("real_hyperbolic", 3, nullptr, nullptr, 0,
                                     &h3) == HARMONIA_OK);
    harmonia_green* kernel = nullptr;
    CHECK_TRUE(harmonia_green_create(h3, &kernel) == HARMONIA_OK);
    double g = 0;
    CHECK_TRUE(harmonia_green_radial(kernel, 1.0, &g) == HARMONIA_OK);
    CHECK_NEAR(g, (1.0 / std::tanh(1.0) - 1.0) / (4.0 * M_PI), 1e-12);
    double residual = 0;
    CHECK_TRUE(harmonia_green_fundamental_residual(kernel, &residual) ==
               HARMONIA_OK);
    CHECK_TRUE(residual <= 1e-6);

    // flat plane: documented unsupported error
    harmonia_space* e2 = nullptr;
    CHECK_TRUE(harmonia_space_create("euclidean", 2, nullptr, nullptr, 0,
                                     &e2) == HARMONIA_OK);
    harmonia_green* none = nullptr;
    CHECK_TRUE(harmonia_green_create(e2, &none) == HARMONIA_ERR_UNSUPPORTED);
    CHECK_TRUE(std::strstr(harmonia_last_error(), "Green") != nullptr);

    // disk operations
    double d = 0;
    CHECK_TRUE(harmonia_disk_distance(0.5, 0.0, -0.5, 0.0, &d) == HARMONIA_OK);
    CHECK_NEAR(d, 2.0 * std::atanh(0.8), 1e-12);
    double b = 0;
    CHECK_TRUE(harmonia_disk_busemann(0.0, 0.0, 0.3, &b) == HARMONIA_OK);
    CHECK_NEAR(b, std::log(1.09 / 0.91), 1e-12);
    CHECK_TRUE(harmonia_disk_busemann(0.0, 2.0, 0.0, &b) ==
               HARMONIA_ERR_INVALID_ARGUMENT);

    // Dirichlet solve through the expression parser
    double H = 0;
    CHECK_TRUE(harmonia_dirichlet_solve("cos(theta)", 0.5, 0.0, 512, &H) ==
               HARMONIA_OK);
    CHECK_NEAR(H, 0.5, 1e-8);
    CHECK_TRUE(harmonia_dirichlet_solve("1", 0.3, 0.2, 512, &H) == HARMONIA_OK);
    CHECK_NEAR(H, 1.0, 1e-14);

    double arcs[] = {1.0, 5.0};
    double avgs[2] = {0, 0};
    CHECK_TRUE(harmonia_mean_value_at_infinity("cos(theta)", 0.0, arcs, 2,
                                               avgs) == HARMONIA_OK);
    CHECK_TRUE(std::fabs(avgs[1] - 1.0) < std::fabs(avgs[0] - 1.0));

    // fit-density JSON
    char* json_text = nullptr;
    harmonia_space* h2 = nullptr;
    CHECK_TRUE(harmonia_space_create("real_hyperbolic", 2, nullptr, nullptr, 0,
                                     &h2) == HARMONIA_OK);
    CHECK_TRUE(harmonia_fit_density(h2, 0.0, 10.0, 0.1, &json_text) ==
               HARMONIA_OK);
    CHECK_TRUE(json_text != nullptr);
    CHECK_TRUE(std::strstr(json_text, "\"leading_rate\"") != nullptr);
    harmonia_string_free(json_text);

    // suite run end to end
    char* report = nullptr;
    int all_pass = 0;
    CHECK_TRUE(harmonia_run_suite("jacobi", nullptr, lambdas, mults, 2, 5.0,
                                  nullptr, 0, &report,
                                  &all_pass) == HARMONIA_OK);
    CHECK_TRUE(all_pass == 1);
    CHECK_TRUE(std::strstr(report, "\"schema\": \"v1\"") != nullptr);
    harmonia_string_free(report);

    // radial suite with an explicit grid emits rows at those radii
    char* csv = nullptr;
    CHECK_TRUE(harmonia_run_suite_csv("radial", h3, nullptr, nullptr, 0, 5.0,
                                      "1:2:0.5", 0, &csv, &all_pass) ==
               HARMONIA_OK);
    CHECK_TRUE(all_pass == 1);
    CHECK_TRUE(std::strstr(csv, "\n1.5,") != nullptr);
    harmonia_string_free(csv);

    // deterministic table bytes
    char* t1 = nullptr;
    char* t2 = nullptr;
    CHECK_TRUE(harmonia_emit_table(e3, "density", 0.0, 5.0, 0.5, "csv", 1.0,
                                   &t1) == HARMONIA_OK);
    CHECK_TRUE(harmonia_emit_table(e3, "density", 0.0, 5.0, 0.5, "csv", 1.0,
                                   &t2) == HARMONIA_OK);
    CHECK_TRUE(std::strcmp(t1, t2) == 0);
    harmonia_string_free(t1);
    harmonia_string_free(t2);

    harmonia_green_destroy(kernel);
    harmonia_space_destroy(e3);
    harmonia_space_destroy(e2);
    harmonia_space_destroy(h3);
    harmonia_space_destroy(h2);
    harmonia_space_destroy(r1);

    if (g_failures == 0) {
        std::printf("capi tests: all passed\n");
        return 0;
    }
    std::printf("capi tests: %d failure(s)\n", g_failures);
    return 1;
}
