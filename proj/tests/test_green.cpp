#include <doctest.h>

#include <cmath>

#include "green.hpp"
#include "model_space.hpp"
#include "quadrature.hpp"

using namespace harmonia;

TEST_CASE("euclidean n=3 kernel is 1/(4 pi r)")
{
    const GreenKernel kernel(makeSpace("euclidean", 3));
    for (double r : {0.5, 1.0, 2.0, 5.0})
        CHECK(kernel.radial(r) ==
              doctest::Approx(1.0 / (4.0 * M_PI * r)).epsilon(1e-11));
}

TEST_CASE("hyperbolic kernels match antiderivatives")
{
    SUBCASE("n=3: int csch^2 = -coth")
    {
        const GreenKernel kernel(makeSpace("real_hyperbolic", 3));
        const double ref = (1.0 / std::tanh(1.0) - 1.0) / (4.0 * M_PI);
        CHECK(kernel.radial(1.0) == doctest::Approx(ref).epsilon(1e-11));
    }
    SUBCASE("n=2: int dt/sinh = ln tanh(t/2)")
    {
        const GreenKernel kernel(makeSpace("real_hyperbolic", 2));
        const double ref = -std::log(std::tanh(0.5)) / (2.0 * M_PI);
        CHECK(kernel.radial(1.0) == doctest::Approx(ref).epsilon(1e-11));
    }
}

TEST_CASE("flat plane has no positive kernel")
{
    CHECK_THROWS_AS(GreenKernel(makeSpace("euclidean", 2)), std::domain_error);
}

TEST_CASE("kernel decreases to zero")
{
    for (const char* kind : {"euclidean", "real_hyperbolic"}) {
        const GreenKernel kernel(makeSpace(kind, 3));
        double prev = kernel.radial(0.05);
        for (double r = 0.1; r <= 80.0; r += 0.5) {
            const double g = kernel.radial(r);
            CHECK(g < prev);
            CHECK(g > 0.0);
            prev = g;
        }
        CHECK(kernel.radial(100.0) < 1e-2);
    }
}

TEST_CASE("kernel derivative identity")
{
    const GreenKernel kernel(makeSpace("real_hyperbolic", 3));
    for (double r : {0.5, 2.0, 8.0}) {
        auto g = [&](double s) { return kernel.radial(s); };
        CHECK(derivative1(g, r, 1e-3) ==
              doctest::Approx(kernel.radialDerivative(r)).epsilon(1e-8));
    }
}

TEST_CASE("fundamental solution residual")
{
    RadialFunction bump{
        [](double r) {
            const double s = 1.0 - r * r;
            return r >= 1.0 ? 0.0 : s * s;
        },
        [](double r) { return r >= 1.0 ? 0.0 : -4.0 * r * (1.0 - r * r); },
        1.0};
    SUBCASE("euclidean n=3, exact integral is -phi(0)")
    {
        // oracle: 4pi int_0^1 (1/(4 pi r)) (Delta phi) r^2 dr
        //       = int_0^1 r (20 r^2 - 12) dr = -1
        const double oracle =
            integrate([](double r) { return r * (20.0 * r * r - 12.0); }, 0.0,
                      1.0);
        CHECK(oracle == doctest::Approx(-1.0).epsilon(1e-12));
        const GreenKernel kernel(makeSpace("euclidean", 3));
        CHECK(verifyFundamental(kernel, bump, 1.0) <= 1e-6);
    }
    SUBCASE("real hyperbolic n=3")
    {
        const GreenKernel kernel(makeSpace("real_hyperbolic", 3));
        CHECK(verifyFundamental(kernel, bump, 1.0) <= 1e-6);
    }
    SUBCASE("zero test function")
    {
        const GreenKernel kernel(makeSpace("euclidean", 3));
        RadialFunction zero{[](double) { return 0.0; },
                            [](double) { return 0.0; }, 0.0};
        CHECK(verifyFundamental(kernel, zero, 1.0) <= 1e-12);
    }
    SUBCASE("unsupported test function is rejected")
    {
        const GreenKernel kernel(makeSpace("euclidean", 3));
        RadialFunction bad{[](double) { return 1.0; },
                           [](double) { return 0.0; }, 1.0};
        CHECK_THROWS_AS(verifyFundamental(kernel, bad, 1.0),
                        std::invalid_argument);
    }
}

TEST_CASE("martin ratios")
{
    SUBCASE("hyperbolic plane: e^{-a}")
    {
        const GreenKernel kernel(makeSpace("real_hyperbolic", 2));
        CHECK(kernel.martinRatio(1.0, 40.0) ==
              doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
        CHECK(kernel.martinRatio(0.0, 40.0) == doctest::Approx(1.0));
    }
    SUBCASE("euclidean n=3: finite-s ratio and the flat limit")
    {
        const GreenKernel kernel(makeSpace("euclidean", 3));
        CHECK(kernel.martinRatio(5.0, 40.0) ==
              doctest::Approx(40.0 / 45.0).epsilon(1e-10));
        CHECK(kernel.martinRatio(5.0, 1e4) ==
              doctest::Approx(1.0).epsilon(1e-3));
    }
    SUBCASE("below the horizon start is rejected")
    {
        const GreenKernel kernel(makeSpace("real_hyperbolic", 2));
        CHECK_THROWS_AS(kernel.martinRatio(1.0, 5.0), std::invalid_argument);
    }
}

TEST_CASE("martin kernel along a ray on the disk")
{
    const GreenKernel kernel(makeSpace("real_hyperbolic", 2));
    const DiskPoint p0;
    const BoundaryAngle xi(0.0);
    SUBCASE("x = p0 gives the constant sequence 1")
    {
        const auto seq = martinKernelAlongRay(kernel, p0, p0, xi, {10.0, 40.0});
        CHECK(seq[0] == doctest::Approx(1.0));
        CHECK(seq[1] == doctest::Approx(1.0));
    }
    SUBCASE("x on the ray at parameter 1: limit e^{+1}")
    {
        const DiskPoint x(std::complex<double>(std::tanh(0.5), 0.0));
        const auto seq = martinKernelAlongRay(kernel, x, p0, xi, {40.0});
        CHECK(seq[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-4));
    }
    SUBCASE("off-ray point: oracle is the closed-form Busemann function")
    {
        const DiskPoint x(std::complex<double>(0.0, 0.3));
        const double b = disk::busemann(xi, x);
        CHECK(b == doctest::Approx(std::log(1.09 / 0.91)).epsilon(1e-12));
        const auto seq = martinKernelAlongRay(kernel, x, p0, xi, {40.0});
        CHECK(seq[0] == doctest::Approx(std::exp(-b)).epsilon(1e-4));
    }
    SUBCASE("off-origin basepoint renormalizes the Busemann function")
    {
        const DiskPoint q0(std::complex<double>(0.3, 0.0));
        const DiskPoint x(std::complex<double>(0.1, 0.2));
        const double b = disk::busemann(xi, x) - disk::busemann(xi, q0);
        const auto seq = martinKernelAlongRay(kernel, x, q0, xi, {40.0});
        CHECK(seq[0] == doctest::Approx(std::exp(-b)).epsilon(1e-4));
    }
}
