#include <doctest.h>

#include <cmath>

#include "exppoly.hpp"
#include "model_space.hpp"

using namespace harmonia;

namespace {

std::vector<double> linspace(double a, double b, double step)
{
    std::vector<double> g;
    for (double t = a; t <= b + 1e-12; t += step)
        g.push_back(t);
    return g;
}

ExpPoly sinhPoly()
{
    ExpPoly p;
    p.terms.push_back({{0.5}, {}, 1.0, 0.0});
    p.terms.push_back({{-0.5}, {}, -1.0, 0.0});
    return p;
}

}  // namespace

TEST_CASE("evaluation")
{
    CHECK(sinhPoly().eval(1.0) ==
          doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(ExpPoly{}.eval(2.7) == 0.0);
    ExpPoly sq;
    sq.terms.push_back({{0.0, 0.0, 1.0}, {}, 0.0, 0.0});
    CHECK(sq.eval(3.0) == doctest::Approx(9.0));
    // oscillatory term
    ExpPoly osc;
    osc.terms.push_back({{1.0}, {2.0}, 0.5, 3.0});
    const double t = 0.7;
    CHECK(osc.eval(t) ==
          doctest::Approx((std::cos(3 * t) + 2 * std::sin(3 * t)) *
                          std::exp(0.5 * t)));
}

TEST_CASE("translation rank")
{
    const auto tg = linspace(0.0, 6.0, 0.25);
    const auto sg = linspace(0.0, 6.0, 0.25);
    SUBCASE("sinh spans e^t, e^{-t}")
    {
        CHECK(translationRank([](double t) { return std::sinh(t); }, tg, sg,
                              1e-9) == 2);
    }
    SUBCASE("t^2 spans 1, t, t^2")
    {
        CHECK(translationRank([](double t) { return t * t; }, tg, sg, 1e-9) ==
              3);
    }
    SUBCASE("sinh^3 cosh has four frequencies")
    {
        // oracle: sinh^3 x cosh x = sinh(4x)/8 - sinh(2x)/4, rates {4,-4,2,-2}
        auto f = [](double t) {
            return std::pow(std::sinh(t), 3) * std::cosh(t);
        };
        auto ref = [](double t) {
            return std::sinh(4 * t) / 8.0 - std::sinh(2 * t) / 4.0;
        };
        for (double t : {0.0, 0.5, 1.3})
            CHECK(f(t) == doctest::Approx(ref(t)).epsilon(1e-12));
        const auto tg2 = linspace(0.0, 4.0, 0.2);
        CHECK(translationRank(f, tg2, tg2, 1e-9) == 4);
    }
    SUBCASE("rank is stable under grid refinement")
    {
        auto f = [](double t) { return std::sinh(t); };
        const int coarse = translationRank(f, tg, sg, 1e-9);
        const auto tg2 = linspace(0.0, 6.0, 0.125);
        const int fine = translationRank(f, tg2, tg2, 1e-9);
        CHECK(coarse == fine);
    }
    SUBCASE("degenerate grids are rejected")
    {
        CHECK_THROWS(translationRank([](double t) { return t; }, {0.0, 1.0},
                                     {0.0, 1.0}, 1e-9));
    }
}

TEST_CASE("prony fit recovers closed forms")
{
    SUBCASE("sinh")
    {
        const auto ts = linspace(0.0, 10.0, 0.1);
        std::vector<double> xs;
        for (double t : ts)
            xs.push_back(std::sinh(t));
        const FitResult fit = fitExpPoly(ts, xs);
        CHECK(fit.rel_residual <= 1e-8);
        CHECK(fit.poly.terms.size() == 2);
        CHECK(fit.poly.leadingRate() == doctest::Approx(1.0).epsilon(1e-6));
        // coefficients {1/2, -1/2} at rates {1, -1}
        for (const auto& term : fit.poly.terms) {
            if (term.alpha > 0.0)
                CHECK(term.poly_cos[0] == doctest::Approx(0.5).epsilon(1e-6));
            else
                CHECK(term.poly_cos[0] == doctest::Approx(-0.5).epsilon(1e-4));
        }
    }
    SUBCASE("pure polynomial t^2")
    {
        const auto ts = linspace(0.0, 10.0, 0.1);
        std::vector<double> xs;
        for (double t : ts)
            xs.push_back(t * t);
        const FitResult fit = fitExpPoly(ts, xs);
        CHECK(fit.max_residual <= 1e-9 * 100.0);
        CHECK(fit.poly.terms.size() == 1);
        CHECK(std::abs(fit.poly.terms[0].alpha) <= 1e-9);
        REQUIRE(fit.poly.terms[0].poly_cos.size() == 3);
        CHECK(fit.poly.terms[0].poly_cos[2] ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("sinh^2 = e^{2t}/4 + e^{-2t}/4 - 1/2")
    {
        const auto ts = linspace(0.0, 10.0, 0.1);
        std::vector<double> xs;
        for (double t : ts)
            xs.push_back(std::pow(std::sinh(t), 2));
        const FitResult fit = fitExpPoly(ts, xs);
        CHECK(fit.rel_residual <= 1e-8);
        REQUIRE(fit.poly.terms.size() == 3);
        for (const auto& term : fit.poly.terms) {
            if (term.alpha > 1.0)
                CHECK(term.poly_cos[0] == doctest::Approx(0.25).epsilon(1e-6));
            else if (term.alpha < -1.0)
                CHECK(term.poly_cos[0] == doctest::Approx(0.25).epsilon(1e-3));
            else
                CHECK(term.poly_cos[0] == doctest::Approx(-0.5).epsilon(1e-4));
        }
    }
    SUBCASE("oscillatory data")
    {
        const auto ts = linspace(0.0, 12.0, 0.05);
        std::vector<double> xs;
        for (double t : ts)
            xs.push_back(std::exp(-0.3 * t) * std::cos(2.0 * t));
        const FitResult fit = fitExpPoly(ts, xs);
        CHECK(fit.rel_residual <= 1e-8);
        REQUIRE(fit.poly.terms.size() == 1);
        CHECK(fit.poly.terms[0].alpha == doctest::Approx(-0.3).epsilon(1e-8));
        CHECK(fit.poly.terms[0].beta == doctest::Approx(2.0).epsilon(1e-8));
    }
    SUBCASE("repeated complex pair carries a polynomial factor")
    {
        const auto ts = linspace(0.0, 12.0, 0.05);
        std::vector<double> xs;
        for (double t : ts)
            xs.push_back((1.0 + 2.0 * t) * std::exp(-0.2 * t) *
                         std::sin(1.5 * t));
        const FitResult fit = fitExpPoly(ts, xs);
        CHECK(fit.rel_residual <= 1e-7);
        REQUIRE(fit.poly.terms.size() == 1);
        CHECK(fit.poly.terms[0].alpha == doctest::Approx(-0.2).epsilon(1e-6));
        CHECK(fit.poly.terms[0].beta == doctest::Approx(1.5).epsilon(1e-6));
        REQUIRE(fit.poly.terms[0].poly_sin.size() == 2);
        CHECK(fit.poly.terms[0].poly_sin[1] ==
              doctest::Approx(2.0).epsilon(1e-6));
    }
}

TEST_CASE("round trip through eval")
{
    const ExpPoly p = sinhPoly();
    const auto ts = linspace(0.0, 8.0, 0.1);
    std::vector<double> xs;
    for (double t : ts)
        xs.push_back(p.eval(t));
    const FitResult fit = fitExpPoly(ts, xs);
    double worst = 0.0, scale = 0.0;
    for (double t : ts) {
        worst = std::max(worst, std::abs(fit.poly.eval(t) - p.eval(t)));
        scale = std::max(scale, std::abs(p.eval(t)));
    }
    CHECK(worst / scale <= 1e-6);
}

TEST_CASE("fitted leading rate matches the catalog mean curvature")
{
    for (int n : {2, 3}) {
        const ModelSpace s = makeSpace("real_hyperbolic", n);
        const auto ts = linspace(0.0, 10.0, 0.1);
        std::vector<double> xs;
        for (double t : ts)
            xs.push_back(s.density(t).f);
        const FitResult fit = fitExpPoly(ts, xs);
        CHECK(fit.rel_residual <= 1e-6);
        CHECK(fit.poly.leadingRate() ==
              doctest::Approx(s.meanCurvature()).epsilon(1e-4));
    }
}

TEST_CASE("fit input validation")
{
    CHECK_THROWS(fitExpPoly({0.0, 0.1, 0.3}, {0.0, 1.0, 2.0}));
    const std::vector<double> zero_ts = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    const std::vector<double> zeros(zero_ts.size(), 0.0);
    const FitResult fit = fitExpPoly(zero_ts, zeros);
    CHECK(fit.poly.terms.empty());
    CHECK(fit.max_residual == 0.0);
}

TEST_CASE("fit beyond the caps reports the achieved residual")
{
    const auto ts = linspace(0.0, 8.0, 0.05);
    std::vector<double> xs;
    for (double t : ts)
        xs.push_back(std::sinh(t) + std::sinh(2.0 * t) + std::sinh(3.0 * t));
    // six modes against a cap of four
    try {
        fitExpPoly(ts, xs, {2, 1});
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
    }
}
