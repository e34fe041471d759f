#include <doctest.h>

#include <cmath>

#include "cusp_theta/errors.hpp"
#include "cusp_theta/quadrature.hpp"

using namespace cusp_theta;

TEST_SUITE("quadrature") {
    TEST_CASE("contour integral of 1/z around the unit circle") {
        const auto r = integrate([](cplx z) { return 1.0 / z; }, Path::circle(0, 1));
        CHECK(std::abs(r.value - 2 * pi * I) < 1e-12);
    }

    TEST_CASE("truncated ray integral of e^{-x}") {
        const auto r = integrate([](cplx z) { return std::exp(-z); }, Path::ray(0, 1, 60));
        CHECK(std::abs(r.value - 1.0) < 1e-10);
    }

    TEST_CASE("detour sides differ by 2πi times the residue") {
        auto f = [](cplx z) { return 3.0 / (z - 0.5); };
        const std::vector<cplx> holes{0.5};
        const auto right = integrate(f, Path::detoured_segment(-1, 2, holes, 0.1, DetourSide::Right));
        const auto left = integrate(f, Path::detoured_segment(-1, 2, holes, 0.1, DetourSide::Left));
        // travelling left to right, the left detour passes above the pole
        CHECK(std::abs(std::abs(right.value - left.value) - 2 * pi * 3) < 1e-10);
    }

    TEST_CASE("Laurent coefficients of simple and double poles") {
        const std::vector<int> o1{-1};
        CHECK(std::abs(laurent_coefficients([](cplx z) { return 1.0 / (z - 1.0); }, 1, 0.5, o1).at(-1) - 1.0) <
              1e-12);
        const std::vector<int> o2{-2, -1};
        const auto c = laurent_coefficients([](cplx z) { return 1.0 / (z * z); }, 0, 0.5, o2);
        CHECK(std::abs(c.at(-2) - 1.0) < 1e-12);
        CHECK(std::abs(c.at(-1)) < 1e-12);
    }

    TEST_CASE("residue of r/(1-e^{-t}) at -2πi is r") {
        const double r = 3;
        auto f = [&](cplx t) { return r / (1.0 - std::exp(-t)); };
        CHECK(std::abs(residue(f, cplx(0, -2 * pi), 0.5) - r) < 1e-10);
    }

    TEST_CASE("jump of Log across the negative axis") {
        auto f = [](cplx z) { return std::log(z); };
        const auto j = jump(f, f, -2.0, Crossing::FromAbove, 1e-4);
        CHECK(std::abs(j.value + 2 * pi * I) < 1e-9);
    }

    TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
        const auto& g = gauss_legendre(10);
        double s = 0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 18);
        CHECK(s == doctest::Approx(2.0 / 19).epsilon(1e-14));
    }

    TEST_CASE("budget exhaustion is a numerical error") {
        QuadratureBudget b;
        b.max_subdivisions = 3;
        CHECK_THROWS_AS(integrate_real([](double x) { return cplx(std::sin(200 * x)); }, 0, 10, b), NumericalError);
    }
}
