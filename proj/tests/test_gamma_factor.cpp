#include <doctest.h>

#include <cmath>

#include "cusp_theta/gamma_factor.hpp"
#include "cusp_theta/oracles.hpp"

using namespace cusp_theta;

TEST_SUITE("gamma_factor") {
    TEST_CASE("G values") {
        const GFactorParams p;
        CHECK(std::abs(G(p, -I) - 2.0) < 1e-13);
        CHECK(std::abs(G(p, 1.0) * G(p, -1.0) - pi / std::tanh(pi)) < 1e-12);
        GFactorParams q;
        q.a = 1;
        q.b = 2;
        CHECK(std::abs(G(q, 0.5) / G(p, 0.5) - std::exp(2.0)) < 1e-12);
    }

    TEST_CASE("logarithmic derivative") {
        const GFactorParams p;
        const cplx l(1, 0.3), h = 1e-5;
        const cplx fd = (G(p, l + h) - G(p, l - h)) / (2.0 * h) / G(p, l);
        CHECK(std::abs(Gdot_over_G(p, l) - fd) < 1e-8);
        GFactorParams pb = p;
        pb.b = 1;
        CHECK(std::abs(Gdot_over_G(pb, l) - Gdot_over_G(p, l) - 1.0) < 1e-14);
        GFactorParams p2 = p;
        p2.r = 2;
        CHECK(std::abs(Gdot_over_G(p2, l) - 2.0 * Gdot_over_G(p, l)) < 1e-13);
    }

    TEST_CASE("A must avoid half-integers") {
        GFactorParams p;
        p.A = 1.5;
        CHECK_THROWS(p.validate());
        p.A = 2;
        CHECK_THROWS(p.validate());
    }

    TEST_CASE("closed forms against ray quadrature") {
        const GFactorParams p;
        CHECK(std::abs(I1(LogPoint(cplx(1, 1)), p) - I_ray(1, LogPoint(cplx(1, 1)), p)) < 1e-7);
        CHECK(std::abs(I2(LogPoint(cplx(0.5, 2)), p) - I_ray(2, LogPoint(cplx(0.5, 2)), p)) < 1e-7);
        CHECK(std::abs(I3(LogPoint(cplx(-1, 1)), p) - I_ray(3, LogPoint(cplx(-1, 1)), p)) < 1e-7);
        CHECK(std::abs(I4(LogPoint(cplx(-0.5, 1.5)), p) - I_ray(4, LogPoint(cplx(-0.5, 1.5)), p)) < 1e-7);
    }

    TEST_CASE("I1 jump at -1") {
        const GFactorParams p;
        auto f = [&](cplx z) { return I1(LogPoint(z, 0), p); };
        const auto j = jump(f, f, -1, Crossing::FromAbove);
        CHECK(std::abs(j.value - 2 * pi * I / (std::exp(-1.0) - 1.0)) < 1e-5);
        CHECK(std::abs(j.value - cplx(0, -9.939850)) < 1e-5);
    }

    TEST_CASE("b cancels from the combined ray contribution") {
        GFactorParams p;
        const cplx t(0.4, 1.2);
        const cplx closed = I1(LogPoint(t), p) + I2(LogPoint(t), p) + I3(LogPoint(t), p) + I4(LogPoint(t), p);
        for (double b : {-1.0, 0.0, 1.0}) {
            p.b = b;
            CHECK(std::abs(G_ray_combined(t, p) - closed) < 1e-7);
        }
    }

    TEST_CASE("entire corrections") {
        const GFactorParams p;
        CHECK(std::abs(h3(0.0, p) + log_gamma(p.A).real()) < 1e-10);
        auto f = [&](cplx z) { return h3(z, p); };
        CHECK(std::abs(jump(f, f, -1.5, Crossing::FromAbove, 1e-5).value) < 1e-10);
        HOptions small;
        small.detour_radius = 5e-3;
        const cplx t(0.7, -0.4);
        CHECK(std::abs(h5(t, p) - h5(t, p, small)) < 1e-8);
        CHECK(std::abs(h6(t, p) - h6(t, p, small)) < 1e-8);
    }
}
