#include <doctest.h>

#include <cmath>

#include "cusp_theta/errors.hpp"
#include "cusp_theta/theta.hpp"

using namespace cusp_theta;

namespace {

SurfaceData empty_surface() {
    SurfaceData s;
    s.name = "empty";
    s.volume = 2;
    return s;
}

}  // namespace

TEST_SUITE("theta") {
    TEST_CASE("discrete part with one eigenvalue") {
        auto s = empty_surface();
        s.eigenvalues = {{5, 2}};
        CHECK(std::abs(theta_d(I, s).value - 2 * std::exp(-5.0)) < 1e-15);
        CHECK(std::abs(theta_tilde_d(-I, s).value - 2 * std::exp(-5.0)) < 1e-15);
        CHECK_THROWS_AS(theta_d(1.0, s), DomainError);
    }

    TEST_CASE("scattering part with one sigma") {
        auto s = empty_surface();
        CHECK(theta_s(I, s).value == cplx(0));
        s.sigmas = {{cplx(1, 1), 1}};
        CHECK(std::abs(theta_s(I, s).value - std::exp(cplx(-1, -1))) < 1e-15);
        CHECK(std::abs(theta_tilde_s(-I, s).value - std::conj(theta_s(I, s).value)) < 1e-15);
    }

    TEST_CASE("V series") {
        auto s = empty_surface();
        CHECK(V_series(2.0 * I, s).value == cplx(0));
        s.sigmas = {{cplx(1, 1), 1}};
        const cplx t = 2.0 * I, sg(1, 1);
        CHECK(std::abs(V_series(t, s).value - (std::exp(I * t * std::conj(sg)) - std::exp(I * t * sg))) < 1e-15);
        s.sigmas = {{cplx(1, 1e-8), 1}};
        CHECK(std::abs(V_series(t, s).value) < 1e-7);
    }

    TEST_CASE("elementary part") {
        const auto s = empty_surface();
        const cplx t = -I;
        const cplx expected = -(s.volume / (4 * pi)) * std::cos(0.5) / -std::pow(std::sin(0.5), 2) +
                              1.0 / (1.0 - std::exp(I));
        CHECK(std::abs(elementary_part(t, s) - expected) < 1e-13);
        CHECK(std::abs(theta_lower(t, s).value - expected) < 1e-13);
        auto f = [&](cplx z) { return elementary_part(z, s); };
        const std::vector<int> orders{-2, -1};
        const auto c = laurent_coefficients(f, cplx(0, -2 * pi), 0.5, orders);
        CHECK(std::abs(c.at(-1) - 1.0) < 1e-10);
        CHECK(std::abs(c.at(-2) - s.volume / pi) < 1e-10);
        const auto c2 = laurent_coefficients(f, cplx(0, -4 * pi), 0.5, orders);
        CHECK(std::abs(c2.at(-2) + s.volume / pi) < 1e-10);
    }

    TEST_CASE("sheet difference") {
        auto s = empty_surface();
        s.sigmas = {{cplx(3, 0.5), 1}};
        const cplx t(1, 1);
        CHECK(std::abs(theta_sheet1(t, s).value - theta(t, s).value - sheet_difference(t)) < 1e-13);
        CHECK(std::abs(theta_continued(LogPoint(t, 2), s).value - theta(t, s).value + 2.0 * sheet_difference(t)) <
              1e-12);
        s.num_cusps = 0;
        CHECK(theta_sheet1(t, s).value == theta(t, s).value);
    }

    TEST_CASE("modified theta") {
        auto s = empty_surface();
        s.sigmas = {{cplx(3, 0.5), 1}};
        const cplx t(-1, -0.5);
        const cplx a = theta_modified(LogPoint(t, 0), s).value;
        CHECK(std::abs(theta_modified(LogPoint(t, -1), s).value - a) < 1e-10);
        CHECK(std::abs(theta_modified(LogPoint(t, 3), s).value - a) < 1e-10);
        CHECK(std::abs(theta_modified(LogPoint(cplx(1, 1e-9)), s).value - theta(cplx(1, 1e-9), s).value) < 1e-6);
        s.num_cusps = 0;
        CHECK(theta_modified(LogPoint(t, 2), s).value == theta_lower(t, s).value);
    }

    TEST_CASE("V formula on the modular preset") {
        const VFormula vf(modular_surface(100, 39, 50));
        const LogPoint t(3.0 * I);
        const auto f = vf(t);
        const auto sr = V_series(t.value, vf.surface());
        CHECK(f.tail_bound + sr.tail_bound < 1e-3);
        CHECK(std::abs(f.value - sr.value) < f.tail_bound + sr.tail_bound);
        const cplx u(1, 1);
        CHECK(std::abs(vf.h(u) - vf.h(-u)) < 1e-6);
    }
}
