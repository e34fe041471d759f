#include <doctest.h>

#include <cmath>

#include "cusp_theta/errors.hpp"
#include "cusp_theta/oracles.hpp"
#include "cusp_theta/specfun.hpp"

using namespace cusp_theta;

TEST_SUITE("specfun") {
    TEST_CASE("digamma values and recurrence") {
        CHECK(std::abs(digamma(1.0) + euler_gamma) < 1e-14);
        const cplx z = 2.5;
        CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 0.4) < 1e-14);
        const cplx w(0.3, -4.2);
        CHECK(std::abs(digamma(w + 1.0) - digamma(w) - 1.0 / w) < 1e-13);
        CHECK_THROWS_AS(digamma(0.0), DomainError);
        CHECK_THROWS_AS(digamma(-3.0), DomainError);
    }

    TEST_CASE("log-gamma against the reflection formula") {
        const cplx z(0.25, 1.5);
        const cplx lhs = std::exp(log_gamma(z) + log_gamma(1.0 - z));
        CHECK(std::abs(lhs - pi / std::sin(pi * z)) < 1e-12 * std::abs(lhs));
        CHECK(std::abs(log_gamma(1.5) - std::log(std::sqrt(pi) / 2)) < 1e-14);
    }

    TEST_CASE("zeta and its derivative") {
        CHECK(std::abs(zeta(2.0) - pi * pi / 6) < 1e-13);
        CHECK(std::abs(zeta_pair(cplx(0.5, 14.134725141734693)).value) < 1e-10);
        const cplx s(0.7, 3.1), h = 1e-5;
        const cplx fd = (zeta(s + h) - zeta(s - h)) / (2.0 * h);
        CHECK(std::abs(zeta_pair(s).derivative - fd) < 1e-8);
    }

    TEST_CASE("Cramér F") {
        // t²F(t) = π²/6 − 2ζ(3)/t + O(t⁻²)
        const double zeta3 = 1.2020569031595943;
        for (double t : {1e4, 1e5}) {
            CHECK(std::abs(t * t * cramer_F(t).real() - pi * pi / 6 + 2 * zeta3 / t) < 1e-6);
            CHECK(std::abs(t * t * cramer_F(t).real() - pi * pi / 6) < 3 / t);
        }
        const auto oracle = integrate_real(
            [](double l) { return cplx(l / (std::expm1(l) * (l + 1))); }, 1e-12, 60);
        CHECK(std::abs(cramer_F(1.0) - oracle.value) < 1e-10);
        const cplx u(1, 1);
        CHECK(std::abs(std::conj(cramer_F(u)) - cramer_F(std::conj(u))) < 1e-12);
    }

    TEST_CASE("Cramér ray identity on the first quadrant") {
        for (cplx t : {cplx(0.5, 0.5), cplx(2, 1), cplx(0.3, 3)})
            CHECK(std::abs(cramer_ray(t) - cramer_ray_closed(t)) < 1e-8);
    }

    TEST_CASE("M: sheet shift and meromorphic continuation") {
        const cplx d = cramer_M(LogPoint(1.0, 1)) - cramer_M(LogPoint(1.0, 0));
        CHECK(std::abs(d + 2 * pi * I / (std::exp(-1.0) - 1.0)) < 1e-12);
        // single valued across the negative axis
        auto f = [](cplx z) { return cramer_M_meromorphic(z); };
        for (double x : {-0.5, -1.0, -2.0, -3.5, -6.0})
            CHECK(std::abs(jump(f, f, x, Crossing::FromAbove).value) < 1e-6);
    }

    TEST_CASE("M residues at 2πik are Log(2πik)") {
        for (int k : {1, -1, 2}) {
            const cplx c(0, 2 * pi * k);
            const cplx res = residue([](cplx z) { return cramer_M(LogPoint(z, 0)); }, c, 0.1);
            CHECK(std::abs(res - std::log(c)) < 1e-8);
            // the imaginary part alone is sign(k)π/2
            CHECK(std::abs(res.imag() - (k > 0 ? 1 : -1) * pi / 2) < 1e-8);
        }
    }

    TEST_CASE("LogPoint") {
        const LogPoint t(cplx(-1, 0.5), 2);
        CHECK(std::abs(t.log() - (std::log(t.value) + 4 * pi * I)) < 1e-15);
        CHECK(std::abs(t.opposite().log() - (t.log() - pi * I)) < 1e-14);
        CHECK_THROWS_AS(LogPoint(0.0), ValidationError);
    }
}
