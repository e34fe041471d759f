#include <doctest.h>

#include <cmath>

#include "cusp_theta/errors.hpp"
#include "cusp_theta/quadrature.hpp"
#include "cusp_theta/trace_audit.hpp"

using namespace cusp_theta;

TEST_SUITE("trace_audit") {
    TEST_CASE("test function validation") {
        CHECK_THROWS_AS(TestFunction(0.5, 1), ValidationError);
        CHECK_THROWS_AS(TestFunction(2, 0), ValidationError);
        CHECK_THROWS_AS(TestFunction(2, 1, 1, 4), ValidationError);
    }

    TEST_CASE("Fourier transform") {
        const TestFunction psi(2, 0.5);
        CHECK(std::abs(psi.hat(0) - psi.pair([](double) { return cplx(1); })) < 1e-14);
        // real ψ: ψ̂(−λ) = conj ψ̂(λ), so φ̂ of the even extension is real and even
        for (double l : {0.3, 2.0, 11.0}) CHECK(std::abs(psi.hat(-l) - std::conj(psi.hat(l))) < 1e-12);
        CHECK_THROWS_AS(psi + TestFunction(-2, 0.5), ValidationError);
        const double l = 3.7;
        const auto dense = integrate_real([&](double t) { return std::exp(I * l * t) * psi(t); }, 1.5, 2.5);
        CHECK(std::abs(fourier_hat(psi, l) - dense.value) < 1e-9);
        CHECK(std::abs(psi.hat(cplx(20, 0.5))) <= psi.hat_bound(std::abs(cplx(20, 0.5)), 0.5));
    }

    TEST_CASE("hyperbolic term") {
        const auto s = modular_surface(10, 1, 50);
        CHECK(c_hyperbolic(TestFunction(1, 0.3), s) == 0);
        const double l = s.geodesics[0].length;
        const TestFunction psi(l, 0.2);
        const double expected = l / (2 * s.geodesics[0].multiplicity_n * std::sinh(l / 2)) * psi(l);
        CHECK(c_hyperbolic(psi, s) == doctest::Approx(expected).epsilon(1e-14));
    }

    TEST_CASE("identity term is linear") {
        const auto s = modular_surface(10, 1, 1);
        const TestFunction psi(2, 0.5);
        CHECK(c_identity(psi * 2, s) == doctest::Approx(2 * c_identity(psi, s)).epsilon(1e-12));
        const TestFunction chi(3, 0.4);
        CHECK(c_identity(psi + chi, s) ==
              doctest::Approx(c_identity(psi, s) + c_identity(chi, s)).epsilon(1e-12));
    }

    TEST_CASE("gamma term identity") {
        const auto g = gamma_term_check(TestFunction(2, 0.5));
        CHECK(g.residual < 1e-7);
        CHECK(std::abs(g.reflected) < 1e-9);
    }

    TEST_CASE("scattering term with empty data") {
        SurfaceData s;
        s.num_cusps = 1;
        s.volume = 1;
        s.l_model = LModel::DirichletPolynomial;
        // S ≡ 1 needs no gamma factor, so only the sigma side is checked
        const auto c = scattering_term_check(TestFunction(2, 0.5), s);
        CHECK(c.rhs == cplx(0));
    }

    TEST_CASE("positive audit at the shortest geodesic") {
        const auto s = modular_surface_full();
        const auto r = audit_positive(TestFunction(2 * std::acosh(1.5), 1), s);
        CHECK(r.relative_residual < 0.05);
        CHECK(r.eps_table.size() == 3);
        const auto zero = audit_positive(TestFunction(2 * std::acosh(1.5), 1, 0), s);
        CHECK(std::abs(zero.residual) < 1e-12);
    }
}
