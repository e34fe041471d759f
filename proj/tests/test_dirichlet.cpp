#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "cusp_theta/dirichlet.hpp"
#include "cusp_theta/errors.hpp"
#include "cusp_theta/oracles.hpp"

using namespace cusp_theta;

namespace {

const DirichletData single{{{std::exp(1.0), 0.5}}, 0.5, 0};
const DirichletData two{{{2, 0.3}, {3, -0.2}}, 0.5, 0};

}  // namespace

TEST_SUITE("dirichlet") {
    TEST_CASE("single-q expansion is the log series") {
        const auto e = expand_log_L(single, 1.3);
        REQUIRE(e.terms.size() >= 5);
        for (int n = 1; n <= 5; ++n) {
            const auto& t = e.terms[n - 1];
            CHECK(t.log_norm == doctest::Approx(n));
            CHECK(t.weight == doctest::Approx((n % 2 ? 1 : -1) * std::pow(0.5, n) / n));
        }
    }

    TEST_CASE("exp of the expansion reproduces L") {
        const double A = 1.3;
        const auto e = expand_log_L(two, A);
        const cplx l(0.7, -2 * A);
        CHECK(std::abs(std::exp(log_L_series(l, e)) - L_dirichlet_sum(two, l)) < 1e-10);
    }

    TEST_CASE("smaller tolerance keeps more terms") {
        const auto a = expand_log_L(two, 1.3, 1e-6), b = expand_log_L(two, 1.3, 5e-7);
        std::set<double> bn;
        for (const auto& t : b.terms) bn.insert(t.log_norm);
        for (const auto& t : a.terms) CHECK(bn.count(t.log_norm) == 1);
        CHECK(b.terms.size() >= a.terms.size());
    }

    TEST_CASE("W") {
        const auto e = expand_log_L(single, 1.3);
        CHECK(std::abs(W(0.0, e).value) == 0);
        for (cplx t : {cplx(0.3, 0.7), cplx(-2, 0.2), cplx(1.5, -1)})
            CHECK(std::abs(W(t, e).value - W(-t, e).value) < 1e-13 * std::max(1.0, std::abs(W(t, e).value)));
        auto f = [&](cplx z) { return W(z, e).value; };
        CHECK(std::abs(residue(f, 1.0, 0.1) - 0.5) < 1e-8);
        CHECK(std::abs(residue(f, -1.0, 0.1) + 0.5) < 1e-8);
    }

    TEST_CASE("h2") {
        const double A = 1.3;
        const cplx t(0.4, 0.9);
        CHECK(h2(t, single, A) == h2(-t, single, A));
        const cplx lnL = std::log(1.0 + 0.5 * std::exp(-A));
        CHECK(std::abs(h2(0.0, single, A) + 2.0 * lnL) < 1e-12);
    }

    TEST_CASE("L ray closed forms") {
        const double A = 1.3;
        const auto e = expand_log_L(single, A);
        const cplx t(0.5, 1);
        CHECK(std::abs(L_ray_minus(t, single, A) - L_ray_minus_closed(t, single, e)) < 1e-7);
        CHECK(std::abs(L_ray_plus(t, single, A) - L_ray_plus_closed(t, single, e)) < 1e-7);
    }

    TEST_CASE("modular functional equation") {
        const auto s = modular_surface(10, 1, 1);
        CHECK(functional_equation_residual(s, cplx(1, 0.2)) < 1e-10);
        CHECK(functional_equation_residual(s, cplx(-2.5, 0.7)) < 1e-10);
        CHECK_THROWS_AS(functional_equation_residual(s, 0.0), DomainError);
    }

    TEST_CASE("h1 is entire and detour independent") {
        const auto s = modular_surface(10, 1, 1);
        const double A = 1.3;
        auto f = [&](cplx z) { return h1(z, s, A); };
        CHECK(std::abs(jump(f, f, -1, Crossing::FromAbove, 1e-5).value) < 1e-10);
        H1Options small;
        small.detour_radius = 5e-3;
        const cplx t(0.3, 0.5);
        CHECK(std::abs(h1(t, s, A) - h1(t, s, A, small)) < 1e-8);
    }

    TEST_CASE("expansion CSV") {
        std::ostringstream os;
        write_expansion_csv(expand_log_L(two, 1.3, 1e-3), os);
        CHECK(os.str().find("log_norm,weight,order_n,bound") != std::string::npos);
    }
}
