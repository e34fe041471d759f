#include <doctest.h>

#include <cmath>
#include <random>

#include "cusp_theta/dirichlet.hpp"
#include "cusp_theta/oracles.hpp"
#include "cusp_theta/theta.hpp"
#include "cusp_theta/trace_audit.hpp"

using namespace cusp_theta;

TEST_SUITE("quadrature") {
    TEST_CASE("property: Laurent data of random rational functions") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-1, 1);
        for (int i = 0; i < 10; ++i) {
            const cplx a(u(rng), u(rng)), b(u(rng), u(rng)), z0(3 * u(rng), 3 * u(rng));
            // a/(z−z0)² + b/(z−z0) + 1/(z−z0−2)
            auto f = [&](cplx z) { return a / ((z - z0) * (z - z0)) + b / (z - z0) + 1.0 / (z - z0 - 2.0); };
            const std::vector<int> orders{-2, -1, 0};
            const auto c = laurent_coefficients(f, z0, 0.5, orders);
            CHECK(std::abs(c.at(-2) - a) < 1e-10);
            CHECK(std::abs(c.at(-1) - b) < 1e-10);
            CHECK(std::abs(c.at(0) + 0.5) < 1e-10);
        }
    }

    TEST_CASE("property: path deformation in a holomorphic region") {
        auto f = [](cplx z) { return std::exp(z) * std::cos(3.0 * z); };
        const cplx a(-1, 0.2), b(2, -0.5);
        const auto straight = integrate(f, Path::segment(a, b));
        Path bent(a);
        bent.line_to(cplx(0, 2)).line_to(cplx(1.5, 1)).line_to(b);
        CHECK(std::abs(straight.value - integrate(f, bent).value) < 1e-10);
    }
}

TEST_SUITE("specfun") {
    TEST_CASE("property: F against a fixed-grid Gauss oracle") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> re(0.05, 8), im(-8, 8);
        const auto& g = gauss_legendre(64);
        for (int i = 0; i < 25; ++i) {
            const cplx t(re(rng), im(rng));
            // composite Gauss on [0, 60] in unit panels
            cplx sum = 0;
            for (int p = 0; p < 60; ++p)
                for (std::size_t k = 0; k < g.nodes.size(); ++k) {
                    const double l = p + 0.5 * (g.nodes[k] + 1);
                    const double w = l < 1e-8 ? 1 - l / 2 : l / std::expm1(l);
                    sum += 0.5 * g.weights[k] * w / (l + t);
                }
            CHECK(std::abs(cramer_F(t) - sum / t) < 1e-10 * std::max(1.0, std::abs(sum / t)));
        }
    }
}

TEST_SUITE("dirichlet") {
    TEST_CASE("property: W is even at random points") {
        const DirichletData d{{{2, 0.3}, {3, -0.2}, {5, 0.1}}, 0.5, 0};
        const auto e = expand_log_L(d, 1.3);
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int i = 0; i < 20; ++i) {
            const cplx t(u(rng), u(rng));
            const cplx a = W(t, e).value;
            CHECK(std::abs(a - W(-t, e).value) < 1e-13 * std::max(1.0, std::abs(a)));
        }
    }

    TEST_CASE("property: modular functional equation at 20 points") {
        const auto s = modular_surface(10, 1, 1);
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> re(-6, 6), im(-1, 1);
        for (int i = 0; i < 20; ++i) {
            const cplx l(re(rng), im(rng));
            if (std::abs(l) < 0.2) continue;
            CHECK(functional_equation_residual(s, l) < 1e-10);
        }
    }
}

TEST_SUITE("theta") {
    TEST_CASE("property: h is even on the modular preset") {
        const VFormula vf(modular_surface(100, 39, 50));
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> u(-2, 2);
        for (int i = 0; i < 10; ++i) {
            const cplx t(u(rng), u(rng));
            CHECK(std::abs(vf.h(t) - vf.h(-t)) < 1e-6);
        }
    }

    TEST_CASE("property: sheet-difference law") {
        const auto s = modular_surface(50, 10, 10);
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> re(-3, 3), im(0.5, 3);
        for (int i = 0; i < 10; ++i) {
            const cplx t(re(rng), im(rng));
            const cplx d = theta_sheet1(t, s).value - theta(t, s).value;
            CHECK(std::abs(d - static_cast<double>(s.num_cusps) * sheet_difference(t)) < 1e-12);
        }
    }
}

TEST_SUITE("trace_audit") {
    TEST_CASE("property: term evaluators are linear") {
        const auto s = modular_surface(50, 10, 50);
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> c(0.8, 4), w(0.2, 0.6), a(-2, 2);
        for (int i = 0; i < 5; ++i) {
            const double c1 = c(rng), c2 = c(rng);
            const TestFunction p(c1, std::min(w(rng), 0.9 * c1)), q(c2, std::min(w(rng), 0.9 * c2));
            const double x = a(rng), y = a(rng);
            const auto pq = p * x + q * y;
            for (auto term : {c_hyperbolic, c_identity, c_elliptic}) {
                const double lin = x * term(p, s) + y * term(q, s);
                CHECK(std::abs(term(pq, s) - lin) < 1e-12 * std::max(1.0, std::abs(lin)));
            }
            const double l = a(rng) * 5;
            CHECK(std::abs(pq.hat(l) - (x * p.hat(l) + y * q.hat(l))) < 1e-12);
        }
    }
}
