#include "cusp_theta/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "cusp_theta/errors.hpp"

namespace cusp_theta {

namespace {

// ∫₀^∞ f(λ) dλ along λ = ρe^{iα}, cut where |e^{itλ}| < e^{−ray_truncation}
cplx ray_integral(const ComplexFn& f, cplx t, double alpha, const QuadratureBudget& b) {
    const cplx dir = std::polar(1.0, alpha);
    const double kappa = (t * dir).imag();
    if (!(kappa > 0)) throw DomainError("ray integral does not decay in this direction");
    const double len = b.ray_truncation / kappa;
    return integrate(f, Path::ray(0, dir, len), b).value;
}

double angle_on_sheet(const LogPoint& t) { return std::arg(t.value) + 2 * pi * t.sheet; }

}  // namespace

cplx cramer_ray(cplx t, const QuadratureBudget& b) {
    if (!(t.real() > 0 && t.imag() > 0)) throw DomainError("cramer_ray: t must lie in the first quadrant");
    auto f = [&](cplx l) { return std::exp(I * t * l) * digamma(1.0 - I * l); };
    return I * ray_integral(f, t, pi / 2 - std::arg(t), b);
}

cplx cramer_ray_closed(cplx t, const QuadratureBudget& b) { return euler_gamma / t - cramer_F(t, b); }

bool ray_domain(int k, const LogPoint& t) {
    const double th = angle_on_sheet(t);
    if (k == 1 || k == 2) return th > -pi / 2 && th < pi;
    if (k == 3 || k == 4) return th > 0 && th < 1.5 * pi;
    return false;
}

cplx I_ray(int k, const LogPoint& t, const GFactorParams& p, const QuadratureBudget& b) {
    p.validate();
    if (!ray_domain(k, t)) throw DomainError("I_ray: t outside the ray domain");
    const double th = angle_on_sheet(t);
    const cplx v = t.value;
    const double A = p.A;
    const double margin = 0.2;
    double alpha = pi / 2 - th;
    if (k <= 2) alpha = std::max(alpha, -pi / 2 + margin);
    else alpha = std::clamp(alpha, -pi / 2 + margin, pi / 2 - margin);
    // keep the decay rate positive near the ends of the domain
    if (std::sin(th + alpha) <= 0) throw DomainError("I_ray: no admissible ray");

    ComplexFn f;
    cplx pre;
    switch (k) {
        case 1:
            f = [&](cplx l) { return std::exp(I * v * l) * digamma(A - I * l); };
            pre = -I;
            break;
        case 2:
            f = [&](cplx l) { return std::exp(I * v * l) * digamma(0.5 + A - I * l); };
            pre = I;
            break;
        case 3:
            f = [&](cplx l) { return std::exp(I * v * l) * digamma(-A + I * l); };
            pre = I;
            break;
        default:
            f = [&](cplx l) { return std::exp(I * v * l) * digamma(-(A - 0.5) + I * l); };
            pre = -I;
            break;
    }
    return pre * std::exp(-A * v) * ray_integral(f, v, alpha, b);
}

namespace {

SurfaceData polynomial_surface(const DirichletData& d) {
    SurfaceData s;
    s.dirichlet = d;
    s.l_model = LModel::DirichletPolynomial;
    return s;
}

double log_L_minus_iA(const DirichletData& d, double A) {
    const double L = L_dirichlet_sum(d, cplx(0, -A)).real();
    if (!(L > 0)) throw NumericalError("L(−iA) must be positive");
    return std::log(L);
}

}  // namespace

cplx L_ray_minus(cplx t, const DirichletData& d, double A, const QuadratureBudget& b) {
    if (!(t.imag() > 0)) throw DomainError("L_ray_minus: Im t must be positive");
    const SurfaceData s = polynomial_surface(d);
    auto f = [&](cplx l) { return std::exp(I * t * l) * L_log_derivative(s, cplx(0, -A) - l); };
    // the ray must stay in Im λ ≤ −A, i.e. α in [0, π]
    const double alpha = std::max(0.0, pi / 2 - std::arg(t));
    return -std::exp(-A * t) * ray_integral(f, t, alpha, b);
}

cplx L_ray_plus(cplx t, const DirichletData& d, double A, const QuadratureBudget& b) {
    if (!(t.imag() > 0)) throw DomainError("L_ray_plus: Im t must be positive");
    const SurfaceData s = polynomial_surface(d);
    auto f = [&](cplx l) { return std::exp(I * t * l) * L_log_derivative(s, cplx(0, -A) + l); };
    const double alpha = std::min(0.0, pi / 2 - std::arg(t));
    return std::exp(A * t) * ray_integral(f, t, alpha, b);
}

cplx L_ray_minus_closed(cplx t, const DirichletData& d, const DirichletExpansion& e) {
    const double A = e.A;
    cplx sum = 0;
    for (const auto& term : e.terms)
        sum += term.weight * std::exp(-A * term.log_norm) / (t + term.log_norm);
    return std::exp(-A * t) * (-log_L_minus_iA(d, A) + t * sum);
}

cplx L_ray_plus_closed(cplx t, const DirichletData& d, const DirichletExpansion& e) {
    const double A = e.A;
    cplx sum = 0;
    for (const auto& term : e.terms)
        sum += term.weight * std::exp(-A * term.log_norm) / (t - term.log_norm);
    return std::exp(A * t) * (-log_L_minus_iA(d, A) + t * sum);
}

cplx G_ray_combined(cplx t, const GFactorParams& p, const QuadratureBudget& b) {
    p.validate();
    if (!(t.imag() > 0)) throw DomainError("G_ray_combined: Im t must be positive");
    const double A = p.A;
    auto lower = [&](cplx l) { return std::exp(I * t * l) * Gdot_over_G(p, cplx(0, -A) - l); };
    auto upper = [&](cplx l) { return std::exp(I * t * l) * Gdot_over_G(p, cplx(0, A) + l); };
    const cplx e = std::exp(-A * t);
    return -e * ray_integral(lower, t, 0, b) + e * ray_integral(upper, t, 0, b);
}

}  // namespace cusp_theta
