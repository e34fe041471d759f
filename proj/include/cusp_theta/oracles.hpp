#pragma once

#include "cusp_theta/dirichlet.hpp"
#include "cusp_theta/gamma_factor.hpp"

namespace cusp_theta {

// Direct quadratures used to check closed forms. Rays are rotated to λ = ρe^{iα} with
// α chosen for fastest decay of e^{itλ} while staying clear of the integrand's poles.

// i∫₀^∞ e^{itλ} ψ(1−iλ) dλ, and its closed form C/t − F(t)
cplx cramer_ray(cplx t, const QuadratureBudget& b = {});
cplx cramer_ray_closed(cplx t, const QuadratureBudget& b = {});

// Whether the ray integral for I_k converges to the principal closed form at t:
// arg t in (−π/2, π) on sheet 0 for k = 1, 2; arg t in (0, 3π/2) for k = 3, 4.
bool ray_domain(int k, const LogPoint& t);
cplx I_ray(int k, const LogPoint& t, const GFactorParams& p, const QuadratureBudget& b = {});

// −e^{−At}∫₀^∞ e^{itλ}(L̇/L)(−iA−λ)dλ and e^{At}∫₀^∞ e^{itλ}(L̇/L)(−iA+λ)dλ, Im t > 0
cplx L_ray_minus(cplx t, const DirichletData& d, double A, const QuadratureBudget& b = {});
cplx L_ray_plus(cplx t, const DirichletData& d, double A, const QuadratureBudget& b = {});
// −e^{∓At}ln L(−iA) + e^{∓At} t Σ c(p)/(|p|^A(t ± ln|p|))
cplx L_ray_minus_closed(cplx t, const DirichletData& d, const DirichletExpansion& e);
cplx L_ray_plus_closed(cplx t, const DirichletData& d, const DirichletExpansion& e);

// −e^{−At}∫₀^∞ e^{itλ}(Ġ/G)(−iA−λ)dλ + e^{−At}∫₀^∞ e^{itλ}(Ġ/G)(iA+λ)dλ along the real
// ray, Im t > 0; equals r(I₁+I₂+I₃+I₄) and does not depend on b
cplx G_ray_combined(cplx t, const GFactorParams& p, const QuadratureBudget& b = {});

}  // namespace cusp_theta
