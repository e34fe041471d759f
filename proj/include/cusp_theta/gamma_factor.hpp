#pragma once

#include "cusp_theta/quadrature.hpp"
#include "cusp_theta/specfun.hpp"

namespace cusp_theta {

struct GFactorParams {
    int r = 1;
    double a = 0, b = 0;
    double A = 1.3;  // strip height; must avoid integers and half-integers

    void validate() const;
};

// G(λ) = e^{a+bλ}[√π Γ(iλ)/Γ(1/2+iλ)]^r
cplx G(const GFactorParams& p, cplx lambda);
// Ġ/G(λ) = b + ir(ψ(iλ) − ψ(1/2+iλ))
cplx Gdot_over_G(const GFactorParams& p, cplx lambda);

struct HOptions {
    double detour_radius = 1e-2;
    QuadratureBudget budget{};
};

// Closed forms of the four ray integrals
//   I₁ = −i e^{−At}∫₀^∞ e^{itλ} ψ(A−iλ) dλ          holomorphic off (−∞, 0]
//   I₂ =  i e^{−At}∫₀^∞ e^{itλ} ψ(1/2+A−iλ) dλ      holomorphic off (−∞, 0]
//   I₃ =  i e^{−At}∫₀^∞ e^{itλ} ψ(−A+iλ) dλ         holomorphic off [0, ∞)
//   I₄ = −i e^{−At}∫₀^∞ e^{itλ} ψ(−(A−1/2)+iλ) dλ   holomorphic off [0, ∞)
// ln t is taken on t's sheet, ln(−t) = ln t − iπ and M is the single-valued
// meromorphic Cramér function, so other sheets give the analytic continuation.
// The principal branch of I₁, I₂ is sheet 0; that of I₃, I₄ is sheet 0 for Im t ≥ 0
// and sheet 1 for Im t < 0.
cplx I1(const LogPoint& t, const GFactorParams& p, const HOptions& o = {});
cplx I2(const LogPoint& t, const GFactorParams& p, const HOptions& o = {});
cplx I3(const LogPoint& t, const GFactorParams& p, const HOptions& o = {});
cplx I4(const LogPoint& t, const GFactorParams& p, const HOptions& o = {});

// Entire correction integrals; h₅ and h₆ pass the poles of ψ above the real axis.
cplx h3(cplx t, const GFactorParams& p, const HOptions& o = {});
cplx h4(cplx t, const GFactorParams& p, const HOptions& o = {});
cplx h5(cplx t, const GFactorParams& p, const HOptions& o = {});
cplx h6(cplx t, const GFactorParams& p, const HOptions& o = {});

}  // namespace cusp_theta
