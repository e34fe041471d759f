#pragma once

#include "cusp_theta/quadrature.hpp"

namespace cusp_theta {

inline constexpr double euler_gamma = 0.57721566490153286061;

// Principal logarithm with the cut on (−∞, 0] attached to the upper side, so that
// a negative real argument with a negative-zero imaginary part still gets arg = π.
cplx principal_log(cplx z);

// A point on the Riemann surface of the logarithm: log t = Log t + 2πik.
struct LogPoint {
    cplx value;
    int sheet = 0;

    LogPoint(cplx v, int k = 0);
    cplx log() const;
    // −t with ln(−t) = ln t − iπ
    LogPoint opposite() const;
};

// Some branch of log Γ(z); exact principal branch for Re z > 0.
cplx log_gamma(cplx z);
cplx digamma(cplx z);

struct ZetaPair {
    cplx value, derivative;
};
ZetaPair zeta_pair(cplx s);
inline cplx zeta(cplx s) { return zeta_pair(s).value; }

// F(t) = (1/t)∫₀^∞ λ/(e^λ−1) dλ/(λ+t), t ∉ (−∞, 0]
cplx cramer_F(cplx t, const QuadratureBudget& budget = {});

// F(t) − Log t/(e^{−t}−1) continued across the cut: single valued, meromorphic with
// simple poles on 2πi(ℤ∖{0}). On the cut the value from above is returned.
cplx cramer_M_meromorphic(cplx t, double exclusion_radius = 1e-3,
                          const QuadratureBudget& budget = {});

// M(t) = F(t) − log t/(e^{−t}−1) with log t taken on t's sheet.
cplx cramer_M(const LogPoint& t, double exclusion_radius = 1e-3,
              const QuadratureBudget& budget = {});

}  // namespace cusp_theta
