#pragma once

#include <span>

#include "cusp_theta/dirichlet.hpp"
#include "cusp_theta/gamma_factor.hpp"
#include "cusp_theta/spectral_data.hpp"

namespace cusp_theta {

// Value of a truncated series plus a bound for the omitted terms, derived from the
// counting bound N(x) ≤ C·max(x,1)².
struct SeriesValue {
    cplx value;
    double tail_bound = 0;
};

// Σ mult·e^{itλ}, Im t > 0
SeriesValue theta_d(cplx t, const SurfaceData& s);
// Σ mult·e^{−itλ}, Im t < 0
SeriesValue theta_tilde_d(cplx t, const SurfaceData& s);
// Σ m_σ e^{itσ}, Im t > 0
SeriesValue theta_s(cplx t, const SurfaceData& s);
// conj(θ_s(conj t)), Im t < 0
SeriesValue theta_tilde_s(cplx t, const SurfaceData& s);
SeriesValue theta(cplx t, const SurfaceData& s);
SeriesValue theta_tilde(cplx t, const SurfaceData& s);

// Σ over elliptic points of order m of Σ_{k=1}^{m−1} (1/m)·cosh(t/2)/(cosh t − cos(2πk/m))
cplx elliptic_term(cplx t, std::span<const int> orders);
// −(vol/4π)cosh(t/2)/sinh²(t/2) + r/(1−e^{−t}) + elliptic term
cplx elementary_part(cplx t, const SurfaceData& s);
// poles of the elementary part with Im t in [im_lo, im_hi]
std::vector<cplx> elementary_poles(const SurfaceData& s, double im_lo, double im_hi);

// continuation of θ to Im t < 0: −θ̃(t) + elementary part
SeriesValue theta_lower(cplx t, const SurfaceData& s, double exclusion_radius = 1e-3);

// θ̃_s(−t) − θ_s(t) = Σ m_σ(e^{itσ̄} − e^{itσ}), Im t > 0
SeriesValue V_series(cplx t, const SurfaceData& s);

struct VFormulaOptions {
    double A = 1.3;
    double expansion_tol = 1e-12;
    HOptions h{};
    H1Options h1{};
};

// V through the entire part h, the Dirichlet part W and the Cramér part K:
// 2πiV = h + W + rK with h = h₁ + h₂ + r(h₃+h₄+h₅+h₆) + 2πiΣ_{Re σ=0} m_σ(e^{−itσ} − e^{itσ}).
class VFormula {
public:
    explicit VFormula(const SurfaceData& s, VFormulaOptions o = {});

    cplx h(cplx t) const;
    WValue W(cplx t) const;
    // Cramér part, with ln t on t's sheet and ln(−t) = ln t − iπ
    cplx K(const LogPoint& t) const;
    SeriesValue operator()(const LogPoint& t) const;

    const DirichletExpansion& expansion() const { return exp_; }
    const SurfaceData& surface() const { return s_; }
    // the identity needs the functional equation of L; only the zeta-ratio model has it
    bool functional_equation_attested() const { return s_.l_model == LModel::ZetaRatio; }

private:
    SurfaceData s_;
    VFormulaOptions o_;
    GFactorParams g_;
    DirichletExpansion exp_;
    double lnL_;
};

// change of θ per turn: θ on sheet k equals θ on sheet 0 minus k·r·D(t),
// D(t) = e^{t/2}/(e^{t/2}−1)
cplx sheet_difference(cplx t);
// the expression (e^{t/2}−1)/(2 sinh(t/2)) displayed for the same quantity in the source
cplx stated_sheet_difference(cplx t);

// θ on sheet −1 of the upper half-plane: θ + rD
SeriesValue theta_sheet1(cplx t, const SurfaceData& s);
// θ on any sheet: θ or θ_lower on sheet 0, shifted by −k·r·D
SeriesValue theta_continued(const LogPoint& t, const SurfaceData& s);
// Θ = θ + (r/2πi) ln t·D(t), the same on every sheet
SeriesValue theta_modified(const LogPoint& t, const SurfaceData& s);

// Independent continuations assembled from the lower-half-plane formula and V:
//   upper: θ on sheet −1 at u (Im u > 0) = θ(u) + V_series(u) − V(−u) + r·coth(u/2)
//   lower: θ on sheet 1 at t (Im t < 0) = −θ(−t) − V(t on sheet 1) + elementary(−t)
SeriesValue theta_glued_upper(cplx u, const VFormula& vf);
SeriesValue theta_glued_lower(cplx t, const VFormula& vf);

}  // namespace cusp_theta
