#include "cusp_theta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cusp_theta/errors.hpp"

namespace cusp_theta {

namespace {

// Σ_{x_j > X} e^{−y x_j} ≤ ∫_X^∞ N(x) y e^{−yx} dx with N(x) ≤ C(x² + 1)
double exp_tail(double C, double X, double y) {
    if (!(y > 0)) return std::numeric_limits<double>::infinity();
    X = std::max(X, 0.0);
    return C * std::exp(-y * X) * (X * X + 2 * X / y + 2 / (y * y) + 1);
}

void require_upper(cplx t, const char* what) {
    if (!(t.imag() > 0)) throw DomainError(std::string(what) + ": requires Im t > 0");
}

void require_lower(cplx t, const char* what) {
    if (!(t.imag() < 0)) throw DomainError(std::string(what) + ": requires Im t < 0");
}

double max_real_eigenvalue(const SurfaceData& s) {
    double m = 0;
    for (const auto& e : s.eigenvalues) m = std::max(m, e.lambda.real());
    return m;
}

double max_sigma_real(const SurfaceData& s) {
    double m = 0;
    for (const auto& x : s.sigmas) m = std::max(m, x.sigma.real());
    return m;
}

SeriesValue theta_d_impl(cplx t, const SurfaceData& s) {
    cplx v = 0;
    for (const auto& e : s.eigenvalues) v += static_cast<double>(e.multiplicity) * std::exp(I * t * e.lambda);
    return {v, exp_tail(s.counting_constant, max_real_eigenvalue(s), t.imag())};
}

SeriesValue theta_s_impl(cplx t, const SurfaceData& s) {
    cplx v = 0;
    for (const auto& x : s.sigmas) v += x.m * std::exp(I * t * x.sigma);
    // |e^{itσ}| ≤ e^{|Re t|·Im σ} e^{−Im t·Re σ}
    const double growth = std::exp(std::abs(t.real()) * s.im_sigma_bound);
    return {v, growth * exp_tail(s.counting_constant, max_sigma_real(s), t.imag())};
}

cplx coth_half(cplx t) { return (1.0 + std::exp(-t)) / (1.0 - std::exp(-t)); }

}  // namespace

SeriesValue theta_d(cplx t, const SurfaceData& s) {
    require_upper(t, "theta_d");
    return theta_d_impl(t, s);
}

SeriesValue theta_tilde_d(cplx t, const SurfaceData& s) {
    require_lower(t, "theta_tilde_d");
    return theta_d_impl(-t, s);
}

SeriesValue theta_s(cplx t, const SurfaceData& s) {
    require_upper(t, "theta_s");
    return theta_s_impl(t, s);
}

SeriesValue theta_tilde_s(cplx t, const SurfaceData& s) {
    require_lower(t, "theta_tilde_s");
    const SeriesValue v = theta_s_impl(std::conj(t), s);
    return {std::conj(v.value), v.tail_bound};
}

SeriesValue theta(cplx t, const SurfaceData& s) {
    const auto d = theta_d(t, s);
    const auto x = theta_s(t, s);
    return {d.value + x.value, d.tail_bound + x.tail_bound};
}

SeriesValue theta_tilde(cplx t, const SurfaceData& s) {
    const auto d = theta_tilde_d(t, s);
    const auto x = theta_tilde_s(t, s);
    return {d.value + x.value, d.tail_bound + x.tail_bound};
}

cplx elliptic_term(cplx t, std::span<const int> orders) {
    cplx v = 0;
    const cplx ch = std::cosh(t / 2.0), c = std::cosh(t);
    for (int m : orders)
        for (int k = 1; k < m; ++k) v += ch / (static_cast<double>(m) * (c - std::cos(2 * pi * k / m)));
    return v;
}

cplx elementary_part(cplx t, const SurfaceData& s) {
    const cplx sh = std::sinh(t / 2.0);
    return -(s.volume / (4 * pi)) * std::cosh(t / 2.0) / (sh * sh) +
           static_cast<double>(s.num_cusps) / (1.0 - std::exp(-t)) + elliptic_term(t, s.elliptic_orders);
}

std::vector<cplx> elementary_poles(const SurfaceData& s, double im_lo, double im_hi) {
    std::vector<cplx> out;
    auto add = [&](double y) {
        if (y >= im_lo && y <= im_hi) out.emplace_back(0, y);
    };
    const int kmax = static_cast<int>(std::ceil(std::max(std::abs(im_lo), std::abs(im_hi)) / (2 * pi))) + 1;
    for (int k = -kmax; k <= kmax; ++k) {
        if (k != 0) add(2 * pi * k);
        // cosh t = cos(2πj/m) at t = ±2πij/m + 2πin
        for (int m : s.elliptic_orders)
            for (int j = 1; j < m; ++j) add(2 * pi * (k + static_cast<double>(j) / m));
    }
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) { return a.imag() < b.imag(); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](cplx a, cplx b) { return std::abs(a - b) < 1e-12; }),
              out.end());
    return out;
}

SeriesValue theta_lower(cplx t, const SurfaceData& s, double exclusion_radius) {
    require_lower(t, "theta_lower");
    for (cplx p : elementary_poles(s, t.imag() - 1, t.imag() + 1))
        if (std::abs(t - p) < exclusion_radius) {
            std::ostringstream os;
            os << "theta_lower: t = " << t << " lies within the exclusion radius of the pole at " << p;
            throw DomainError(os.str());
        }
    const auto tt = theta_tilde(t, s);
    return {-tt.value + elementary_part(t, s), tt.tail_bound};
}

SeriesValue V_series(cplx t, const SurfaceData& s) {
    require_upper(t, "V_series");
    cplx v = 0;
    for (const auto& x : s.sigmas) v += x.m * (std::exp(I * t * std::conj(x.sigma)) - std::exp(I * t * x.sigma));
    const double growth = std::exp(std::abs(t.real()) * s.im_sigma_bound);
    return {v, 2 * growth * exp_tail(s.counting_constant, max_sigma_real(s), t.imag())};
}

VFormula::VFormula(const SurfaceData& s, VFormulaOptions o)
    : s_(s), o_(o), g_(gfactor_params(s, o.A)) {
    g_.validate();
    exp_ = expand_log_L(s_.dirichlet, o_.A, o_.expansion_tol);
    const double L = L_value(s_, cplx(0, -o_.A)).real();
    if (!(L > 0)) throw NumericalError("VFormula: L(−iA) must be positive");
    lnL_ = std::log(L);
}

cplx VFormula::h(cplx t) const {
    const double A = o_.A;
    const cplx part2 = -(std::exp(-A * t) + std::exp(A * t)) * lnL_;
    cplx v = h1(t, s_, A, o_.h1) + part2;
    if (s_.num_cusps != 0)
        v += static_cast<double>(s_.num_cusps) *
             (h3(t, g_, o_.h) + h4(t, g_, o_.h) + h5(t, g_, o_.h) + h6(t, g_, o_.h));
    for (const auto& x : s_.sigmas)
        if (x.on_axis()) v += 2 * pi * I * x.m * (std::exp(-I * t * x.sigma) - std::exp(I * t * x.sigma));
    return v;
}

WValue VFormula::W(cplx t) const { return cusp_theta::W(t, exp_); }

cplx VFormula::K(const LogPoint& lp) const {
    const cplx t = lp.value;
    const LogPoint mp = lp.opposite();
    const cplx Mt = cramer_M_meromorphic(t, 1e-3, o_.h.budget);
    const cplx Mmt = cramer_M_meromorphic(mp.value, 1e-3, o_.h.budget);
    const cplx e1 = std::exp(t), eh = std::exp(t / 2.0), em1 = std::exp(-t), emh = std::exp(-t / 2.0);
    return (-em1 + emh + e1 - eh) * euler_gamma / t + (em1 - emh) * Mt + (e1 - eh) * Mmt +
           (eh - 1.0) * lp.log() / (e1 - 1.0) + (emh - 1.0) * mp.log() / (em1 - 1.0);
}

SeriesValue VFormula::operator()(const LogPoint& t) const {
    const WValue w = W(t.value);
    cplx total = h(t.value) + w.value;
    if (s_.num_cusps != 0) total += static_cast<double>(s_.num_cusps) * K(t);
    return {total / (2 * pi * I), w.truncation_bound / (2 * pi)};
}

cplx sheet_difference(cplx t) {
    const cplx e = std::exp(t / 2.0);
    return e / (e - 1.0);
}

cplx stated_sheet_difference(cplx t) { return (std::exp(t / 2.0) - 1.0) / (2.0 * std::sinh(t / 2.0)); }

SeriesValue theta_sheet1(cplx t, const SurfaceData& s) {
    auto v = theta(t, s);
    v.value += static_cast<double>(s.num_cusps) * sheet_difference(t);
    return v;
}

SeriesValue theta_continued(const LogPoint& t, const SurfaceData& s) {
    SeriesValue v;
    if (t.value.imag() > 0) v = theta(t.value, s);
    else if (t.value.imag() < 0) v = theta_lower(t.value, s);
    else throw DomainError("theta_continued: t on the real axis");
    if (t.sheet != 0) v.value -= static_cast<double>(t.sheet) * s.num_cusps * sheet_difference(t.value);
    return v;
}

SeriesValue theta_modified(const LogPoint& t, const SurfaceData& s) {
    SeriesValue v = theta_continued(t, s);
    v.value += static_cast<double>(s.num_cusps) / (2 * pi * I) * t.log() * sheet_difference(t.value);
    return v;
}

SeriesValue theta_glued_upper(cplx u, const VFormula& vf) {
    require_upper(u, "theta_glued_upper");
    const SurfaceData& s = vf.surface();
    const auto th = theta(u, s);
    const auto vs = V_series(u, s);
    const auto vf_ = vf(LogPoint(-u, 0));
    return {th.value + vs.value - vf_.value + static_cast<double>(s.num_cusps) * coth_half(u),
            th.tail_bound + vs.tail_bound + vf_.tail_bound};
}

SeriesValue theta_glued_lower(cplx t, const VFormula& vf) {
    require_lower(t, "theta_glued_lower");
    const SurfaceData& s = vf.surface();
    const auto th = theta(-t, s);
    const auto v = vf(LogPoint(t, 1));
    return {-th.value - v.value + elementary_part(-t, s), th.tail_bound + v.tail_bound};
}

}  // namespace cusp_theta
