#include "cusp_theta/trace_audit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include <json.hpp>

#include "cusp_theta/dirichlet.hpp"
#include "cusp_theta/errors.hpp"
#include "cusp_theta/gamma_factor.hpp"
#include "cusp_theta/theta.hpp"

namespace cusp_theta {

namespace {

constexpr std::array<double, 3> eps_ladder{0.1, 0.05, 0.025};

double bump(double x) { return std::abs(x) < 1 ? std::exp(-1 / (1 - x * x)) : 0.0; }

double bump_derivative(double x) {
    if (std::abs(x) >= 1) return 0;
    const double u = 1 - x * x;
    return bump(x) * (-2 * x / (u * u));
}

// ‖φ^{(k)}‖₁ on (−1, 1) for the unit bump, from Taylor coefficients at the nodes
std::vector<double> unit_derivative_norms(int nodes, int kmax) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<double>> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find({nodes, kmax}); it != cache.end()) return it->second;

    const GaussRule& g = gauss_legendre(nodes);
    std::vector<long double> fact(kmax + 1, 1);
    for (int k = 1; k <= kmax; ++k) fact[k] = fact[k - 1] * k;
    std::vector<double> norms(kmax + 1, 0.0);
    std::vector<long double> v(kmax + 1), gc(kmax + 1), f(kmax + 1);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const long double x = g.nodes[i];
        const long double u0 = 1 - x * x, u1 = -2 * x, u2 = -1;
        // the node's contribution to every norm up to kmax is below e^{−700}·700^{2·kmax}
        if (u0 < 1.0L / 700) continue;
        v[0] = 1 / u0;
        for (int n = 1; n <= kmax; ++n)
            v[n] = -(u1 * v[n - 1] + (n >= 2 ? u2 * v[n - 2] : 0)) / u0;
        for (int n = 0; n <= kmax; ++n) gc[n] = -v[n];
        f[0] = std::exp(gc[0]);
        for (int n = 1; n <= kmax; ++n) {
            long double acc = 0;
            for (int j = 1; j <= n; ++j) acc += j * gc[j] * f[n - j];
            f[n] = acc / n;
        }
        for (int k = 0; k <= kmax; ++k)
            norms[k] += g.weights[i] * static_cast<double>(std::abs(fact[k] * f[k]));
    }
    // quadrature of |φ^{(k)}| is only accurate to a few digits
    for (auto& n : norms) n *= 1.05;
    cache[{nodes, kmax}] = norms;
    return norms;
}

cplx to_c(const nlohmann::json& j) { return {j[0].get<double>(), j[1].get<double>()}; }
nlohmann::json from_c(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

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

// Λ with ∫_Λ^∞ |ψ̂(λ)|·(ln λ + 1) dλ < target
double hat_cutoff(const TestFunction& psi, double target) {
    double L = 10;
    for (int it = 0; it < 60; ++it, L *= 1.25) {
        double best = std::numeric_limits<double>::infinity();
        for (int k = 2; k <= TestFunction::max_derivative; ++k)
            best = std::min(best, psi.derivative_norm(k) * std::pow(L, 1 - k) / (k - 1) * (std::log(L) + 2));
        if (best < target) return L;
    }
    return L;
}

struct SpectralPairing {
    std::vector<cplx> eig_plus, eig_minus, sig;
};

SpectralPairing spectral_pairing(const TestFunction& psi, const SurfaceData& s) {
    SpectralPairing p;
    for (const auto& e : s.eigenvalues) {
        p.eig_plus.push_back(psi.hat(e.lambda));
        p.eig_minus.push_back(psi.hat(-e.lambda));
    }
    for (const auto& x : s.sigmas) p.sig.push_back(psi.hat(x.sigma));
    return p;
}

cplx lhs_at(const SpectralPairing& p, const SurfaceData& s, double eps, bool with_sigmas) {
    cplx v = 0;
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
        const auto& e = s.eigenvalues[j];
        v += static_cast<double>(e.multiplicity) * std::exp(-eps * e.lambda) * (p.eig_plus[j] + p.eig_minus[j]);
    }
    if (with_sigmas)
        for (std::size_t j = 0; j < s.sigmas.size(); ++j) {
            const cplx z = s.sigmas[j].m * std::exp(-eps * s.sigmas[j].sigma) * p.sig[j];
            v += z + std::conj(z);
        }
    return v;
}

void fill_lhs(AuditReport& r, const TestFunction& psi, const SurfaceData& s, bool with_sigmas) {
    const SpectralPairing p = spectral_pairing(psi, s);
    for (double e : eps_ladder) r.eps_table.push_back({e, lhs_at(p, s, e, with_sigmas)});
    const cplx d0 = r.eps_table[0].value, d1 = r.eps_table[1].value, d2 = r.eps_table[2].value;
    r.lhs_extrapolated = (d0 - 6.0 * d1 + 8.0 * d2) / 3.0;
    r.lhs_exact = lhs_at(p, s, 0, with_sigmas);
    r.extrapolation_gap = std::abs(r.lhs_extrapolated - r.lhs_exact);
    r.tail_bound = 2 * psi.counting_tail(s.counting_constant, max_real_eigenvalue(s));
    if (with_sigmas)
        r.tail_bound += 2 * psi.counting_tail(s.counting_constant, max_sigma_real(s), s.im_sigma_bound);
}

void finish(AuditReport& r) {
    r.rhs = 0;
    for (const auto& t : r.rhs_terms) r.rhs += t.value;
    r.residual = std::abs(r.lhs_exact - r.rhs);
    r.relative_residual = r.residual / std::max(std::abs(r.rhs), 1e-300);
}

cplx identity_density(double t, const SurfaceData& s) {
    const double sh = std::sinh(t / 2);
    return -(s.volume / (4 * pi)) * std::cosh(t / 2) / (sh * sh);
}

}  // namespace

TestFunction::TestFunction(double center, double width, double coefficient, int nodes)
    : bumps_{{center, width, coefficient}}, nodes_(nodes) {
    if (!(width > 0)) throw ValidationError("TestFunction.width: must be positive");
    if (!(center - width > 0 || center + width < 0))
        throw ValidationError("TestFunction: support must not contain 0");
    if (nodes < 16) throw ValidationError("TestFunction.nodes: too few");
    compute_norms();
}

void TestFunction::compute_norms() {
    const auto unit = unit_derivative_norms(nodes_, max_derivative);
    norms_.assign(max_derivative + 1, 0.0);
    for (const auto& b : bumps_)
        for (int k = 0; k <= max_derivative; ++k)
            norms_[k] += std::abs(b.coefficient) * std::pow(b.width, 1 - k) * unit[k];
}

TestFunction TestFunction::operator+(const TestFunction& o) const {
    TestFunction r;
    r.nodes_ = std::max(nodes_, o.nodes_);
    r.bumps_ = bumps_;
    r.bumps_.insert(r.bumps_.end(), o.bumps_.begin(), o.bumps_.end());
    if (!(r.lo() > 0 || r.hi() < 0)) throw ValidationError("TestFunction: support must not contain 0");
    r.compute_norms();
    return r;
}

TestFunction TestFunction::operator*(double a) const {
    TestFunction r = *this;
    for (auto& b : r.bumps_) b.coefficient *= a;
    r.compute_norms();
    return r;
}

double TestFunction::operator()(double t) const {
    double v = 0;
    for (const auto& b : bumps_) v += b.coefficient * bump((t - b.center) / b.width);
    return v;
}

double TestFunction::derivative(double t) const {
    double v = 0;
    for (const auto& b : bumps_) v += b.coefficient * bump_derivative((t - b.center) / b.width) / b.width;
    return v;
}

cplx TestFunction::pair(const std::function<cplx(double)>& f) const {
    const GaussRule& g = gauss_legendre(nodes_);
    cplx v = 0;
    for (const auto& b : bumps_) {
        cplx part = 0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            const double w = g.weights[i] * bump(g.nodes[i]);
            if (w != 0) part += w * f(b.center + b.width * g.nodes[i]);
        }
        v += b.coefficient * b.width * part;
    }
    return v;
}

cplx TestFunction::hat(cplx lambda) const {
    return pair([&](double t) { return std::exp(I * lambda * t); });
}

double TestFunction::lo() const {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& b : bumps_) v = std::min(v, b.center - b.width);
    return v;
}

double TestFunction::hi() const {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& b : bumps_) v = std::max(v, b.center + b.width);
    return v;
}

double TestFunction::derivative_norm(int k) const { return norms_.at(k); }

double TestFunction::hat_bound(double modulus, double im) const {
    const double growth = std::exp(std::max(-lo() * im, -hi() * im));
    double best = norms_[0];
    if (modulus > 0)
        for (int k = 1; k <= max_derivative; ++k) best = std::min(best, norms_[k] * std::pow(modulus, -k));
    return growth * best;
}

double TestFunction::counting_tail(double C, double X, double im) const {
    const double growth = std::exp(std::max(-lo() * im, -hi() * im));
    X = std::max(X, 1.0);
    double best = std::numeric_limits<double>::infinity();
    for (int k = 3; k <= max_derivative; ++k)
        best = std::min(best, norms_[k] * (k * std::pow(X, 2 - k) / (k - 2) + std::pow(X, -k)));
    return C * growth * best;
}

cplx fourier_hat(const TestFunction& psi, cplx lambda) { return psi.hat(lambda); }

double c_hyperbolic(const TestFunction& psi, const SurfaceData& s) {
    double v = 0;
    for (const auto& g : s.geodesics) {
        const double w = g.length / (2 * g.multiplicity_n * std::sinh(g.length / 2));
        v += w * (psi(g.length) + psi(-g.length));
    }
    return v;
}

double c_identity(const TestFunction& psi, const SurfaceData& s) {
    const GaussRule& g = gauss_legendre(2000);
    double integral = 0;
    for (const auto& b : psi.bumps()) {
        double part = 0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            const double t = b.center + b.width * g.nodes[i];
            // ψ'(t) dt = φ'(x) dx
            part += g.weights[i] * bump_derivative(g.nodes[i]) / std::sinh(t / 2);
        }
        integral += b.coefficient * part;
    }
    return -(s.volume / (4 * pi)) * 2 * integral;
}

double c_elliptic(const TestFunction& psi, const SurfaceData& s) {
    if (s.elliptic_orders.empty()) return 0;
    return psi.pair([&](double t) { return elliptic_term(t, s.elliptic_orders); }).real();
}

GammaTermCheck gamma_term_check(const TestFunction& psi, const QuadratureBudget& budget) {
    if (!psi.positive_support()) throw ValidationError("gamma_term_check: ψ must be supported in (0,∞)");
    QuadratureBudget b = budget;
    b.max_subdivisions = std::max(b.max_subdivisions, 40000);
    b.abs_tol = std::max(b.abs_tol, 1e-10);
    const double L = hat_cutoff(psi, 1e-11);

    GammaTermCheck c;
    auto f = [&](double l) { return psi.hat(l) * digamma(cplx(1, l)); };
    auto g = [&](double l) { return psi.hat(-l) * digamma(cplx(1, l)); };
    c.integral = -integrate_real(f, -L, L, b).value / (2 * pi);
    c.reflected = -integrate_real(g, -L, L, b).value / (2 * pi);

    c.residue_sum = 0;
    for (int k = 1; k < 100000; ++k) {
        const cplx term = psi.hat(cplx(0, k));
        c.residue_sum += term;
        if (psi.derivative_norm(0) * std::exp(-k * psi.lo()) < 1e-18) break;
    }
    c.pairing = psi.pair([](double t) { return std::exp(-t) / (1 - std::exp(-t)); });
    c.residual = std::max({std::abs(c.integral - c.residue_sum), std::abs(c.integral - c.pairing),
                           std::abs(c.residue_sum - c.pairing), std::abs(c.reflected)});
    return c;
}

cplx scattering_log_derivative(const SurfaceData& s, double lambda) {
    GFactorParams p;
    p.r = s.num_cusps;
    p.a = s.a;
    p.b = s.b;
    return Gdot_over_G(p, lambda) + L_log_derivative(s, lambda);
}

ScatteringCheck scattering_term_check(const TestFunction& psi, const SurfaceData& s,
                                      const QuadratureBudget& budget) {
    QuadratureBudget b = budget;
    b.max_subdivisions = std::max(b.max_subdivisions, 40000);
    b.abs_tol = std::max(b.abs_tol, 1e-10);
    const double L = hat_cutoff(psi, 1e-11);
    // Ṡ/S is even on the real line and regular at 0, where its two parts are singular
    auto f = [&](double l) {
        return (psi.hat(l) + psi.hat(-l)) * scattering_log_derivative(s, std::max(l, 1e-6));
    };
    const QuadResult q = integrate_real(f, 0, L, b);

    ScatteringCheck c;
    c.lhs = I / (4 * pi) * 2.0 * q.value;
    c.rhs = 0;
    for (const auto& x : s.sigmas) {
        const cplx h = psi.hat(x.sigma);
        c.rhs += x.m * (h + std::conj(h));
    }
    c.residual = std::abs(c.lhs - c.rhs);
    c.tail_bound = 2 * psi.counting_tail(s.counting_constant, max_sigma_real(s), s.im_sigma_bound) +
                   q.error / (2 * pi) + 1e-11;
    return c;
}

AuditReport audit_positive(const TestFunction& psi, const SurfaceData& s) {
    if (!psi.positive_support()) throw ValidationError("audit_positive: ψ must be supported in (0,∞)");
    AuditReport r;
    r.kind = "positive";
    r.center = psi.bumps().front().center;
    r.width = psi.bumps().front().width;
    fill_lhs(r, psi, s, true);
    const double rr = s.num_cusps;
    r.rhs_terms.push_back({"identity", psi.pair([&](double t) { return identity_density(t, s); })});
    r.rhs_terms.push_back({"cusp", psi.pair([&](double t) { return cplx(rr / (1 - std::exp(-t))); })});
    if (!s.elliptic_orders.empty()) r.rhs_terms.push_back({"elliptic", c_elliptic(psi, s)});
    r.rhs_terms.push_back({"hyperbolic", c_hyperbolic(psi, s)});
    finish(r);
    return r;
}

AuditReport audit_negative(const TestFunction& psi, const SurfaceData& s) {
    if (!psi.negative_support()) throw ValidationError("audit_negative: ψ must be supported in (−∞,0)");
    AuditReport r;
    r.kind = "negative";
    r.center = psi.bumps().front().center;
    r.width = psi.bumps().front().width;
    fill_lhs(r, psi, s, true);
    const double rr = s.num_cusps;
    r.rhs_terms.push_back({"identity", psi.pair([&](double t) { return identity_density(t, s); })});
    r.rhs_terms.push_back(
        {"cusp", psi.pair([&](double t) { return cplx(-rr * std::exp(t / 2) / (std::exp(t) - 1)); })});
    if (!s.elliptic_orders.empty()) r.rhs_terms.push_back({"elliptic", c_elliptic(psi, s)});
    r.rhs_terms.push_back({"hyperbolic", c_hyperbolic(psi, s)});
    const auto e = expand_log_L_by_norm(s.dirichlet, -psi.lo());
    if (!e.complete) r.notes.push_back("Dirichlet data may omit frequencies inside the support");
    double dir = 0;
    for (const auto& t : e.terms) dir -= t.log_norm * t.weight * psi(-t.log_norm);
    r.rhs_terms.push_back({"dirichlet", dir});
    finish(r);
    return r;
}

AuditReport audit_trace_formula(const TestFunction& psi, const SurfaceData& s, const QuadratureBudget& b) {
    if (!psi.positive_support()) throw ValidationError("audit_trace_formula: ψ must be supported in (0,∞)");
    AuditReport r;
    r.kind = "trace_formula";
    r.center = psi.bumps().front().center;
    r.width = psi.bumps().front().width;
    fill_lhs(r, psi, s, false);
    const double rr = s.num_cusps;
    const auto gamma = gamma_term_check(psi, b);
    const auto scat = scattering_term_check(psi, s, b);
    r.rhs_terms.push_back({"identity", c_identity(psi, s)});
    r.rhs_terms.push_back({"hyperbolic", c_hyperbolic(psi, s)});
    // φ(0) = 0 because ψ vanishes near 0
    r.rhs_terms.push_back({"log2", -rr * std::log(2.0) * (psi(0) + psi(-0.0))});
    r.rhs_terms.push_back({"half_phi_hat_0", rr / 2 * 2.0 * psi.hat(0)});
    r.rhs_terms.push_back({"gamma", rr * (gamma.integral + gamma.reflected)});
    r.rhs_terms.push_back({"scattering", -scat.lhs});
    if (!s.elliptic_orders.empty()) r.rhs_terms.push_back({"elliptic", c_elliptic(psi, s)});
    r.tail_bound += scat.tail_bound;
    finish(r);
    return r;
}

std::string audit_to_json(const AuditReport& r, int indent) {
    nlohmann::json j;
    j["schema"] = "cusp-theta/audit/v1";
    j["kind"] = r.kind;
    j["center"] = r.center;
    j["width"] = r.width;
    auto& eps = j["eps_table"] = nlohmann::json::array();
    for (const auto& e : r.eps_table) eps.push_back({{"eps", e.eps}, {"value", from_c(e.value)}});
    j["lhs_extrapolated"] = from_c(r.lhs_extrapolated);
    j["lhs_exact"] = from_c(r.lhs_exact);
    auto& terms = j["rhs_terms"] = nlohmann::json::object();
    for (const auto& t : r.rhs_terms) terms[t.name] = from_c(t.value);
    j["rhs"] = from_c(r.rhs);
    j["residual"] = r.residual;
    j["relative_residual"] = r.relative_residual;
    j["extrapolation_gap"] = r.extrapolation_gap;
    j["tail_bound"] = r.tail_bound;
    j["notes"] = r.notes;
    (void)to_c;
    return j.dump(indent);
}

}  // namespace cusp_theta
