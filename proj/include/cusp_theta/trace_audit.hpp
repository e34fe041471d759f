#pragma once

#include <string>
#include <vector>

#include "cusp_theta/spectral_data.hpp"

namespace cusp_theta {

// Linear combination of bumps a·exp(−1/(1−x²)), x = (t−center)/width. Support must stay
// clear of 0.
class TestFunction {
public:
    struct Bump {
        double center, width, coefficient;
    };

    TestFunction(double center, double width, double coefficient = 1.0, int nodes = 2000);

    TestFunction operator+(const TestFunction& o) const;
    TestFunction operator*(double a) const;

    double operator()(double t) const;
    double derivative(double t) const;
    // ∫ e^{iλt} ψ(t) dt
    cplx hat(cplx lambda) const;
    // ∫ f(t) ψ(t) dt by Gauss–Legendre on each bump
    cplx pair(const std::function<cplx(double)>& f) const;

    double lo() const;
    double hi() const;
    bool positive_support() const { return lo() > 0; }
    bool negative_support() const { return hi() < 0; }

    // ‖ψ^{(k)}‖₁ bounds, k = 0..max_derivative
    double derivative_norm(int k) const;
    static constexpr int max_derivative = 40;
    // bound for |ψ̂(λ)| with |λ| = modulus and Im λ = im
    double hat_bound(double modulus, double im = 0) const;
    // bound for Σ_{x_j > X} |ψ̂(x_j)| when #{x_j ≤ x} ≤ C(x² + 1)
    double counting_tail(double C, double X, double im = 0) const;

    const std::vector<Bump>& bumps() const { return bumps_; }

private:
    TestFunction() = default;
    void compute_norms();

    std::vector<Bump> bumps_;
    int nodes_ = 2000;
    std::vector<double> norms_;
};

cplx fourier_hat(const TestFunction& psi, cplx lambda);

// Σ l_c/(2n_c sinh(l_c/2)) ψ(l_c)
double c_hyperbolic(const TestFunction& psi, const SurfaceData& s);
// −(vol/4π)∫ φ'(t)/sinh(t/2) dt for φ(t) = ψ(t) + ψ(−t)
double c_identity(const TestFunction& psi, const SurfaceData& s);
// ⟨E, ψ⟩ for the elliptic density
double c_elliptic(const TestFunction& psi, const SurfaceData& s);

struct GammaTermCheck {
    cplx integral;      // −(1/2π)∫ ψ̂(λ) ψ(1+iλ) dλ
    cplx residue_sum;   // Σ_{k≥1} ψ̂(ik)
    cplx pairing;       // ⟨e^{−t}/(1−e^{−t}), ψ⟩
    cplx reflected;     // −(1/2π)∫ ψ̂(−λ) ψ(1+iλ) dλ, expected 0
    double residual;    // max pairwise discrepancy of the first three, and |reflected|
};
// r = 1; every expression is linear in r
GammaTermCheck gamma_term_check(const TestFunction& psi, const QuadratureBudget& b = {});

// Ṡ/S on the real line, S = G·L
cplx scattering_log_derivative(const SurfaceData& s, double lambda);

struct ScatteringCheck {
    cplx lhs;  // (i/4π)∫ φ̂ Ṡ/S dλ
    cplx rhs;  // Σ m_σ(ψ̂(σ) + ψ̂(−σ̄))
    double residual;
    double tail_bound;
};
ScatteringCheck scattering_term_check(const TestFunction& psi, const SurfaceData& s,
                                      const QuadratureBudget& b = {});

struct EpsRow {
    double eps;
    cplx value;
};

struct AuditTerm {
    std::string name;
    cplx value;
};

struct AuditReport {
    std::string kind;
    double center = 0, width = 0;
    std::vector<EpsRow> eps_table;
    cplx lhs_extrapolated;  // Richardson over the ε ladder
    cplx lhs_exact;         // ε = 0 pairing of the finite lists
    std::vector<AuditTerm> rhs_terms;
    cplx rhs;
    double residual = 0;           // |lhs_exact − rhs|
    double relative_residual = 0;  // residual / |rhs|
    double extrapolation_gap = 0;  // |lhs_extrapolated − lhs_exact|
    double tail_bound = 0;         // bound for omitted spectral data
    std::vector<std::string> notes;
};

// ⟨θ(t+i0) + θ̃(t−i0), ψ⟩ against the distribution identity on (0,∞)
AuditReport audit_positive(const TestFunction& psi, const SurfaceData& s);
// same on (−∞,0), including the Dirichlet deltas
AuditReport audit_negative(const TestFunction& psi, const SurfaceData& s);
// Σ φ̂(λ_j) against the full trace formula with φ = ψ(t) + ψ(−t)
AuditReport audit_trace_formula(const TestFunction& psi, const SurfaceData& s,
                                const QuadratureBudget& b = {});

std::string audit_to_json(const AuditReport& r, int indent = 1);

}  // namespace cusp_theta
