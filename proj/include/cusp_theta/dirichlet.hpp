#pragma once

#include <iosfwd>
#include <vector>

#include "cusp_theta/gamma_factor.hpp"
#include "cusp_theta/spectral_data.hpp"

namespace cusp_theta {

// One aggregated term c(p)|p|^{−iλ} of ln L. Tuples with equal norm are merged and
// order_n keeps the shortest contributing tuple length.
struct TupleTerm {
    double log_norm;
    double weight;
    int order_n;
};

struct DirichletExpansion {
    std::vector<TupleTerm> terms;  // sorted by log_norm
    double A = 0;
    // bound for Σ |c(p)||p|^{−A} over the tuples that were left out
    double tail_bound = 0;
    double ratio = 0;           // Σ|c_q|q^{−A} (including DirichletData::tail_mass)
    double min_log_q = 0;       // lower bound for the log norm of any tuple
    double exclusion_radius = 0;
};

// ln L(λ) = Σ_p c(p)|p|^{−iλ}: every tuple with |c(p)||p|^{−A} ≥ tol is kept.
DirichletExpansion expand_log_L(const DirichletData& d, double A, double tol = 1e-12);

// Every tuple with log norm ≤ max_log_norm, no weight cutoff. `complete` is false when
// the data may omit frequencies below e^{max_log_norm}.
struct NormBoundedExpansion {
    std::vector<TupleTerm> terms;
    bool complete = true;
};
NormBoundedExpansion expand_log_L_by_norm(const DirichletData& d, double max_log_norm);

// Σ c(p)|p|^{−iλ} over retained terms
cplx log_L_series(cplx lambda, const DirichletExpansion& e);

struct WValue {
    cplx value;
    double truncation_bound;
};

// W(t) = e^{−At} t Σ c(p)/(|p|^A(t+ln|p|)) + e^{At} t Σ c(p)/(|p|^A(t−ln|p|))
WValue W(cplx t, const DirichletExpansion& e);

void write_expansion_csv(const DirichletExpansion& e, std::ostream& out);

// L and its logarithmic derivative d/dλ ln L for the surface's model
cplx L_value(const SurfaceData& s, cplx lambda);
cplx L_log_derivative(const SurfaceData& s, cplx lambda);
// finite Dirichlet sum, whatever the model
cplx L_dirichlet_sum(const DirichletData& d, cplx lambda);

GFactorParams gfactor_params(const SurfaceData& s, double A);

// h₂(t) = −(e^{−At} + e^{At}) ln L(−iA)
cplx h2(cplx t, const DirichletData& d, double A);
cplx h2(cplx t, const SurfaceData& s, double A);

struct H1Options {
    double detour_radius = 1e-2;
    QuadratureBudget budget{};
};

// points u in (−A, A) where L̇/L(iu) is singular
std::vector<double> h1_singular_points(const SurfaceData& s, double A);

// h₁(t) = −i∫_{−A}^{A} e^{−tu} (L̇/L)(iu) du, passing singular points below the axis
cplx h1(cplx t, const SurfaceData& s, double A, const H1Options& o = {});

// |L(λ)L(−λ)G(λ)G(−λ) − 1|
double functional_equation_residual(const SurfaceData& s, cplx lambda);

}  // namespace cusp_theta
