#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cusp_theta/quadrature.hpp"

namespace cusp_theta {

inline constexpr const char* surface_schema = "cusp-theta/surface/v1";

// Spectral parameter of A = sqrt(Δ − 1/4): real ≥ 0, or i·y with y in (0, 1/2].
struct Eigenvalue {
    cplx lambda;
    int multiplicity = 1;
    bool operator==(const Eigenvalue&) const = default;
};

// m is the coefficient of e^{itσ} in θ_s: positive for poles, negative for zeros.
// On the imaginary axis m may be a half-integer.
struct ScatteringSingularity {
    cplx sigma;
    double m = 1;
    bool on_axis() const { return sigma.real() == 0; }
    bool operator==(const ScatteringSingularity&) const = default;
};

struct Geodesic {
    double length;
    int multiplicity_n = 1;
    bool operator==(const Geodesic&) const = default;
};

struct DirichletTerm {
    double q, c;
    bool operator==(const DirichletTerm&) const = default;
};

// L(λ) = 1 + Σ c_q q^{−iλ}
struct DirichletData {
    std::vector<DirichletTerm> terms;
    double a_min = 1;
    // upper bound for Σ|c_q|q^{−a_min} over terms left out of `terms` (0 if complete)
    double tail_mass = 0;
    bool operator==(const DirichletData&) const = default;

    double ratio(double A) const;  // Σ|c_q|q^{−A} + tail_mass
};

enum class LModel {
    DirichletPolynomial,  // L is exactly the finite sum in `dirichlet`
    ZetaRatio,            // L(λ) = ζ(2iλ)/ζ(1+2iλ); `dirichlet` is its truncated series
};

struct SurfaceData {
    std::string name;
    int num_cusps = 1;
    double volume = 1;
    double a = 0, b = 0;
    std::vector<Eigenvalue> eigenvalues;
    std::vector<ScatteringSingularity> sigmas;
    std::vector<Geodesic> geodesics;
    DirichletData dirichlet;
    // orders of elliptic fixed points (orbifold surfaces only; empty for a manifold)
    std::vector<int> elliptic_orders;
    double counting_constant = 1;
    double im_sigma_bound = 10;
    LModel l_model = LModel::DirichletPolynomial;

    bool operator==(const SurfaceData&) const = default;

    // Throws ValidationError naming the offending field.
    void validate() const;
};

std::string surface_to_json(const SurfaceData& s, int indent = 1);
SurfaceData surface_from_json(std::string_view text);
SurfaceData load_surface(const std::string& path);
void save_surface(const SurfaceData& s, const std::string& path);

// Bundled tables: env CUSP_THETA_DATA, else the directory configured at build time.
std::string bundled_data_dir();

struct BundledSizes {
    int zeros, eigenvalues, geodesics;
};
BundledSizes bundled_sizes(const std::string& dir = "");

// PSL(2,ℤ)\H: r = 1, vol = π/3, a = b = 0, L = ζ(2iλ)/ζ(1+2iλ).
// Σ holds γ_j/2 + i/4 (m = 1) for the first zeta zeros and the on-axis zero at i/2
// (m = −1/2); the spectrum holds the constant eigenfunction λ = i/2 and the first Maass
// spectral parameters.
SurfaceData modular_surface(int num_zeros, int num_eigenvalues, int num_geodesics,
                            const std::string& dir = "");
SurfaceData modular_surface_full(const std::string& dir = "");

// Dirichlet series of ζ(2iλ)/ζ(1+2iλ): q = n², c = φ(n)/n for 2 ≤ n ≤ n_max.
DirichletData modular_dirichlet(int n_max = 3000, double a_min = 1.25);

enum class SizeProfile { Tiny, Small, Medium };
SizeProfile parse_profile(std::string_view name);

// Deterministic in seed; satisfies every invariant but neither the trace formula nor
// the functional equation.
SurfaceData synthetic_surface(std::uint64_t seed, SizeProfile profile);

}  // namespace cusp_theta
