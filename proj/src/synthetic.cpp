#include <random>

#include "cusp_theta/errors.hpp"
#include "cusp_theta/spectral_data.hpp"

namespace cusp_theta {

namespace {

// Uniform doubles taken straight from the engine bits, so the stream does not depend
// on the standard library's distribution implementations.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : eng_(seed) {}
    double operator()(double lo = 0, double hi = 1) {
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 eng_;
};

struct Sizes {
    int eigen, sigma, geo, dirichlet;
};

Sizes sizes(SizeProfile p) {
    switch (p) {
        case SizeProfile::Tiny: return {6, 6, 6, 3};
        case SizeProfile::Small: return {40, 40, 40, 10};
        case SizeProfile::Medium: return {400, 400, 400, 40};
    }
    return {0, 0, 0, 0};
}

}  // namespace

SizeProfile parse_profile(std::string_view name) {
    if (name == "tiny") return SizeProfile::Tiny;
    if (name == "small") return SizeProfile::Small;
    if (name == "medium") return SizeProfile::Medium;
    throw ValidationError("profile: unknown size profile '" + std::string(name) + "'");
}

SurfaceData synthetic_surface(std::uint64_t seed, SizeProfile profile) {
    Uniform u(seed);
    const Sizes n = sizes(profile);
    SurfaceData s;
    s.name = "synthetic-" + std::to_string(seed);
    s.num_cusps = u() < 0.3 ? 2 : 1;
    s.volume = u(1, 10);
    s.a = u(-1, 1);
    s.b = u(-1, 1);
    s.counting_constant = 1;
    s.im_sigma_bound = 2;

    int k0 = 0;
    if (u() < 0.5) {
        s.eigenvalues.push_back({cplx(0, u(0.05, 0.5)), 1});
        k0 = 1;
    }
    for (int k = k0; k < n.eigen; ++k)
        s.eigenvalues.push_back({1 + 3 * std::sqrt(static_cast<double>(k + 1)) + u(), u() < 0.1 ? 2 : 1});

    int j0 = 0;
    if (u() < 0.5) {
        s.sigmas.push_back({cplx(0, u(0.05, 0.5)), u() < 0.5 ? 1.0 : -0.5});
        j0 = 1;
    }
    for (int j = j0; j < n.sigma; ++j)
        s.sigmas.push_back({cplx(2 + 2 * j + u(), u(0.05, 1.0)), u() < 0.15 ? -1.0 : 1.0});

    double len = 1 + u();
    for (int g = 0; g < n.geo; ++g) {
        s.geodesics.push_back({len, u() < 0.2 ? 2 : 1});
        len += u(0.05, 0.5);
    }

    double q = 2 + u();
    s.dirichlet.a_min = 1;
    for (int i = 0; i < n.dirichlet; ++i) {
        s.dirichlet.terms.push_back({q, u(-1, 1) * 0.3 / (i + 1)});
        q += u(0.5, 3);
    }
    s.validate();
    return s;
}

}  // namespace cusp_theta
