#include "cusp_theta/gamma_factor.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "cusp_theta/errors.hpp"

namespace cusp_theta {

namespace {

bool is_gamma_pole(cplx z) {
    const double n = std::round(z.real());
    return n <= 0 && std::abs(z - n) < 1e-14;
}

// distance from x to the nearest point of (1/2)ℤ
double half_integer_gap(double x) { return std::abs(2 * x - std::round(2 * x)) / 2; }

double detour_radius(const GFactorParams& p, const HOptions& o) {
    return std::min(o.detour_radius, 0.25 * half_integer_gap(p.A));
}

// ψ poles at λ = shift − n on [0, end]
std::vector<cplx> poles_on(double shift, double end) {
    std::vector<cplx> out;
    for (double x = shift; x >= 0; x -= 1)
        if (x <= end) out.push_back(x);
    return out;
}

}  // namespace

void GFactorParams::validate() const {
    if (r < 0) throw ValidationError("GFactorParams.r: must be nonnegative");
    if (!std::isfinite(a) || !std::isfinite(b)) throw ValidationError("GFactorParams: a, b must be finite");
    if (!(A > 0.5)) throw ValidationError("GFactorParams.A: must exceed 1/2");
    if (half_integer_gap(A) < 1e-6)
        throw ValidationError("GFactorParams.A: must not be an integer or half-integer");
}

cplx G(const GFactorParams& p, cplx lambda) {
    const cplx z = I * lambda;
    if (is_gamma_pole(z)) {
        std::ostringstream os;
        os << "G: Gamma(i lambda) has a pole at lambda = " << lambda;
        throw DomainError(os.str());
    }
    if (is_gamma_pole(0.5 + z)) return p.r == 0 ? std::exp(p.a + p.b * lambda) : cplx(0);
    const cplx base = 0.5 * std::log(pi) + log_gamma(z) - log_gamma(0.5 + z);
    return std::exp(p.a + p.b * lambda + static_cast<double>(p.r) * base);
}

cplx Gdot_over_G(const GFactorParams& p, cplx lambda) {
    const cplx z = I * lambda;
    if (is_gamma_pole(z) || is_gamma_pole(0.5 + z)) {
        std::ostringstream os;
        os << "Gdot_over_G: singular at lambda = " << lambda;
        throw DomainError(os.str());
    }
    return p.b + I * static_cast<double>(p.r) * (digamma(z) - digamma(0.5 + z));
}

cplx h3(cplx t, const GFactorParams& p, const HOptions& o) {
    p.validate();
    const double A = p.A;
    auto f = [&](cplx l) { return std::exp(-t * l) * digamma(A + l); };
    return -std::exp(-A * t) * integrate(f, Path::segment(1 - A, 0), o.budget).value;
}

cplx h4(cplx t, const GFactorParams& p, const HOptions& o) {
    p.validate();
    const double A = p.A;
    auto f = [&](cplx l) { return std::exp(-t * l) * digamma(A + 0.5 + l); };
    return std::exp(-A * t) * integrate(f, Path::segment(0.5 - A, 0), o.budget).value;
}

cplx h5(cplx t, const GFactorParams& p, const HOptions& o) {
    p.validate();
    const double A = p.A;
    const auto holes = poles_on(A, A + 1);
    const Path path = Path::detoured_segment(0, A + 1, holes, detour_radius(p, o), DetourSide::Left);
    auto f = [&](cplx l) { return std::exp(t * l) * digamma(-A + l); };
    return std::exp(-A * t) * integrate(f, path, o.budget).value;
}

cplx h6(cplx t, const GFactorParams& p, const HOptions& o) {
    p.validate();
    const double A = p.A;
    const auto holes = poles_on(A - 0.5, A + 0.5);
    const Path path =
        Path::detoured_segment(0, A + 0.5, holes, detour_radius(p, o), DetourSide::Left);
    auto f = [&](cplx l) { return std::exp(t * l) * digamma(-(A - 0.5) + l); };
    return -std::exp(-A * t) * integrate(f, path, o.budget).value;
}

cplx I1(const LogPoint& t, const GFactorParams& p, const HOptions& o) {
    const cplx v = t.value;
    const cplx M = cramer_M_meromorphic(v, 1e-3, o.budget);
    return h3(v, p, o) - std::exp(-v) * euler_gamma / v + std::exp(-v) * M -
           t.log() / (std::exp(v) - 1.0);
}

cplx I2(const LogPoint& t, const GFactorParams& p, const HOptions& o) {
    const cplx v = t.value;
    const cplx M = cramer_M_meromorphic(v, 1e-3, o.budget);
    return h4(v, p, o) + std::exp(-v / 2.0) * euler_gamma / v - std::exp(-v / 2.0) * M +
           std::exp(v / 2.0) * t.log() / (std::exp(v) - 1.0);
}

cplx I3(const LogPoint& t, const GFactorParams& p, const HOptions& o) {
    const cplx v = t.value;
    const LogPoint mt = t.opposite();
    const cplx M = cramer_M_meromorphic(mt.value, 1e-3, o.budget);
    return h5(v, p, o) + std::exp(v) * euler_gamma / v + std::exp(v) * M -
           mt.log() / (std::exp(-v) - 1.0);
}

cplx I4(const LogPoint& t, const GFactorParams& p, const HOptions& o) {
    const cplx v = t.value;
    const LogPoint mt = t.opposite();
    const cplx M = cramer_M_meromorphic(mt.value, 1e-3, o.budget);
    return h6(v, p, o) - std::exp(v / 2.0) * euler_gamma / v - std::exp(v / 2.0) * M +
           std::exp(-v / 2.0) * mt.log() / (std::exp(-v) - 1.0);
}

}  // namespace cusp_theta
