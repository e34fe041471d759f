#include "cusp_theta/specfun.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "cusp_theta/errors.hpp"

namespace cusp_theta {

namespace {

// B_{2k}/(2k)!, k = 1..20
constexpr std::array<double, 20> bernoulli_over_factorial = {
    0.083333333333333329,    -0.0013888888888888889,   3.3068783068783071e-05,
    -8.2671957671957675e-07, 2.08767569878681e-08,     -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225827e-13,  8.5860620562778452e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,   -1.3954464685812522e-19,
    3.5347070396294673e-21,  -8.9535174270375463e-23,  2.2679524523376829e-24,
    -5.7447906688722025e-26, 1.455172475614865e-27,    -3.6859949406653103e-29,
    9.3367342570950451e-31,  -2.36502241570063e-32};

// B_{2k}, k = 1..10
constexpr std::array<double, 10> bernoulli = {
    0.16666666666666666, -0.033333333333333333, 0.023809523809523808, -0.033333333333333333,
    0.07575757575757576, -0.2531135531135531,   1.1666666666666667,   -7.0921568627450977,
    54.971177944862156,  -529.12424242424242};

void check_gamma_pole(cplx z) {
    const double n = std::round(z.real());
    if (n <= 0 && std::abs(z - n) < 1e-14) {
        std::ostringstream os;
        os << "Gamma has a pole at z = " << z;
        throw DomainError(os.str());
    }
}

// number of unit shifts that move z into the Stirling region
int stirling_shift(cplx z) {
    int n = 0;
    while (z.real() + n < 0 || std::abs(z + static_cast<double>(n)) < 15) ++n;
    return n;
}

}  // namespace

cplx principal_log(cplx z) {
    if (z.imag() == 0 && z.real() < 0) return {std::log(-z.real()), pi};
    return std::log(z);
}

LogPoint::LogPoint(cplx v, int k) : value(v), sheet(k) {
    if (v == cplx(0)) throw DomainError("LogPoint value must be nonzero");
}

cplx LogPoint::log() const { return principal_log(value) + 2 * pi * I * static_cast<double>(sheet); }

LogPoint LogPoint::opposite() const {
    const bool lower = value.imag() < 0 && !(value.imag() == 0);
    return LogPoint(-value, lower ? sheet - 1 : sheet);
}

cplx log_gamma(cplx z) {
    check_gamma_pole(z);
    const int n = stirling_shift(z);
    cplx shift = 0;
    for (int k = 0; k < n; ++k) shift += std::log(z + static_cast<double>(k));
    const cplx w = z + static_cast<double>(n);
    const cplx w2 = w * w;
    cplx series = 0, wp = w;
    for (int k = 1; k <= 10; ++k) {
        series += bernoulli[k - 1] / (2.0 * k * (2.0 * k - 1)) / wp;
        wp *= w2;
    }
    return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2 * pi) + series - shift;
}

cplx digamma(cplx z) {
    check_gamma_pole(z);
    const int n = stirling_shift(z);
    cplx shift = 0;
    for (int k = 0; k < n; ++k) shift += 1.0 / (z + static_cast<double>(k));
    const cplx w = z + static_cast<double>(n);
    const cplx w2 = w * w;
    cplx series = 0, wp = w2;
    for (int k = 1; k <= 10; ++k) {
        series += bernoulli[k - 1] / (2.0 * k) / wp;
        wp *= w2;
    }
    return std::log(w) - 0.5 / w - series - shift;
}

namespace {

ZetaPair zeta_euler_maclaurin(cplx s) {
    const int N = 15 + static_cast<int>(std::ceil((std::abs(s) + 40) / 4));
    cplx value = 0, deriv = 0;
    for (int n = 1; n < N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const cplx term = std::exp(-s * ln);
        value += term;
        deriv -= ln * term;
    }
    const double lnN = std::log(static_cast<double>(N));
    const cplx Ns = std::exp(-s * lnN);  // N^{−s}
    const cplx tail = Ns * static_cast<double>(N) / (s - 1.0);
    value += tail + 0.5 * Ns;
    deriv += -lnN * tail - tail / (s - 1.0) - 0.5 * lnN * Ns;
    // rising factorial P = s(s+1)…(s+2k−2) and its derivative
    cplx P = s, dP = 1;
    cplx Npow = Ns / static_cast<double>(N);  // N^{−s−1}
    for (int k = 1; k <= 20; ++k) {
        const cplx c = bernoulli_over_factorial[k - 1] * Npow;
        value += c * P;
        deriv += c * (dP - lnN * P);
        // advance to k+1: multiply by (s+2k−1)(s+2k)
        for (int j = 2 * k - 1; j <= 2 * k; ++j) {
            dP = dP * (s + static_cast<double>(j)) + P;
            P *= s + static_cast<double>(j);
        }
        Npow /= static_cast<double>(N) * N;
    }
    return {value, deriv};
}

}  // namespace

ZetaPair zeta_pair(cplx s) {
    if (std::abs(s - 1.0) < 1e-14) throw DomainError("zeta has a pole at s = 1");
    if (s.real() >= 0.5) return zeta_euler_maclaurin(s);
    // ζ(s) = χ(s)ζ(1−s), χ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s), trig factors scaled by e^{−|Im w|}
    const ZetaPair r = zeta_euler_maclaurin(1.0 - s);
    const cplx w = pi * s / 2.0;
    const double y = w.imag();
    cplx sin_s, cos_s;
    if (y >= 0) {
        const cplx ph = std::polar(1.0, -w.real()), e2 = std::exp(2.0 * I * w);
        sin_s = ph * (1.0 - e2) / (-2.0 * I);
        cos_s = ph * (1.0 + e2) / 2.0;
    } else {
        const cplx ph = std::polar(1.0, w.real()), e2 = std::exp(-2.0 * I * w);
        sin_s = ph * (1.0 - e2) / (2.0 * I);
        cos_s = ph * (1.0 + e2) / 2.0;
    }
    const cplx scale = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi) + log_gamma(1.0 - s) +
                                std::abs(y));
    const cplx chi = scale * sin_s;
    const cplx dchi = chi * (std::log(2 * pi) - digamma(1.0 - s)) + scale * (pi / 2) * cos_s;
    return {chi * r.value, dchi * r.value - chi * r.derivative};
}

namespace {

cplx bose_kernel(cplx z) {  // z/(e^z − 1)
    if (std::abs(z) < 1e-4) return 1.0 - z / 2.0 + z * z / 12.0;
    return z / (std::exp(z) - 1.0);
}

// (1/t)∫ along the ray arg λ = φ; equals F(t) whenever the rotation sweeps no −t
cplx cramer_F_ray(cplx t, double phi, const QuadratureBudget& budget) {
    const cplx e = std::polar(1.0, phi);
    const cplx mt = -t;
    const double proj = std::real(mt * std::conj(e));
    const double dist = proj <= 0 ? std::abs(t) : std::abs(std::imag(mt * std::conj(e)));
    auto tail = [&](double R) {
        const double q = std::exp(-R * std::cos(phi));
        return (R / std::cos(phi) + 1 / (std::cos(phi) * std::cos(phi))) * 2 * q / (1 - q) / dist /
               std::abs(t);
    };
    // |F(t)| ~ |t|^{−2} for large |t|, so the tolerance is scaled to keep it relative
    const double at = std::abs(t);
    const double tol = budget.abs_tol * std::min(1.0, 1 / (at * at));
    double R = 10;
    while (tail(R) > tol / 10 && R < 4000) R += 1;
    auto f = [&](cplx r) {
        const cplx lam = r.real() * e;
        return bose_kernel(lam) / (lam + t) * e;
    };
    QuadratureBudget b = budget;
    b.abs_tol = tol * std::max(1.0, at);
    return integrate(f, Path::segment(0, R), b).value / t;
}

}  // namespace

cplx cramer_F(cplx t, const QuadratureBudget& budget) {
    if (t.imag() == 0 && t.real() <= 0) {
        std::ostringstream os;
        os << "cramer_F: t = " << t << " lies on the cut (−∞, 0]";
        throw DomainError(os.str());
    }
    return cramer_F_ray(t, t.imag() >= 0 ? pi / 3 : -pi / 3, budget);
}

cplx cramer_M_meromorphic(cplx t, double exclusion_radius, const QuadratureBudget& budget) {
    if (std::abs(t) < exclusion_radius)
        throw DomainError("cramer_M: t inside the exclusion zone around 0");
    const double k = std::round(t.imag() / (2 * pi));
    if (k != 0 && std::abs(t - cplx(0, 2 * pi * k)) < exclusion_radius) {
        std::ostringstream os;
        os << "cramer_M: t = " << t << " inside the pole exclusion zone of 2πi·" << k;
        throw DomainError(os.str());
    }
    // on the cut both F and Log are taken from above
    const bool lower = t.imag() < 0 && !(t.imag() == 0);
    const cplx F = cramer_F_ray(t, lower ? -pi / 3 : pi / 3, budget);
    return F - principal_log(t) / (std::exp(-t) - 1.0);
}

cplx cramer_M(const LogPoint& t, double exclusion_radius, const QuadratureBudget& budget) {
    const cplx v = t.value;
    return cramer_M_meromorphic(v, exclusion_radius, budget) -
           2 * pi * I * static_cast<double>(t.sheet) / (std::exp(-v) - 1.0);
}

}  // namespace cusp_theta
