#include "cusp_theta/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "cusp_theta/errors.hpp"

namespace cusp_theta {

namespace {

constexpr std::size_t max_raw_terms = 20'000'000;

struct Item {
    double x;      // |c| q^{−A}
    double c;
    double log_q;
};

struct Expander {
    const std::vector<Item>& items;
    double tol;
    std::vector<TupleTerm> raw;
    double included_mass = 0;  // ordered-tuple mass Σ|c(p)||p|^{−A}

    // mult = n!/Πk! for the multiset so far, prod_c = Πc, P = Πx; the last item used is
    // `last` with run length `run`
    void extend(std::size_t start, int n, double P, double mult, double prod_c,
                double log_norm, std::size_t last, int run) {
        for (std::size_t j = start; j < items.size(); ++j) {
            const int n1 = n + 1;
            const double P1 = P * items[j].x;
            if (P1 / n1 < tol) break;
            const int run1 = (n > 0 && j == last) ? run + 1 : 1;
            const double mult1 = mult * n1 / run1;
            const double prod1 = prod_c * items[j].c;
            const double ln1 = log_norm + items[j].log_q;
            included_mass += mult1 * P1 / n1;
            const double sign = (n1 % 2 == 1) ? 1.0 : -1.0;
            raw.push_back({ln1, sign * mult1 * prod1 / n1, n1});
            if (raw.size() > max_raw_terms)
                throw NumericalError("expand_log_L: too many tuples; raise tol or A");
            extend(j, n1, P1, mult1, prod1, ln1, j, run1);
        }
    }
};

std::vector<TupleTerm> merge_terms(std::vector<TupleTerm> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const TupleTerm& a, const TupleTerm& b) { return a.log_norm < b.log_norm; });
    std::vector<TupleTerm> out;
    for (const auto& t : raw) {
        if (!out.empty() && std::abs(t.log_norm - out.back().log_norm) <= 1e-12 * std::max(1.0, t.log_norm)) {
            out.back().weight += t.weight;
            out.back().order_n = std::min(out.back().order_n, t.order_n);
        } else {
            out.push_back(t);
        }
    }
    return out;
}

void extend_by_norm(const std::vector<Item>& items, double max_ln, std::size_t start, int n,
                    double mult, double prod_c, double log_norm, std::size_t last, int run,
                    std::vector<TupleTerm>& raw) {
    for (std::size_t j = start; j < items.size(); ++j) {
        const double ln1 = log_norm + items[j].log_q;
        if (ln1 > max_ln) break;
        const int n1 = n + 1;
        const int run1 = (n > 0 && j == last) ? run + 1 : 1;
        const double mult1 = mult * n1 / run1;
        const double prod1 = prod_c * items[j].c;
        raw.push_back({ln1, ((n1 % 2 == 1) ? 1.0 : -1.0) * mult1 * prod1 / n1, n1});
        if (raw.size() > max_raw_terms) throw NumericalError("expand_log_L_by_norm: too many tuples");
        extend_by_norm(items, max_ln, j, n1, mult1, prod1, ln1, j, run1, raw);
    }
}

}  // namespace

NormBoundedExpansion expand_log_L_by_norm(const DirichletData& d, double max_log_norm) {
    std::vector<Item> items;
    double max_q = 0;
    for (const auto& t : d.terms) {
        max_q = std::max(max_q, t.q);
        if (t.c != 0) items.push_back({std::abs(t.c), t.c, std::log(t.q)});
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.log_q < b.log_q; });
    std::vector<TupleTerm> raw;
    extend_by_norm(items, max_log_norm, 0, 0, 1, 1, 0, 0, 0, raw);
    NormBoundedExpansion e;
    e.terms = merge_terms(std::move(raw));
    e.complete = d.tail_mass == 0 || std::log(max_q) >= max_log_norm;
    return e;
}

DirichletExpansion expand_log_L(const DirichletData& d, double A, double tol) {
    if (!(A >= d.a_min)) throw ValidationError("expand_log_L: A must be at least a_min");
    if (!(tol > 0)) throw ValidationError("expand_log_L: tol must be positive");
    DirichletExpansion e;
    e.A = A;
    e.ratio = d.ratio(A);
    if (!(e.ratio < 1)) throw ValidationError("expand_log_L: Σ|c_q|q^{−A} must be below 1");

    std::vector<Item> items;
    e.min_log_q = std::numeric_limits<double>::infinity();
    for (const auto& t : d.terms) {
        e.min_log_q = std::min(e.min_log_q, std::log(t.q));
        if (t.c != 0) items.push_back({std::abs(t.c) * std::pow(t.q, -A), t.c, std::log(t.q)});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.x > b.x; });

    Expander ex{items, tol, {}, 0};
    ex.extend(0, 0, 1, 1, 1, 0, 0, 0);

    e.terms = merge_terms(std::move(ex.raw));
    e.tail_bound = std::max(0.0, -std::log1p(-e.ratio) - ex.included_mass);

    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < e.terms.size(); ++i)
        gap = std::min(gap, e.terms[i].log_norm - e.terms[i - 1].log_norm);
    if (e.terms.empty()) gap = 1;
    if (!e.terms.empty()) gap = std::min(gap, e.terms.front().log_norm);
    e.exclusion_radius = 1e-4 * gap;
    return e;
}

cplx log_L_series(cplx lambda, const DirichletExpansion& e) {
    cplx s = 0;
    for (const auto& t : e.terms) s += t.weight * std::exp(-I * lambda * t.log_norm);
    return s;
}

WValue W(cplx t, const DirichletExpansion& e) {
    cplx plus = 0, minus = 0;
    for (const auto& term : e.terms) {
        const double x = term.log_norm;
        if (std::abs(t - x) < e.exclusion_radius || std::abs(t + x) < e.exclusion_radius) {
            std::ostringstream os;
            os << "W: t = " << t << " is within the exclusion radius of the pole at ±" << x;
            throw DomainError(os.str());
        }
        const double w = term.weight * std::exp(-e.A * x);
        plus += w / (t + x);
        minus += w / (t - x);
    }
    const cplx em = std::exp(-e.A * t), ep = std::exp(e.A * t);
    WValue out{em * t * plus + ep * t * minus, 0};

    // omitted tuples have log norm ≥ min_log_q
    const double x0 = e.min_log_q;
    const double dp = (-t.real() >= x0) ? std::abs(t.imag()) : std::abs(t + x0);
    const double dm = (t.real() >= x0) ? std::abs(t.imag()) : std::abs(t - x0);
    if (e.tail_bound == 0) return out;
    if (dp == 0 || dm == 0) {
        out.truncation_bound = std::numeric_limits<double>::infinity();
        return out;
    }
    out.truncation_bound = e.tail_bound * std::abs(t) * (std::abs(em) / dp + std::abs(ep) / dm);
    return out;
}

void write_expansion_csv(const DirichletExpansion& e, std::ostream& out) {
    out << "# A=" << e.A << " tail_bound=" << e.tail_bound << "\n";
    out << "log_norm,weight,order_n,bound\n";
    out.precision(17);
    for (const auto& t : e.terms)
        out << t.log_norm << ',' << t.weight << ',' << t.order_n << ',' << e.tail_bound << "\n";
}

cplx L_dirichlet_sum(const DirichletData& d, cplx lambda) {
    cplx s = 1;
    for (const auto& t : d.terms) s += t.c * std::exp(-I * lambda * std::log(t.q));
    return s;
}

cplx L_value(const SurfaceData& s, cplx lambda) {
    if (s.l_model == LModel::ZetaRatio) return zeta(2.0 * I * lambda) / zeta(1.0 + 2.0 * I * lambda);
    return L_dirichlet_sum(s.dirichlet, lambda);
}

cplx L_log_derivative(const SurfaceData& s, cplx lambda) {
    if (s.l_model == LModel::ZetaRatio) {
        const auto z1 = zeta_pair(2.0 * I * lambda);
        const auto z2 = zeta_pair(1.0 + 2.0 * I * lambda);
        return 2.0 * I * (z1.derivative / z1.value - z2.derivative / z2.value);
    }
    cplx num = 0;
    for (const auto& t : s.dirichlet.terms) {
        const double lq = std::log(t.q);
        num += -I * lq * t.c * std::exp(-I * lambda * lq);
    }
    return num / L_dirichlet_sum(s.dirichlet, lambda);
}

GFactorParams gfactor_params(const SurfaceData& s, double A) {
    GFactorParams p;
    p.r = s.num_cusps;
    p.a = s.a;
    p.b = s.b;
    p.A = A;
    return p;
}

cplx h2(cplx t, const DirichletData& d, double A) {
    const cplx L = L_dirichlet_sum(d, cplx(0, -A));
    return -(std::exp(-A * t) + std::exp(A * t)) * std::log(L.real());
}

cplx h2(cplx t, const SurfaceData& s, double A) {
    const double L = L_value(s, cplx(0, -A)).real();
    if (!(L > 0)) throw NumericalError("h2: L(−iA) must be positive");
    return -(std::exp(-A * t) + std::exp(A * t)) * std::log(L);
}

std::vector<double> h1_singular_points(const SurfaceData& s, double A) {
    std::vector<double> pts;
    if (s.l_model == LModel::ZetaRatio) {
        // ζ(−2u): pole at u = −1/2, trivial zeros at u = n; ζ(1−2u): pole at u = 0,
        // trivial zeros at u = n + 1/2
        for (double u : {-0.5, 0.0})
            if (std::abs(u) < A) pts.push_back(u);
        for (int n = 1; n < A; ++n) pts.push_back(n);
        for (int n = 1; n + 0.5 < A; ++n) pts.push_back(n + 0.5);
    } else {
        // L(iu) = 1 + Σ c q^{u} is real on the real axis; locate sign changes
        auto f = [&](double u) { return L_dirichlet_sum(s.dirichlet, cplx(0, u)).real(); };
        const int n = 4000;
        double u0 = -A, f0 = f(u0);
        for (int k = 1; k <= n; ++k) {
            const double u1 = -A + 2 * A * k / n;
            const double f1 = f(u1);
            if (f0 == 0) pts.push_back(u0);
            else if (f0 * f1 < 0) {
                double lo = u0, hi = u1, flo = f0;
                for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
                    const double mid = 0.5 * (lo + hi), fm = f(mid);
                    if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
                    else hi = mid;
                }
                pts.push_back(0.5 * (lo + hi));
            }
            u0 = u1;
            f0 = f1;
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

cplx h1(cplx t, const SurfaceData& s, double A, const H1Options& o) {
    const auto pts = h1_singular_points(s, A);
    double radius = o.detour_radius;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        radius = std::min(radius, 0.25 * std::min(pts[i] + A, A - pts[i]));
        if (i > 0) radius = std::min(radius, 0.25 * (pts[i] - pts[i - 1]));
    }
    std::vector<cplx> holes(pts.begin(), pts.end());
    const Path path = Path::detoured_segment(-A, A, holes, radius, DetourSide::Right);
    auto f = [&](cplx u) { return std::exp(-t * u) * L_log_derivative(s, I * u); };
    return -I * integrate(f, path, o.budget).value;
}

double functional_equation_residual(const SurfaceData& s, cplx lambda) {
    const GFactorParams p = gfactor_params(s, 1.3);
    const cplx v = L_value(s, lambda) * L_value(s, -lambda) * G(p, lambda) * G(p, -lambda);
    return std::abs(v - 1.0);
}

}  // namespace cusp_theta
