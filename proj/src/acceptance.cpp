#include "cusp_theta/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "cusp_theta/catalog.hpp"
#include "cusp_theta/dirichlet.hpp"
#include "cusp_theta/oracles.hpp"
#include "cusp_theta/theta.hpp"
#include "cusp_theta/trace_audit.hpp"

namespace cusp_theta {

namespace {

constexpr double shortest_modular_geodesic = 1.9248473002384139;

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(3) << x;
    return os.str();
}

std::string fmt(cplx z) {
    std::ostringstream os;
    os << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

struct Outcome {
    bool pass;
    std::string detail;
};

// ---------------------------------------------------------------- 1
Outcome cramer_identity() {
    const std::vector<cplx> pts{{0.5, 0.5}, {1, 2}, {3, 0.7}, {0.2, 4}, {2.5, 2.5}};
    double worst = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (cplx t : pts) worst = std::max(worst, std::abs(cramer_ray(t) - cramer_ray_closed(t)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst < 1e-8 && secs < 10,
            "max |ray − (C/t − F)| = " + fmt(worst) + " (tol 1e-8), " + fmt(secs) + " s (limit 10 s)"};
}

// ---------------------------------------------------------------- 2
Outcome cramer_residues() {
    double worst_stated = 0, worst_log = 0;
    std::ostringstream os;
    for (int k : {1, -1, 2, -2}) {
        const cplx c(0, 2 * pi * k);
        auto f = [](cplx z) { return cramer_M(LogPoint(z, 0)); };
        const cplx res = residue(f, c, 0.5);
        const double stated = (k > 0 ? 1 : -1) * pi / 2;
        worst_stated = std::max(worst_stated, std::abs(res - stated));
        worst_log = std::max(worst_log, std::abs(res - std::log(c)));
        os << " k=" << k << ": " << fmt(res) << ";";
    }
    os << " max |res − sign(k)π/2| = " << fmt(worst_stated) << " (tol 1e-8); max |res − Log(2πik)| = "
       << fmt(worst_log) << ". The residue of −log t/(e^{−t}−1) is Log(2πik) = ln(2π|k|) + i·sign(k)π/2;"
       << " the stated value drops the real part and the factor i";
    return {worst_stated < 1e-8, "residues" + os.str()};
}

// ---------------------------------------------------------------- 3
Outcome gamma_rays() {
    const GFactorParams p;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> mod(0.5, 3.0);
    double worst_ray = 0;
    for (int k = 1; k <= 4; ++k) {
        const double lo = k <= 2 ? -pi / 2 + 0.3 : 0.3, hi = k <= 2 ? pi - 0.3 : 1.5 * pi - 0.3;
        std::uniform_real_distribution<double> ang(lo, hi);
        for (int i = 0; i < 10; ++i) {
            const double a = ang(rng);
            const LogPoint t(std::polar(mod(rng), a), a > pi ? 1 : 0);
            const cplx closed = k == 1 ? I1(t, p) : k == 2 ? I2(t, p) : k == 3 ? I3(t, p) : I4(t, p);
            const cplx ray = I_ray(k, t, p);
            worst_ray = std::max(worst_ray, std::abs(closed - ray) / std::max(1.0, std::abs(ray)));
        }
    }

    double worst_jump = 0;
    std::ostringstream os;
    for (int k = 1; k <= 4; ++k) {
        const std::vector<double> xs = k <= 2 ? std::vector<double>{-1, -1.7, -2.5} : std::vector<double>{1, 1.7, 2.5};
        for (double x : xs) {
            JumpResult j;
            cplx expected;
            const cplx t = x;
            if (k <= 2) {
                auto f = [&](cplx z) { return k == 1 ? I1(LogPoint(z, 0), p) : I2(LogPoint(z, 0), p); };
                j = jump(f, f, x, Crossing::FromAbove);
                expected = k == 1 ? 2 * pi * I / (std::exp(t) - 1.0)
                                  : -2 * pi * I * std::exp(t / 2.0) / (std::exp(t) - 1.0);
            } else {
                // principal branch of I₃, I₄: arg t in (0, 2π)
                auto above = [&](cplx z) { return k == 3 ? I3(LogPoint(z, 0), p) : I4(LogPoint(z, 0), p); };
                auto below = [&](cplx z) { return k == 3 ? I3(LogPoint(z, 1), p) : I4(LogPoint(z, 1), p); };
                j = jump(above, below, x, Crossing::FromBelow);
                expected = k == 3 ? 2 * pi * I / (std::exp(-t) - 1.0)
                                  : -2 * pi * I * std::exp(-t / 2.0) / (std::exp(-t) - 1.0);
            }
            worst_jump = std::max(worst_jump, std::abs(j.value - expected));
            if (k == 1 && x == -1) os << "; I₁ jump at −1 = " << fmt(j.value);
        }
    }
    return {worst_ray < 1e-7 && worst_jump < 1e-6,
            "max rel |closed − ray| = " + fmt(worst_ray) + " (tol 1e-7, 40 points); max jump error = " +
                fmt(worst_jump) + " (tol 1e-6, 12 abscissae)" + os.str()};
}

// ---------------------------------------------------------------- 4
Outcome dirichlet_rays() {
    const double A = 1.3;
    DirichletData single{{{std::exp(1.0), 0.5}}, 0.5, 0};
    DirichletData two{{{2, 0.3}, {3, -0.2}}, 0.5, 0};
    const std::vector<cplx> pts{{0.5, 1}, {-1, 0.8}, {2, 1.5}, {-0.3, 2.5}, {1, 0.4}};
    double worst_ray = 0;
    for (const auto* d : {&single, &two}) {
        const auto e = expand_log_L(*d, A);
        for (cplx t : pts) {
            const cplx m = L_ray_minus(t, *d, A), mc = L_ray_minus_closed(t, *d, e);
            const cplx pl = L_ray_plus(t, *d, A), pc = L_ray_plus_closed(t, *d, e);
            worst_ray = std::max({worst_ray, std::abs(m - mc) / std::max(1.0, std::abs(m)),
                                  std::abs(pl - pc) / std::max(1.0, std::abs(pl))});
        }
    }

    const auto e = expand_log_L(two, A);
    double worst_sym = 0;
    for (int i = 0; i < 20; ++i) {
        const cplx t(-2.3 + 0.25 * i, (i % 2 ? 1 : -1) * (0.3 + 0.1 * (i % 5)));
        const cplx a = W(t, e).value, b = W(-t, e).value;
        worst_sym = std::max(worst_sym, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }

    // aggregated weights per log norm
    double worst_res = 0;
    int checked = 0;
    for (std::size_t i = 0; i < e.terms.size() && checked < 6; ++i) {
        const auto& term = e.terms[i];
        if (term.log_norm > 3) break;
        const double gap = std::min(i > 0 ? term.log_norm - e.terms[i - 1].log_norm : term.log_norm,
                                    i + 1 < e.terms.size() ? e.terms[i + 1].log_norm - term.log_norm : 1.0);
        const double radius = std::min(0.1, gap / 3);
        auto f = [&](cplx z) { return W(z, e).value; };
        const double expected = term.weight * term.log_norm;
        // W is even, so its residues are odd in the location
        worst_res = std::max(worst_res, std::abs(residue(f, term.log_norm, radius) - expected));
        worst_res = std::max(worst_res, std::abs(residue(f, -term.log_norm, radius) + expected));
        ++checked;
    }
    return {worst_ray < 1e-7 && worst_sym < 1e-13 && worst_res < 1e-8,
            "L-ray max rel error " + fmt(worst_ray) + " (tol 1e-7); max |W(t) − W(−t)| rel " + fmt(worst_sym) +
                " (tol 1e-13, 20 points); W residues ±c(p)ln|p| max error " + fmt(worst_res) + " over " +
                std::to_string(checked) + " norms (tol 1e-8)"};
}

// ---------------------------------------------------------------- 5
Outcome modular_functional_equation() {
    const SurfaceData s = modular_surface(10, 1, 1);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const double re = 0.37 + 1.21 * i;
        const double im = i < 10 ? 0 : (i % 2 ? 0.21 : -0.17);
        worst = std::max(worst, functional_equation_residual(s, cplx(re, im)));
    }
    return {worst < 1e-10, "max |L(λ)L(−λ)G(λ)G(−λ) − 1| = " + fmt(worst) + " (tol 1e-10, 20 points)"};
}

// ---------------------------------------------------------------- 6
Outcome h_antisymmetry() {
    const VFormula vf(modular_surface(100, 39, 50));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-2, 2), im(-3, 3);
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        const cplx t(re(rng), im(rng));
        worst = std::max(worst, std::abs(vf.h(t) - vf.h(-t)));
    }
    return {worst < 1e-6, "max |h(t) − h(−t)| = " + fmt(worst) + " (tol 1e-6, 10 points, A = 1.3)"};
}

// ---------------------------------------------------------------- 7
Outcome v_formula() {
    const auto t0 = std::chrono::steady_clock::now();
    const SurfaceData s = modular_surface(100, 39, 50);
    const VFormula vf(s);
    double worst_ratio = 0, worst_diff = 0, worst_bound = 0;
    bool ok = true;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const cplx t(-2 + i, 1 + 0.75 * j);
            const auto a = vf(LogPoint(t, 0));
            const auto b = V_series(t, s);
            const double diff = std::abs(a.value - b.value);
            const double bound = a.tail_bound + b.tail_bound;
            ok = ok && diff <= bound && bound < 1e-3;
            worst_diff = std::max(worst_diff, diff);
            worst_bound = std::max(worst_bound, bound);
            worst_ratio = std::max(worst_ratio, diff / bound);
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {ok && secs < 300, "max |V_formula − V_series| = " + fmt(worst_diff) + ", max diff/bound = " +
                                  fmt(worst_ratio) + ", max bound = " + fmt(worst_bound) +
                                  " (limit 1e-3), 25 points, 100 zeros, " + fmt(secs) + " s"};
}

// ---------------------------------------------------------------- 8
Outcome muller() {
    const SurfaceData s = modular_surface(100, 39, 50);
    const auto c = scattering_term_check(TestFunction(2, 1), s);
    return {c.residual < 1e-3, "lhs " + fmt(c.lhs) + ", rhs " + fmt(c.rhs) + ", residual " + fmt(c.residual) +
                                   " (tol 1e-3), tail bound " + fmt(c.tail_bound)};
}

// ---------------------------------------------------------------- 9
Outcome gamma_term() {
    const auto c = gamma_term_check(TestFunction(2, 0.5));
    return {c.residual < 1e-7, "integral " + fmt(c.integral) + ", residue sum " + fmt(c.residue_sum) +
                                   ", pairing " + fmt(c.pairing) + ", reflected " + fmt(std::abs(c.reflected)) +
                                   ", residual " + fmt(c.residual) + " (tol 1e-7)"};
}

// ---------------------------------------------------------------- 10
Outcome positive_axis_audit() {
    const SurfaceData full = modular_surface_full();
    const BundledSizes n = bundled_sizes();
    const SurfaceData tenth = modular_surface(n.zeros / 10, std::max(1, n.eigenvalues / 10), n.geodesics / 10);
    const TestFunction psi(shortest_modular_geodesic, 1.0);
    const auto a = audit_positive(psi, full);
    const auto b = audit_positive(psi, tenth);
    return {a.relative_residual < 0.05 && a.residual < b.residual,
            "relative residual " + fmt(a.relative_residual) + " (tol 0.05); residual full " + fmt(a.residual) +
                " vs 10% data " + fmt(b.residual) + "; Richardson gap " + fmt(a.extrapolation_gap) +
                "; rigorous tail bound " + fmt(a.tail_bound)};
}

// ---------------------------------------------------------------- 11
Outcome catalog_check() {
    const SurfaceData s = modular_surface_full();
    const CatalogRegion region{-5, 5, -30, 15};
    int elem = 0, elem_bad = 0, real_ok = 0, real_incon = 0, real_fail = 0, real_skip = 0;
    std::size_t mismatches = 0, rows = 0;
    double worst_elem = 0;
    std::vector<CatalogOptions> runs(3);
    runs[1].target = runs[2].target = CatalogTarget::Theta;
    runs[1].sheet = 1;
    runs[2].sheet = -2;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        runs[r].verify = true;
        // real-axis entries are the same for every target
        runs[r].include_real_axis = r == 0;
        const auto c = singularity_catalog(s, region, runs[r]);
        for (const auto& e : c.entries) {
            const auto st = e.verification.status;
            if (e.location.imag() != 0) {
                ++elem;
                worst_elem = std::max(worst_elem, e.verification.residual);
                if (st != VerifyStatus::Verified) ++elem_bad;
            } else if (st == VerifyStatus::Verified || st == VerifyStatus::Consistent) ++real_ok;
            else if (st == VerifyStatus::Inconclusive) ++real_incon;
            else if (st == VerifyStatus::Failed) ++real_fail;
            else ++real_skip;
        }
        if (r == 0) {
            const auto cmp = compare_with_stated(c, stated_singularities(s, region));
            rows = cmp.size();
            for (const auto& x : cmp) mismatches += x.status != "match";
        }
    }
    std::ostringstream os;
    os << elem << " elementary entries over Θ and θ on sheets 1, −2: " << elem - elem_bad
       << " confirmed by Laurent extraction (worst residual " << fmt(worst_elem) << ", tol 1e-6); real-axis: "
       << real_ok << " within tolerance, " << real_incon << " above the 5% empirical tolerance (rigorous bound vacuous), "
       << real_fail << " failed, " << real_skip << " not isolated or beyond |x| = 5; comparison report: " << mismatches
       << " of " << rows << " rows differ from the stated bullets";
    return {elem_bad == 0 && real_fail == 0 && real_incon == 0 && real_ok > 0 && rows > 0, os.str()};
}

// ---------------------------------------------------------------- 12
Outcome sheet_invariance() {
    const SurfaceData s = modular_surface(100, 39, 50);
    const VFormula vf(s);
    const double r = s.num_cusps;
    double worst_stated = 0, worst_derived = 0, worst_theta = 0, tol = 0;
    for (cplx u : {cplx(1, 1), cplx(-0.5, 2), cplx(0.7, 1.5)}) {
        const auto glued = theta_glued_upper(u, vf);
        const auto base = theta(u, s);
        const cplx diff = glued.value - base.value;
        const double t = glued.tail_bound + base.tail_bound;
        tol = std::max(tol, t);
        worst_stated = std::max(worst_stated, std::abs(diff - r * stated_sheet_difference(u)));
        worst_derived = std::max(worst_derived, std::abs(diff - r * sheet_difference(u)));
        // Θ from the glued sheet −1 value against Θ on sheet 0
        const LogPoint lp(u, -1);
        const cplx big_theta = glued.value + r / (2 * pi * I) * lp.log() * sheet_difference(u);
        worst_theta = std::max(worst_theta, std::abs(big_theta - theta_modified(LogPoint(u, 0), s).value));
    }
    {
        const cplx t0(-1, -0.5);
        const auto glued = theta_glued_lower(t0, vf);
        const LogPoint lp(t0, 1);
        const cplx big_theta = glued.value + r / (2 * pi * I) * lp.log() * sheet_difference(t0);
        worst_theta = std::max(worst_theta, std::abs(big_theta - theta_modified(LogPoint(t0, 0), s).value));
        tol = std::max(tol, glued.tail_bound);
    }
    const bool first = worst_stated <= tol, second = worst_theta <= tol;
    std::ostringstream os;
    os << "truncation tolerance " << fmt(tol) << "; glued θ_{−1} − θ vs r(e^{t/2}−1)/(2sinh(t/2)): max error "
       << fmt(worst_stated) << (first ? "" : " (FAIL)") << "; vs r·e^{t/2}/(e^{t/2}−1): " << fmt(worst_derived)
       << "; Θ from glued sheets vs sheet 0: " << fmt(worst_theta) << (second ? "" : " (FAIL)")
       << " at 4 points. The glue agrees with e^{t/2}/(e^{t/2}−1), which follows from the"
       << " negative-axis cusp term −r·e^{t/2}/(e^t−1); the stated form flips the sign of that term";
    return {first && second, os.str()};
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {"Cramér ray identity", cramer_identity},
        {"Cramér M residues", cramer_residues},
        {"I1–I4 closed forms and jumps", gamma_rays},
        {"Dirichlet ray closed forms, W symmetry and residues", dirichlet_rays},
        {"modular functional equation", modular_functional_equation},
        {"h(t) = h(−t)", h_antisymmetry},
        {"V formula vs series", v_formula},
        {"scattering term (Müller)", muller},
        {"gamma term", gamma_term},
        {"positive-axis audit", positive_axis_audit},
        {"singularity catalog", catalog_check},
        {"sheet difference and Θ invariance", sheet_invariance},
    };
    return list;
}

}  // namespace

CriterionResult run_criterion(int id) {
    CriterionResult r;
    r.id = id;
    if (id < 1 || id > acceptance_count) {
        r.name = "unknown";
        r.detail = "no such criterion";
        return r;
    }
    const auto& c = criteria()[id - 1];
    r.name = c.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Outcome o = c.run();
        r.pass = o.pass;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(std::span<const int> ids) {
    std::vector<CriterionResult> out;
    for (int id : ids) out.push_back(run_criterion(id));
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << std::fixed << std::setprecision(1)
       << r.seconds << " s): " << r.detail;
    return os.str();
}

}  // namespace cusp_theta
