#include "cusp_theta/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cusp_theta/dirichlet.hpp"
#include "cusp_theta/errors.hpp"
#include "cusp_theta/theta.hpp"
#include "cusp_theta/trace_audit.hpp"

namespace cusp_theta {

namespace {

constexpr double merge_tol = 1e-9;

struct Contribution {
    cplx location;
    cplx residue;
    cplx second;
    SingularSource source;
};

std::vector<SingularEntry> merge(std::vector<Contribution> cs, int sheet) {
    std::sort(cs.begin(), cs.end(), [](const Contribution& a, const Contribution& b) {
        if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
        return a.location.real() < b.location.real();
    });
    std::vector<SingularEntry> out;
    for (const auto& c : cs) {
        SingularEntry* e = nullptr;
        for (auto& x : out)
            if (std::abs(x.location - c.location) < merge_tol) e = &x;
        if (!e) {
            out.push_back({});
            e = &out.back();
            e->location = c.location;
            e->sheet = sheet;
            e->residue = 0;
        }
        e->residue += c.residue;
        if (c.second != 0.0) e->second_coefficient = e->second_coefficient.value_or(0) + c.second;
        if (std::find(e->sources.begin(), e->sources.end(), c.source) == e->sources.end())
            e->sources.push_back(c.source);
    }
    for (auto& e : out) e.order = e.second_coefficient ? 2 : 1;
    return out;
}

double max_geodesic_length(const SurfaceData& s) {
    double m = 0;
    for (const auto& g : s.geodesics) m = std::max(m, g.length);
    return m;
}

// real-axis delta masses of the boundary distribution: geodesics at ±l, Dirichlet at −ln|p|
std::vector<Contribution> real_axis(const SurfaceData& s, double x_lo, double x_hi, bool* complete) {
    std::vector<Contribution> out;
    for (const auto& g : s.geodesics) {
        const double mass = g.length / (2 * g.multiplicity_n * std::sinh(g.length / 2));
        for (double x : {g.length, -g.length})
            if (x >= x_lo && x <= x_hi) out.push_back({x, I * mass / (2 * pi), 0, SingularSource::Geodesic});
    }
    if (x_lo < 0) {
        const auto e = expand_log_L_by_norm(s.dirichlet, -x_lo);
        if (complete) *complete = e.complete;
        for (const auto& t : e.terms) {
            const double x = -t.log_norm;
            if (x <= x_hi)
                out.push_back({x, I * (-t.log_norm * t.weight) / (2 * pi), 0, SingularSource::DirichletLength});
        }
    }
    return out;
}

std::vector<Contribution> elementary(const SurfaceData& s, const CatalogRegion& R, const CatalogOptions& o) {
    std::vector<Contribution> out;
    const double r = s.num_cusps;
    const bool modified = o.target == CatalogTarget::Modified;
    const int k = modified ? 0 : o.sheet;
    if (R.re_lo <= 0 && R.re_hi >= 0) {
        const int jlo = static_cast<int>(std::floor(R.im_lo / (2 * pi)));
        const int jhi = static_cast<int>(std::ceil(R.im_hi / (2 * pi)));
        for (int j = jlo; j <= jhi; ++j) {
            const cplx t0(0, 2 * pi * j);
            if (j == 0 || !R.contains(t0)) continue;
            if (j < 0) {
                const double sign = (j % 2 == 0) ? 1 : -1;
                out.push_back({t0, r, -sign * s.volume / pi, SingularSource::LatticeNeg});
            }
            // poles of D(t) = e^{t/2}/(e^{t/2}−1), residue 2
            if (j % 2 == 0 && r != 0) {
                cplx res = modified ? r / (pi * I) * std::log(t0) : cplx(-2.0 * k * r);
                if (res != 0.0) out.push_back({t0, res, 0, SingularSource::Lattice2PiIK});
            }
        }
    }
    // cosh t = cos(2πq/m) at t = ±2πiq/m + 2πin: simple poles in the lower half-plane
    for (int m : s.elliptic_orders)
        for (int q = 1; q < m; ++q)
            for (double sign : {1.0, -1.0}) {
                // for 2q = m the two roots coincide modulo 2πi
                if (2 * q == m && sign < 0) continue;
                const double base = sign * 2 * pi * q / m;
                const int nlo = static_cast<int>(std::floor((R.im_lo - base) / (2 * pi)));
                const int nhi = static_cast<int>(std::ceil((R.im_hi - base) / (2 * pi)));
                for (int n = nlo; n <= nhi; ++n) {
                    const cplx t0(0, base + 2 * pi * n);
                    if (!(t0.imag() < 0) || !R.contains(t0)) continue;
                    const double mm = m;
                    const cplx res = (2 * q == m) ? 1.0 / (mm * std::sinh(t0 / 2.0))
                                                  : std::cosh(t0 / 2.0) / (mm * std::sinh(t0));
                    out.push_back({t0, res, 0, SingularSource::Elliptic});
                }
            }
    return out;
}

double nearest_other(cplx t0, const std::vector<cplx>& pts) {
    double d = std::numeric_limits<double>::infinity();
    for (cplx p : pts)
        if (std::abs(p - t0) > merge_tol) d = std::min(d, std::abs(p - t0));
    return d;
}

void verify_laurent(SingularEntry& e, const SurfaceData& s, const CatalogOptions& o,
                    const std::vector<cplx>& neighbours) {
    auto& v = e.verification;
    v.method = "laurent";
    const double d = std::min(nearest_other(e.location, neighbours), std::abs(e.location.imag()));
    v.radius = std::min(o.max_radius, d / 3);
    const int sheet = o.target == CatalogTarget::Modified ? 0 : o.sheet;
    auto eval = [&](cplx z) -> SeriesValue {
        const LogPoint lp(z, sheet);
        return o.target == CatalogTarget::Modified ? theta_modified(lp, s) : theta_continued(lp, s);
    };
    auto f = [&](cplx z) { return eval(z).value; };
    try {
        const std::vector<int> orders{-3, -2, -1};
        const auto c = laurent_coefficients(f, e.location, v.radius, orders, 256, 1e-11);
        v.measured_residue = c.at(-1);
        v.measured_second_coefficient = c.at(-2);
        const cplx second = e.second_coefficient.value_or(0);
        v.residual = std::max({std::abs(c.at(-3)), std::abs(c.at(-2) - second), std::abs(c.at(-1) - e.residue)});
        // the series tails are largest on the side facing the real axis
        const cplx probe = e.location - cplx(0, std::copysign(v.radius, e.location.imag()));
        v.tolerance = o.laurent_tolerance + eval(probe).tail_bound;
        v.status = v.residual <= v.tolerance ? VerifyStatus::Verified : VerifyStatus::Failed;
    } catch (const std::runtime_error&) {
        v.status = VerifyStatus::Inconclusive;
    }
}

void verify_bump(SingularEntry& e, const SurfaceData& s, const CatalogOptions& o,
                 const std::vector<double>& real_points) {
    auto& v = e.verification;
    v.method = "bump_pairing";
    const double x0 = e.location.real();
    double gap = std::abs(x0);
    for (double x : real_points)
        if (std::abs(x - x0) > merge_tol) gap = std::min(gap, std::abs(x - x0));
    const double w = std::min(o.max_bump_width, 0.9 * gap);
    v.radius = w;
    if (std::abs(x0) > o.verify_real_limit) return;
    if (w < o.min_bump_width) {
        v.status = VerifyStatus::NotIsolated;
        return;
    }
    const TestFunction psi(x0, w);
    const AuditReport a = x0 > 0 ? audit_positive(psi, s) : audit_negative(psi, s);
    cplx smooth = 0;
    for (const auto& t : a.rhs_terms)
        if (t.name == "identity" || t.name == "cusp" || t.name == "elliptic") smooth += t.value;
    const double peak = psi(x0);
    const cplx mass = (a.lhs_exact - smooth) / peak;
    v.measured_residue = I * mass / (2 * pi);
    v.residual = std::abs(v.measured_residue - e.residue);
    v.tolerance = a.tail_bound / (2 * pi * peak);
    const double size = std::abs(e.residue);
    if (v.tolerance <= 0.5 * size)
        v.status = v.residual <= v.tolerance ? VerifyStatus::Verified : VerifyStatus::Failed;
    else
        v.status = v.residual <= o.empirical_tolerance * size ? VerifyStatus::Consistent
                                                               : VerifyStatus::Inconclusive;
}

nlohmann::json cj(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

template <class T>
nlohmann::json opt(const std::optional<T>& x) {
    return x ? cj(*x) : nlohmann::json(nullptr);
}

}  // namespace

std::string to_string(SingularSource s) {
    switch (s) {
        case SingularSource::Geodesic: return "geodesic";
        case SingularSource::DirichletLength: return "dirichlet_length";
        case SingularSource::Lattice2PiIK: return "lattice_2pik";
        case SingularSource::LatticeNeg: return "lattice_neg";
        case SingularSource::Elliptic: return "elliptic";
        case SingularSource::CuspTerm: return "cusp_term";
    }
    return "unknown";
}

std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Unverified: return "unverified";
        case VerifyStatus::Verified: return "verified";
        case VerifyStatus::Consistent: return "consistent";
        case VerifyStatus::Inconclusive: return "inconclusive";
        case VerifyStatus::NotIsolated: return "not_isolated";
        case VerifyStatus::Failed: return "failed";
    }
    return "unknown";
}

void CatalogRegion::validate() const {
    if (!(re_lo < re_hi) || !(im_lo < im_hi)) throw ValidationError("region: empty rectangle");
    for (double x : {re_lo, re_hi, im_lo, im_hi})
        if (!std::isfinite(x)) throw ValidationError("region: bounds must be finite");
}

bool CatalogRegion::contains(cplx t) const {
    return t.real() >= re_lo && t.real() <= re_hi && t.imag() >= im_lo && t.imag() <= im_hi;
}

Catalog singularity_catalog(const SurfaceData& s, const CatalogRegion& R, const CatalogOptions& o) {
    R.validate();
    s.validate();
    Catalog c{R, o.target, o.target == CatalogTarget::Modified ? 0 : o.sheet, {}, {}};

    std::vector<Contribution> cs = elementary(s, R, o);
    bool dirichlet_complete = true;
    if (o.include_real_axis && R.im_lo <= 0 && R.im_hi >= 0) {
        auto ra = real_axis(s, R.re_lo, R.re_hi, &dirichlet_complete);
        cs.insert(cs.end(), ra.begin(), ra.end());
        const double gmax = max_geodesic_length(s);
        if (std::max(R.re_hi, -R.re_lo) > gmax) {
            std::ostringstream os;
            os << "geodesic list ends at length " << gmax << "; real-axis entries beyond it are missing";
            c.notes.push_back(os.str());
        }
        if (!dirichlet_complete)
            c.notes.push_back("Dirichlet data is truncated; Dirichlet-length entries may be missing");
    }
    c.entries = merge(std::move(cs), c.sheet);

    if (o.verify) {
        std::vector<cplx> pts;
        for (const auto& e : c.entries) pts.push_back(e.location);
        // neighbours outside the region still limit the circles
        const CatalogRegion wide{R.re_lo - 2, R.re_hi + 2, R.im_lo - 2 * pi, R.im_hi + 2 * pi};
        for (const auto& x : elementary(s, wide, o)) pts.push_back(x.location);
        std::vector<double> real_points{0.0};
        for (const auto& x : real_axis(s, R.re_lo - 2, R.re_hi + 2, nullptr)) real_points.push_back(x.location.real());
        for (auto& e : c.entries) {
            if (e.location.imag() == 0) verify_bump(e, s, o, real_points);
            else verify_laurent(e, s, o, pts);
        }
    }
    return c;
}

std::vector<StatedEntry> stated_singularities(const SurfaceData& s, const CatalogRegion& R) {
    std::vector<StatedEntry> out;
    const double r = s.num_cusps;
    auto add = [&](StatedEntry e) {
        if (!R.contains(e.location)) return;
        for (auto& x : out)
            if (std::abs(x.location - e.location) < merge_tol && x.order == 1 && e.order == 1) {
                x.residue += e.residue;
                if (x.bullet.find(e.bullet) == std::string::npos) x.bullet += "+" + e.bullet;
                return;
            }
        out.push_back(std::move(e));
    };
    if (R.im_lo <= 0 && R.im_hi >= 0) {
        for (const auto& g : s.geodesics) {
            const double res = g.length / (4 * pi * g.multiplicity_n * std::sinh(g.length / 2));
            add({g.length, 1, res, {}, "geodesic"});
            add({-g.length, 1, res, {}, "geodesic_repeated"});
        }
        if (R.re_lo < 0)
            for (const auto& t : expand_log_L_by_norm(s.dirichlet, -R.re_lo).terms)
                add({-t.log_norm, 1, -t.log_norm * t.weight / (2 * pi), {}, "dirichlet_length"});
    }
    if (R.re_lo <= 0 && R.re_hi >= 0) {
        for (int k = 1; (4 * k - 2) * pi <= R.im_hi; ++k) {
            const double y = (4 * k - 2) * pi;
            add({cplx(0, y), 1, -r / 2 - std::log(y) * r / (pi * I), {}, "upper_odd"});
        }
        for (int k = -1; (4 * k + 2) * pi >= R.im_lo; --k) {
            const double y = (4 * k + 2) * pi;
            // ln of a negative number, read as the principal logarithm
            add({cplx(0, y), 2, -1.5 * r - std::log(cplx(y)) * r / (pi * I), -s.volume / pi, "lower_4k+2"});
        }
        for (int k = -1; 4 * k * pi >= R.im_lo; --k)
            add({cplx(0, 4 * k * pi), 2, r, -s.volume / pi, "lower_4k"});
    }
    return out;
}

std::vector<ComparisonRow> compare_with_stated(const Catalog& c, const std::vector<StatedEntry>& stated,
                                               double tol) {
    std::vector<ComparisonRow> rows;
    std::vector<bool> used(stated.size(), false);
    auto close = [&](cplx a, cplx b) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); };
    for (const auto& e : c.entries) {
        ComparisonRow row{e.location, "not_stated", e.residue, {}, e.second_coefficient, {}, ""};
        for (std::size_t i = 0; i < stated.size(); ++i) {
            if (std::abs(stated[i].location - e.location) >= merge_tol) continue;
            used[i] = true;
            const auto& st = stated[i];
            row.stated_residue = st.residue;
            row.stated_second = st.second_coefficient;
            std::vector<std::string> issues;
            if (st.order != e.order) issues.push_back("order_mismatch");
            if (!close(e.residue, st.residue)) issues.push_back("residue_mismatch");
            if (st.second_coefficient && e.second_coefficient &&
                !close(*e.second_coefficient, *st.second_coefficient))
                issues.push_back("second_coefficient_mismatch");
            row.status = issues.empty() ? "match" : issues.front();
            std::ostringstream os;
            os << st.bullet;
            for (const auto& x : issues) os << "; " << x;
            row.detail = os.str();
        }
        rows.push_back(row);
    }
    for (std::size_t i = 0; i < stated.size(); ++i)
        if (!used[i])
            rows.push_back({stated[i].location, "missing_in_catalog", {}, stated[i].residue, {},
                            stated[i].second_coefficient, stated[i].bullet});
    return rows;
}

std::string catalog_to_json(const Catalog& c, const std::vector<ComparisonRow>* comparison, int indent) {
    nlohmann::json j;
    j["schema"] = "cusp-theta/catalog/v1";
    j["region"] = {c.region.re_lo, c.region.re_hi, c.region.im_lo, c.region.im_hi};
    j["target"] = c.target == CatalogTarget::Modified ? "modified" : "theta";
    j["sheet"] = c.sheet;
    auto& es = j["entries"] = nlohmann::json::array();
    for (const auto& e : c.entries) {
        nlohmann::json x;
        x["location"] = cj(e.location);
        x["sheet"] = e.sheet;
        x["order"] = e.order;
        x["residue"] = cj(e.residue);
        x["second_coefficient"] = opt(e.second_coefficient);
        auto& src = x["sources"] = nlohmann::json::array();
        for (auto s : e.sources) src.push_back(to_string(s));
        const auto& v = e.verification;
        x["verification"] = {{"status", to_string(v.status)},
                             {"method", v.method},
                             {"measured_residue", cj(v.measured_residue)},
                             {"measured_second_coefficient", opt(v.measured_second_coefficient)},
                             {"residual", v.residual},
                             {"tolerance", v.tolerance},
                             {"radius", v.radius}};
        es.push_back(std::move(x));
    }
    j["notes"] = c.notes;
    if (comparison) {
        auto& cs = j["comparison"] = nlohmann::json::array();
        for (const auto& r : *comparison)
            cs.push_back({{"location", cj(r.location)},
                          {"status", r.status},
                          {"computed_residue", opt(r.computed_residue)},
                          {"stated_residue", opt(r.stated_residue)},
                          {"computed_second_coefficient", opt(r.computed_second)},
                          {"stated_second_coefficient", opt(r.stated_second)},
                          {"detail", r.detail}});
    }
    return j.dump(indent);
}

}  // namespace cusp_theta
