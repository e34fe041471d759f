#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cusp_theta/acceptance.hpp"
#include "cusp_theta/catalog.hpp"
#include "cusp_theta/errors.hpp"
#include "cusp_theta/theta.hpp"
#include "cusp_theta/trace_audit.hpp"

using namespace cusp_theta;

namespace {

constexpr const char* grid_schema = "cusp-theta/grid/v1";

struct SurfaceArgs {
    std::string surface = "modular";
    int zeros = -1, eigenvalues = -1, geodesics = -1;

    void add(CLI::App* app) {
        app->add_option("--surface", surface, "\"modular\" or a surface JSON file")->capture_default_str();
        app->add_option("--zeros", zeros, "modular: number of zeta zeros (default: all bundled)");
        app->add_option("--eigenvalues", eigenvalues, "modular: number of Maass eigenvalues");
        app->add_option("--geodesics", geodesics, "modular: number of geodesic rows");
    }

    SurfaceData load() const {
        if (surface != "modular") {
            if (zeros >= 0 || eigenvalues >= 0 || geodesics >= 0)
                throw ValidationError("--zeros/--eigenvalues/--geodesics apply to the modular preset only");
            return load_surface(surface);
        }
        const BundledSizes n = bundled_sizes();
        return modular_surface(zeros >= 0 ? zeros : n.zeros, eigenvalues >= 0 ? eigenvalues : n.eigenvalues,
                               geodesics >= 0 ? geodesics : n.geodesics);
    }
};

struct Axis {
    double lo, hi;
    int n;
};

Axis parse_axis(const std::string& s) {
    Axis a{};
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> a.lo >> c1 >> a.hi >> c2 >> a.n) || c1 != ':' || c2 != ':' || !is.eof() || a.n < 1 ||
        (a.n > 1 && !(a.lo < a.hi)))
        throw ValidationError("--grid: expected lo:hi:n, got \"" + s + "\"");
    return a;
}

std::vector<double> parse_list(const std::string& s, std::size_t count, const char* flag) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            v.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::logic_error&) {
            throw ValidationError(std::string(flag) + ": bad number \"" + item + "\"");
        }
    }
    if (v.size() != count)
        throw ValidationError(std::string(flag) + ": expected " + std::to_string(count) + " comma-separated values");
    return v;
}

std::ostream& output(const std::string& path, std::unique_ptr<std::ofstream>& file) {
    if (path.empty() || path == "-") return std::cout;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw ValidationError("cannot open " + path + " for writing");
    return *file;
}

std::string fmt17(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

int emit_error(const std::string& kind, const std::string& message, int code) {
    nlohmann::json j{{"schema", "cusp-theta/error/v1"}, {"kind", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return code;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
    SurfaceArgs surface;
    std::string function = "Theta";
    std::string grid;
    int sheet = 0;
    std::string out;
};

void run_eval(const EvalArgs& a) {
    static const std::vector<std::string> functions{"theta", "theta_tilde", "Theta", "V_series", "V_formula",
                                                    "elementary"};
    if (std::find(functions.begin(), functions.end(), a.function) == functions.end())
        throw ValidationError("--function: one of theta, theta_tilde, Theta, V_series, V_formula, elementary");
    const auto comma = a.grid.find(',');
    if (comma == std::string::npos) throw ValidationError("--grid: expected re_lo:re_hi:n,im_lo:im_hi:n");
    const Axis re = parse_axis(a.grid.substr(0, comma)), im = parse_axis(a.grid.substr(comma + 1));
    const SurfaceData s = a.surface.load();
    std::optional<VFormula> vf;
    if (a.function == "V_formula") vf.emplace(s);

    struct Row {
        cplx t;
        SeriesValue v;
        bool ok;
    };
    auto at = [](const Axis& x, int i) { return x.n == 1 ? x.lo : x.lo + (x.hi - x.lo) * i / (x.n - 1); };
    std::vector<Row> rows;
    for (int i = 0; i < re.n; ++i)
        for (int j = 0; j < im.n; ++j) rows.push_back({cplx(at(re, i), at(im, j)), {}, false});

    auto eval = [&](cplx t) -> SeriesValue {
        const LogPoint lp(t, a.sheet);
        if (a.function == "theta") return theta_continued(lp, s);
        if (a.function == "theta_tilde") return theta_tilde(t, s);
        if (a.function == "Theta") return theta_modified(lp, s);
        if (a.function == "V_series") return V_series(t, s);
        if (a.function == "V_formula") return (*vf)(lp);
        return {elementary_part(t, s), 0};
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<std::thread> pool;
    std::vector<std::string> numerical(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < rows.size(); k += workers) {
                try {
                    rows[k].v = eval(rows[k].t);
                    rows[k].ok = std::isfinite(rows[k].v.value.real()) && std::isfinite(rows[k].v.value.imag());
                } catch (const ValidationError&) {
                    rows[k].ok = false;  // off the domain: branch point, pole zone or wrong half-plane
                } catch (const NumericalError& e) {
                    rows[k].ok = false;
                    if (numerical[w].empty()) numerical[w] = e.what();
                }
            }
        });
    for (auto& th : pool) th.join();

    std::unique_ptr<std::ofstream> file;
    std::ostream& os = output(a.out, file);
    os << "# schema=" << grid_schema << " function=" << a.function << " surface=" << s.name << "\n";
    os << "re_t,im_t,sheet,re_value,im_value,tail_bound\n";
    int skipped = 0;
    for (const auto& r : rows) {
        os << fmt17(r.t.real()) << "," << fmt17(r.t.imag()) << "," << a.sheet << ",";
        if (r.ok)
            os << fmt17(r.v.value.real()) << "," << fmt17(r.v.value.imag()) << "," << fmt17(r.v.tail_bound) << "\n";
        else {
            os << "nan,nan,nan\n";
            ++skipped;
        }
    }
    if (skipped) std::cerr << skipped << " grid points not evaluated (written as nan)\n";
    for (const auto& m : numerical)
        if (!m.empty()) throw NumericalError(m);
}

// ---------------------------------------------------------------- catalog

struct CatalogArgs {
    SurfaceArgs surface;
    std::string region = "-8,8,-30,5";
    std::string target = "Theta";
    int sheet = 0;
    bool verify = false;
    std::string out;
};

void run_catalog(const CatalogArgs& a) {
    const auto v = parse_list(a.region, 4, "--region");
    const CatalogRegion region{v[0], v[1], v[2], v[3]};
    CatalogOptions o;
    if (a.target == "Theta") o.target = CatalogTarget::Modified;
    else if (a.target == "theta") o.target = CatalogTarget::Theta;
    else throw ValidationError("--target: Theta or theta");
    o.sheet = a.sheet;
    o.verify = a.verify;
    const SurfaceData s = a.surface.load();
    const Catalog c = singularity_catalog(s, region, o);
    std::unique_ptr<std::ofstream> file;
    std::ostream& os = output(a.out, file);
    if (o.target == CatalogTarget::Modified) {
        const auto cmp = compare_with_stated(c, stated_singularities(s, region));
        os << catalog_to_json(c, &cmp) << "\n";
    } else {
        os << catalog_to_json(c) << "\n";
    }
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
    SurfaceArgs surface;
    std::string kind = "positive";
    double center = 1.9248473002384139;
    double width = 1.0;
    std::string out;
};

void run_audit(const AuditArgs& a) {
    const TestFunction psi(a.center, a.width);
    std::unique_ptr<std::ofstream> file;
    if (a.kind == "gamma") {
        const auto c = gamma_term_check(psi);
        auto cj = [](cplx z) { return nlohmann::json::array({z.real(), z.imag()}); };
        nlohmann::json j{{"schema", "cusp-theta/gamma-check/v1"}, {"center", a.center}, {"width", a.width},
                         {"integral", cj(c.integral)},        {"residue_sum", cj(c.residue_sum)},
                         {"pairing", cj(c.pairing)},          {"reflected", cj(c.reflected)},
                         {"residual", c.residual}};
        output(a.out, file) << j.dump(1) << "\n";
        return;
    }
    const SurfaceData s = a.surface.load();
    if (a.kind == "scattering") {
        const auto c = scattering_term_check(psi, s);
        auto cj = [](cplx z) { return nlohmann::json::array({z.real(), z.imag()}); };
        nlohmann::json j{{"schema", "cusp-theta/scattering-check/v1"},
                         {"center", a.center},
                         {"width", a.width},
                         {"lhs", cj(c.lhs)},
                         {"rhs", cj(c.rhs)},
                         {"residual", c.residual},
                         {"tail_bound", c.tail_bound}};
        output(a.out, file) << j.dump(1) << "\n";
        return;
    }
    AuditReport r;
    if (a.kind == "positive") r = audit_positive(psi, s);
    else if (a.kind == "negative") r = audit_negative(psi, s);
    else if (a.kind == "trace") r = audit_trace_formula(psi, s);
    else throw ValidationError("--kind: positive, negative, trace, scattering or gamma");
    output(a.out, file) << audit_to_json(r) << "\n";
}

// ---------------------------------------------------------------- selfcheck

int run_selfcheck(const std::vector<int>& only) {
    std::vector<int> ids = only;
    if (ids.empty())
        for (int i = 1; i <= acceptance_count; ++i) ids.push_back(i);
    for (int id : ids)
        if (id < 1 || id > acceptance_count) throw ValidationError("--criterion: 1.." + std::to_string(acceptance_count));
    int failed = 0;
    for (int id : ids) {
        const auto r = run_criterion(id);
        std::cout << format_result(r) << std::endl;
        failed += !r.pass;
    }
    std::cout << ids.size() - failed << "/" << ids.size() << " criteria pass\n";
    return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Theta function of a cusped hyperbolic surface: evaluation, continuation, audits"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate a function on a grid, CSV output");
    ea.surface.add(eval);
    eval->add_option("--function", ea.function, "theta | theta_tilde | Theta | V_series | V_formula | elementary")
        ->capture_default_str();
    eval->add_option("--grid", ea.grid, "re_lo:re_hi:n,im_lo:im_hi:n")->required();
    eval->add_option("--sheet", ea.sheet, "sheet of the logarithm")->capture_default_str();
    eval->add_option("--out", ea.out, "output file (default stdout)");

    CatalogArgs ca;
    auto* cat = app.add_subcommand("catalog", "singularity catalog, JSON output");
    ca.surface.add(cat);
    cat->add_option("--region", ca.region, "re_lo,re_hi,im_lo,im_hi")->capture_default_str();
    cat->add_option("--target", ca.target, "Theta (modified) or theta (on --sheet)")->capture_default_str();
    cat->add_option("--sheet", ca.sheet, "sheet for --target theta")->capture_default_str();
    cat->add_flag("--verify", ca.verify, "verify entries numerically");
    cat->add_option("--out", ca.out, "output file (default stdout)");

    AuditArgs aa;
    auto* aud = app.add_subcommand("audit", "trace-formula audits with a bump test function, JSON output");
    aa.surface.add(aud);
    aud->add_option("--kind", aa.kind, "positive | negative | trace | scattering | gamma")->capture_default_str();
    aud->add_option("--center", aa.center, "bump center")->capture_default_str();
    aud->add_option("--width", aa.width, "bump half-width")->capture_default_str();
    aud->add_option("--out", aa.out, "output file (default stdout)");

    std::vector<int> criteria;
    auto* self = app.add_subcommand("selfcheck", "run the acceptance criteria");
    self->add_option("--criterion", criteria, "run only these criteria (1..12)");

    std::uint64_t seed = 1;
    std::string profile = "small", syn_out;
    auto* syn = app.add_subcommand("gen-synthetic", "write a synthetic surface as JSON");
    syn->add_option("--seed", seed)->capture_default_str();
    syn->add_option("--profile", profile, "tiny | small | medium")->capture_default_str();
    syn->add_option("--out", syn_out, "output file (default stdout)");

    SurfaceArgs preset;
    std::string preset_out, expansion_out;
    double expansion_A = 1.3;
    auto* pm = app.add_subcommand("preset-modular", "write the modular-surface preset as JSON");
    preset.add(pm);
    pm->add_option("--out", preset_out, "output file (default stdout)");
    pm->add_option("--expansion-csv", expansion_out, "also write the ln L tuple expansion as CSV");
    pm->add_option("--A", expansion_A, "strip height for --expansion-csv")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("validation", e.what(), 1);
    }

    try {
        if (*eval) run_eval(ea);
        else if (*cat) run_catalog(ca);
        else if (*aud) run_audit(aa);
        else if (*self) return run_selfcheck(criteria);
        else if (*syn) {
            const SurfaceData s = synthetic_surface(seed, parse_profile(profile));
            std::unique_ptr<std::ofstream> file;
            output(syn_out, file) << surface_to_json(s) << "\n";
        } else if (*pm) {
            preset.surface = "modular";
            const SurfaceData s = preset.load();
            std::unique_ptr<std::ofstream> file;
            output(preset_out, file) << surface_to_json(s) << "\n";
            if (!expansion_out.empty()) {
                std::ofstream f(expansion_out);
                if (!f) throw ValidationError("cannot open " + expansion_out + " for writing");
                write_expansion_csv(expand_log_L(s.dirichlet, expansion_A), f);
            }
        }
    } catch (const ValidationError& e) {
        return emit_error("validation", e.what(), 1);
    } catch (const NumericalError& e) {
        return emit_error("numerical", e.what(), 2);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), 2);
    }
    return 0;
}
