#include "cusp_theta/spectral_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cusp_theta/errors.hpp"

namespace cusp_theta {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ValidationError(field + ": " + what);
}

std::string at(const char* list, std::size_t i) {
    return std::string(list) + "[" + std::to_string(i) + "]";
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

double DirichletData::ratio(double A) const {
    double x = tail_mass;
    for (const auto& t : terms) x += std::abs(t.c) * std::pow(t.q, -A);
    return x;
}

void SurfaceData::validate() const {
    if (num_cusps < 0) fail("num_cusps", "must be nonnegative");
    if (!(volume > 0) || !std::isfinite(volume)) fail("volume", "must be positive");
    if (!std::isfinite(a)) fail("a", "must be finite");
    if (!std::isfinite(b)) fail("b", "must be finite");
    if (!(counting_constant > 0)) fail("counting_constant", "must be positive");
    if (!(im_sigma_bound > 0)) fail("im_sigma_bound", "must be positive");

    std::vector<std::pair<double, int>> heights;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        const auto& e = eigenvalues[i];
        const auto f = at("eigenvalues", i);
        if (!finite(e.lambda)) fail(f + ".lambda", "must be finite");
        const bool real = e.lambda.imag() == 0 && e.lambda.real() >= 0;
        const bool small = e.lambda.real() == 0 && e.lambda.imag() > 0 && e.lambda.imag() <= 0.5;
        if (!real && !small)
            fail(f + ".lambda", "must be real and >= 0, or i*y with y in (0, 1/2]");
        if (e.multiplicity < 1) fail(f + ".mult", "multiplicity must be >= 1");
        heights.emplace_back(real ? e.lambda.real() : 0.0, e.multiplicity);
    }
    std::sort(heights.begin(), heights.end());
    long long count = 0;
    for (const auto& [h, m] : heights) {
        count += m;
        if (count > counting_constant * std::pow(std::max(h, 1.0), 2))
            fail("eigenvalues", "counting bound N(x) <= C max(x,1)^2 violated at x = " +
                                    std::to_string(h));
    }

    std::vector<std::pair<double, double>> sig;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        const auto& s = sigmas[i];
        const auto f = at("sigmas", i);
        if (!finite(s.sigma)) fail(f, "sigma must be finite");
        if (s.sigma.real() < 0) fail(f + ".re", "Re sigma must be >= 0");
        if (!(s.sigma.imag() > 0)) fail(f + ".im", "Im sigma must be > 0");
        if (s.sigma.imag() >= im_sigma_bound) fail(f + ".im", "Im sigma exceeds im_sigma_bound");
        if (s.m == 0 || !std::isfinite(s.m)) fail(f + ".m", "multiplicity must be nonzero");
        if (s.on_axis()) {
            if (2 * s.m != std::round(2 * s.m)) fail(f + ".m", "on-axis m must be a multiple of 1/2");
        } else if (s.m != std::round(s.m)) {
            fail(f + ".m", "off-axis m must be an integer");
        }
        sig.emplace_back(s.sigma.real(), std::abs(s.m));
    }
    std::sort(sig.begin(), sig.end());
    double total = 0;
    for (const auto& [x, m] : sig) {
        total += m;
        if (total > counting_constant * std::pow(std::max(x, 1.0), 2))
            fail("sigmas", "counting bound on |m| violated at Re sigma = " + std::to_string(x));
    }

    for (std::size_t i = 0; i < geodesics.size(); ++i) {
        const auto f = at("geodesics", i);
        if (!(geodesics[i].length > 0) || !std::isfinite(geodesics[i].length))
            fail(f + ".length", "length must be positive");
        if (geodesics[i].multiplicity_n < 1) fail(f + ".n", "multiplicity must be >= 1");
    }

    for (std::size_t i = 0; i < elliptic_orders.size(); ++i)
        if (elliptic_orders[i] < 2) fail(at("elliptic", i), "order must be >= 2");

    const auto& d = dirichlet;
    if (!(d.a_min > 0)) fail("dirichlet.a_min", "must be positive");
    if (!(d.tail_mass >= 0)) fail("dirichlet.tail_mass", "must be nonnegative");
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        const auto f = "dirichlet.terms[" + std::to_string(i) + "]";
        if (!std::isfinite(d.terms[i].q) || !(d.terms[i].q > 1)) fail(f + ".q", "q must exceed 1");
        if (!std::isfinite(d.terms[i].c)) fail(f + ".c", "c must be finite");
        if (i > 0 && !(d.terms[i].q > d.terms[i - 1].q))
            fail(f + ".q", "q values must be strictly increasing");
    }
    if (!(d.ratio(d.a_min) < 1))
        fail("dirichlet", "sum |c_q| q^-a_min must be < 1 (got " + std::to_string(d.ratio(d.a_min)) +
                              ")");
}

std::string surface_to_json(const SurfaceData& s, int indent) {
    json j;
    j["schema"] = surface_schema;
    if (!s.name.empty()) j["name"] = s.name;
    j["num_cusps"] = s.num_cusps;
    j["volume"] = s.volume;
    j["a"] = s.a;
    j["b"] = s.b;
    j["counting_constant"] = s.counting_constant;
    j["im_sigma_bound"] = s.im_sigma_bound;
    j["l_model"] = s.l_model == LModel::ZetaRatio ? "zeta_ratio" : "dirichlet_polynomial";
    j["eigenvalues"] = json::array();
    for (const auto& e : s.eigenvalues)
        j["eigenvalues"].push_back(
            {{"lambda_re", e.lambda.real()}, {"lambda_im", e.lambda.imag()}, {"mult", e.multiplicity}});
    j["sigmas"] = json::array();
    for (const auto& x : s.sigmas)
        j["sigmas"].push_back({{"re", x.sigma.real()}, {"im", x.sigma.imag()}, {"m", x.m}});
    j["geodesics"] = json::array();
    for (const auto& g : s.geodesics)
        j["geodesics"].push_back({{"length", g.length}, {"n", g.multiplicity_n}});
    if (!s.elliptic_orders.empty()) j["elliptic"] = s.elliptic_orders;
    json terms = json::array();
    for (const auto& t : s.dirichlet.terms) terms.push_back({t.q, t.c});
    j["dirichlet"] = {{"terms", terms}, {"a_min", s.dirichlet.a_min}};
    if (s.dirichlet.tail_mass > 0) j["dirichlet"]["tail_mass"] = s.dirichlet.tail_mass;
    return j.dump(indent);
}

namespace {

template <class T>
T get(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key)) fail(path.empty() ? key : path + "." + key, "missing");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        fail(path.empty() ? key : path + "." + key, "wrong type");
    }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, const std::string& path) {
    return j.contains(key) ? get<T>(j, key, path) : fallback;
}

}  // namespace

SurfaceData surface_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("parse error: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("parse error: top level must be an object");
    if (j.contains("schema") && j["schema"] != surface_schema)
        fail("schema", "unsupported schema " + j["schema"].dump());
    SurfaceData s;
    s.name = get_or<std::string>(j, "name", "", "");
    s.num_cusps = get<int>(j, "num_cusps", "");
    s.volume = get<double>(j, "volume", "");
    s.a = get_or<double>(j, "a", 0.0, "");
    s.b = get_or<double>(j, "b", 0.0, "");
    s.counting_constant = get_or<double>(j, "counting_constant", 1.0, "");
    s.im_sigma_bound = get_or<double>(j, "im_sigma_bound", 10.0, "");
    const auto model = get_or<std::string>(j, "l_model", "dirichlet_polynomial", "");
    if (model == "zeta_ratio")
        s.l_model = LModel::ZetaRatio;
    else if (model == "dirichlet_polynomial")
        s.l_model = LModel::DirichletPolynomial;
    else
        fail("l_model", "unknown model '" + model + "'");

    auto list = [&](const char* key) {
        if (!j.contains(key)) return json::array();
        if (!j[key].is_array()) fail(key, "must be an array");
        return j[key];
    };
    const json ev = list("eigenvalues");
    for (std::size_t i = 0; i < ev.size(); ++i) {
        const auto p = at("eigenvalues", i);
        s.eigenvalues.push_back({cplx(get_or<double>(ev[i], "lambda_re", 0.0, p),
                                      get_or<double>(ev[i], "lambda_im", 0.0, p)),
                                 get_or<int>(ev[i], "mult", 1, p)});
    }
    const json sg = list("sigmas");
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const auto p = at("sigmas", i);
        s.sigmas.push_back(
            {cplx(get<double>(sg[i], "re", p), get<double>(sg[i], "im", p)), get<double>(sg[i], "m", p)});
    }
    const json gd = list("geodesics");
    for (std::size_t i = 0; i < gd.size(); ++i) {
        const auto p = at("geodesics", i);
        s.geodesics.push_back({get<double>(gd[i], "length", p), get_or<int>(gd[i], "n", 1, p)});
    }
    if (j.contains("elliptic")) {
        try {
            s.elliptic_orders = j["elliptic"].get<std::vector<int>>();
        } catch (const json::exception&) {
            fail("elliptic", "must be an array of integers");
        }
    }
    if (j.contains("dirichlet")) {
        const json& d = j["dirichlet"];
        if (!d.is_object()) fail("dirichlet", "must be an object");
        s.dirichlet.a_min = get<double>(d, "a_min", "dirichlet");
        s.dirichlet.tail_mass = get_or<double>(d, "tail_mass", 0.0, "dirichlet");
        const json terms = d.contains("terms") ? d["terms"] : json::array();
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto p = "dirichlet.terms[" + std::to_string(i) + "]";
            if (!terms[i].is_array() || terms[i].size() != 2 || !terms[i][0].is_number() ||
                !terms[i][1].is_number())
                fail(p, "must be a [q, c] pair of numbers");
            s.dirichlet.terms.push_back({terms[i][0].get<double>(), terms[i][1].get<double>()});
        }
    }
    s.validate();
    return s;
}

SurfaceData load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open surface file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return surface_from_json(ss.str());
}

void save_surface(const SurfaceData& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << surface_to_json(s) << "\n";
}

}  // namespace cusp_theta
