#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cusp_theta/errors.hpp"
#include "cusp_theta/spectral_data.hpp"

#ifndef CUSP_THETA_DATA_DIR
#define CUSP_THETA_DATA_DIR "data/modular"
#endif

namespace cusp_theta {

namespace {

std::vector<std::vector<double>> read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("bundled data file missing: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ValidationError(path + ": unparsable value '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string resolve(const std::string& dir) { return dir.empty() ? bundled_data_dir() : dir; }

void require(int requested, std::size_t available, const char* what) {
    if (requested < 0 || static_cast<std::size_t>(requested) > available)
        throw ValidationError(std::string("requested ") + std::to_string(requested) + " " + what +
                              " but the bundled table has " + std::to_string(available));
}

}  // namespace

std::string bundled_data_dir() {
    if (const char* env = std::getenv("CUSP_THETA_DATA"); env && *env) return env;
    return CUSP_THETA_DATA_DIR;
}

BundledSizes bundled_sizes(const std::string& dir) {
    const auto d = resolve(dir);
    return {static_cast<int>(read_table(d + "/zeta_zeros.csv").size()),
            static_cast<int>(read_table(d + "/maass_eigenvalues.csv").size()),
            static_cast<int>(read_table(d + "/geodesics.csv").size())};
}

DirichletData modular_dirichlet(int n_max, double a_min) {
    std::vector<int> phi(n_max + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (int p = 2; p <= n_max; ++p)
        if (phi[p] == p)
            for (int k = p; k <= n_max; k += p) phi[k] -= phi[k] / p;
    DirichletData d;
    d.a_min = a_min;
    for (int n = 2; n <= n_max; ++n)
        d.terms.push_back({static_cast<double>(n) * n, static_cast<double>(phi[n]) / n});
    // Σ_{n>N} φ(n)/n · n^{−2a} ≤ ∫_N^∞ x^{−2a} dx
    d.tail_mass = std::pow(n_max, 1 - 2 * a_min) / (2 * a_min - 1);
    return d;
}

SurfaceData modular_surface(int num_zeros, int num_eigenvalues, int num_geodesics,
                            const std::string& dir) {
    const auto d = resolve(dir);
    const auto zeros = read_table(d + "/zeta_zeros.csv");
    const auto maass = read_table(d + "/maass_eigenvalues.csv");
    const auto geo = read_table(d + "/geodesics.csv");
    require(num_zeros, zeros.size(), "zeta zeros");
    require(num_eigenvalues, maass.size(), "Maass eigenvalues");
    require(num_geodesics, geo.size(), "geodesics");

    SurfaceData s;
    s.name = "modular";
    s.num_cusps = 1;
    s.volume = pi / 3;
    s.a = s.b = 0;
    s.l_model = LModel::ZetaRatio;
    s.elliptic_orders = {2, 3};
    s.eigenvalues.push_back({cplx(0, 0.5), 1});
    for (int i = 0; i < num_eigenvalues; ++i) s.eigenvalues.push_back({maass[i].at(0), 1});
    s.sigmas.push_back({cplx(0, 0.5), -0.5});
    for (int i = 0; i < num_zeros; ++i) s.sigmas.push_back({cplx(zeros[i].at(0) / 2, 0.25), 1});
    for (int i = 0; i < num_geodesics; ++i) {
        const auto& row = geo[i];
        if (row.size() != 2) throw ValidationError(d + "/geodesics.csv: expected length,n");
        s.geodesics.push_back({row[0], static_cast<int>(row[1])});
    }
    s.dirichlet = modular_dirichlet();
    s.counting_constant = 1;
    s.im_sigma_bound = 1;
    s.validate();
    return s;
}

SurfaceData modular_surface_full(const std::string& dir) {
    const auto n = bundled_sizes(dir);
    return modular_surface(n.zeros, n.eigenvalues, n.geodesics, dir);
}

}  // namespace cusp_theta
