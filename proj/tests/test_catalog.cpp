#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "cusp_theta/catalog.hpp"
#include "cusp_theta/errors.hpp"

using namespace cusp_theta;

namespace {

const SingularEntry* near(const Catalog& c, cplx z) {
    for (const auto& e : c.entries)
        if (std::abs(e.location - z) < 1e-6) return &e;
    return nullptr;
}

}  // namespace

TEST_SUITE("catalog") {
    TEST_CASE("region validation") {
        CHECK_THROWS_AS((CatalogRegion{1, -1, 0, 1}.validate()), ValidationError);
        CHECK((CatalogRegion{-1, 1, -1, 1}.contains(cplx(0.5, -0.5))));
    }

    TEST_CASE("modular entries") {
        const auto s = modular_surface(100, 39, 50);
        const auto c = singularity_catalog(s, {-8, 8, -30, 15});
        const double l = 2 * std::acosh(1.5);
        const auto* g = near(c, l);
        REQUIRE(g);
        CHECK(std::abs(g->residue - cplx(0, 0.13700)) < 1e-5);
        CHECK(g->sources[0] == SingularSource::Geodesic);

        const auto* low = near(c, cplx(0, -2 * pi));
        REQUIRE(low);
        CHECK(low->order == 2);
        CHECK(std::abs(*low->second_coefficient - s.volume / pi) < 1e-12);
        CHECK(std::abs(low->residue - 1.0) < 1e-12);

        const auto* dl = near(c, -std::log(4.0));
        REQUIRE(dl);
        CHECK(std::abs(dl->residue - cplx(0, -std::log(4.0) * 0.5 / (2 * pi))) < 1e-12);
        CHECK(!near(c, 0.0));
    }

    TEST_CASE("Laurent verification of elementary entries") {
        const auto s = modular_surface(100, 39, 50);
        CatalogOptions o;
        o.verify = true;
        o.include_real_axis = false;
        const auto c = singularity_catalog(s, {-2, 2, -15, 15}, o);
        REQUIRE(!c.entries.empty());
        for (const auto& e : c.entries) {
            CHECK(e.verification.status == VerifyStatus::Verified);
            CHECK(e.verification.residual < 1e-8);
        }
    }

    TEST_CASE("JSON output and stated comparison") {
        const auto s = modular_surface(100, 39, 50);
        const auto c = singularity_catalog(s, {-3, 3, -15, 15});
        const auto rows = compare_with_stated(c, stated_singularities(s, c.region));
        const auto j = nlohmann::json::parse(catalog_to_json(c, &rows));
        CHECK(j["schema"] == "cusp-theta/catalog/v1");
        CHECK(j["entries"].size() == c.entries.size());
        CHECK(j["comparison"].size() == rows.size());
    }
}
