#include <doctest.h>

#include <cmath>
#include <string>

#include "cusp_theta/errors.hpp"
#include "cusp_theta/spectral_data.hpp"

using namespace cusp_theta;

namespace {

std::string minimal(const std::string& dirichlet) {
    return R"({"schema": "cusp-theta/surface/v1", "num_cusps": 1, "volume": 2.0,
               "eigenvalues": [{"lambda_re": 5, "lambda_im": 0, "mult": 1}],
               "dirichlet": )" +
           dirichlet + "}";
}

}  // namespace

TEST_SUITE("spectral_data") {
    TEST_CASE("minimal file") {
        const auto s = surface_from_json(minimal(R"({"terms": [[4, 0.5]], "a_min": 1})"));
        REQUIRE(s.eigenvalues.size() == 1);
        CHECK(s.eigenvalues[0].lambda == cplx(5));
        CHECK(s.eigenvalues[0].multiplicity == 1);
        CHECK(s.num_cusps == 1);
    }

    TEST_CASE("q at most 1 is rejected with the field name") {
        try {
            surface_from_json(minimal(R"({"terms": [[0.5, 0.5]], "a_min": 1})"));
            FAIL("accepted q = 0.5");
        } catch (const ValidationError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("q must exceed 1") != std::string::npos);
            CHECK(msg.find("dirichlet.terms[0].q") != std::string::npos);
        }
    }

    TEST_CASE("malformed input") {
        CHECK_THROWS_AS(surface_from_json("{"), ValidationError);
        CHECK_THROWS_AS(surface_from_json(R"({"num_cusps": 1})"), ValidationError);
        CHECK_THROWS_AS(surface_from_json(R"({"num_cusps": -1, "volume": 1})"), ValidationError);
    }

    TEST_CASE("modular preset round-trips bit-exactly") {
        const auto s = modular_surface(50, 10, 20);
        CHECK(surface_from_json(surface_to_json(s)) == s);
        const auto full = modular_surface_full();
        CHECK(surface_from_json(surface_to_json(full, 0)) == full);
    }

    TEST_CASE("modular preset contents") {
        const auto s = modular_surface(1, 1, 1);
        bool found = false;
        for (const auto& sg : s.sigmas) {
            if (sg.on_axis()) {
                CHECK(sg.sigma == cplx(0, 0.5));
                CHECK(sg.m == -0.5);
            } else {
                CHECK(std::abs(sg.sigma - cplx(14.134725141734693 / 2, 0.25)) < 1e-12);
                CHECK(sg.m == 1);
                found = true;
            }
        }
        CHECK(found);
        REQUIRE(s.dirichlet.terms.size() >= 2);
        CHECK(s.dirichlet.terms[0] == DirichletTerm{4, 0.5});
        CHECK(s.dirichlet.terms[1].q == 9);
        CHECK(std::abs(s.dirichlet.terms[1].c - 2.0 / 3) < 1e-15);
        REQUIRE(!s.geodesics.empty());
        CHECK(std::abs(s.geodesics[0].length - 2 * std::acosh(1.5)) < 1e-12);
        CHECK(s.volume == doctest::Approx(pi / 3));
    }

    TEST_CASE("synthetic surfaces") {
        for (std::uint64_t seed : {1u, 2u, 99u}) {
            const auto a = synthetic_surface(seed, SizeProfile::Tiny);
            CHECK(a == synthetic_surface(seed, SizeProfile::Tiny));
            CHECK_NOTHROW(a.validate());
            CHECK(a.eigenvalues.size() <= 10);
            CHECK(a.sigmas.size() <= 10);
            CHECK(a.geodesics.size() <= 10);
            CHECK(a.dirichlet.terms.size() <= 10);
            CHECK_NOTHROW(synthetic_surface(seed, SizeProfile::Medium).validate());
        }
        CHECK_THROWS_AS(parse_profile("huge"), ValidationError);
    }

    TEST_CASE("counting bound is enforced") {
        SurfaceData s;
        s.counting_constant = 1;
        s.eigenvalues.assign(5, Eigenvalue{0.5, 1});
        CHECK_THROWS_AS(s.validate(), ValidationError);
        s.counting_constant = 5;
        CHECK_NOTHROW(s.validate());
    }
}
