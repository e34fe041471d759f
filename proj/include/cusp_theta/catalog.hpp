#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusp_theta/spectral_data.hpp"

namespace cusp_theta {

enum class SingularSource { Geodesic, DirichletLength, Lattice2PiIK, LatticeNeg, Elliptic, CuspTerm };

std::string to_string(SingularSource s);

struct CatalogRegion {
    double re_lo, re_hi, im_lo, im_hi;
    void validate() const;
    bool contains(cplx t) const;
};

// Theta: θ on the given sheet (θ on sheet 0 is θ above and its continuation below).
// Modified: Θ = θ + (r/2πi)·ln t·D(t), the same on every sheet.
enum class CatalogTarget { Theta, Modified };

struct CatalogOptions {
    CatalogTarget target = CatalogTarget::Modified;
    int sheet = 0;
    bool verify = false;
    bool include_real_axis = true;
    double laurent_tolerance = 1e-6;
    double max_radius = 0.5;
    // real-axis entries are verified by a bump pairing only when it isolates the entry
    double min_bump_width = 0.2;
    double max_bump_width = 0.5;
    // real-axis entries with |x| above this are listed but not verified
    double verify_real_limit = 5;
    // relative discrepancy accepted when the rigorous truncation bound is vacuous
    double empirical_tolerance = 0.05;
};

enum class VerifyStatus {
    Unverified,
    Verified,     // within the rigorous tolerance
    Consistent,   // rigorous bound vacuous, discrepancy within the empirical tolerance
    Inconclusive, // rigorous bound vacuous, discrepancy above the empirical tolerance
    NotIsolated,  // no admissible circle or bump
    Failed,
};

std::string to_string(VerifyStatus s);

struct Verification {
    VerifyStatus status = VerifyStatus::Unverified;
    std::string method;  // "laurent" or "bump_pairing"
    cplx measured_residue;
    std::optional<cplx> measured_second_coefficient;
    double residual = 0;   // max |measured − analytic| over the checked coefficients
    double tolerance = 0;  // rigorous tolerance for the residual
    double radius = 0;     // circle radius or bump width
};

struct SingularEntry {
    cplx location;
    int sheet = 0;
    int order = 1;
    cplx residue;
    std::optional<cplx> second_coefficient;  // coefficient of (t − t₀)^{−2}
    std::vector<SingularSource> sources;     // several when coincident poles were merged
    Verification verification;
};

// Singular points of the evaluated continuation inside the region. Real-axis entries come
// from geodesic lengths and Dirichlet frequencies; the rest from the elementary part,
// the sheet shift −k·r·D and, for Θ, the ln t correction. t = 0 is a branch point and is
// never listed.
struct Catalog {
    CatalogRegion region;
    CatalogTarget target;
    int sheet;
    std::vector<SingularEntry> entries;
    std::vector<std::string> notes;
};

Catalog singularity_catalog(const SurfaceData& s, const CatalogRegion& region, const CatalogOptions& o = {});

// Values printed in the published statement for Θ, as literally written:
// real-axis residues without the factor i, poles at (4k−2)πi for k ≥ 1, second order
// poles at (4k+2)πi and 4kπi for k ≤ −1.
struct StatedEntry {
    cplx location;
    int order;
    cplx residue;
    std::optional<cplx> second_coefficient;
    std::string bullet;
};
std::vector<StatedEntry> stated_singularities(const SurfaceData& s, const CatalogRegion& region);

struct ComparisonRow {
    cplx location;
    std::string status;  // match, residue_mismatch, order_mismatch, second_coefficient_mismatch,
                         // not_stated, missing_in_catalog
    std::optional<cplx> computed_residue, stated_residue;
    std::optional<cplx> computed_second, stated_second;
    std::string detail;
};
std::vector<ComparisonRow> compare_with_stated(const Catalog& c, const std::vector<StatedEntry>& stated,
                                               double tol = 1e-9);

std::string catalog_to_json(const Catalog& c, const std::vector<ComparisonRow>* comparison = nullptr,
                            int indent = 1);

}  // namespace cusp_theta
