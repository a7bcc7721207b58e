#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gft/report.hpp"
#include "gft/series.hpp"

namespace gft {

// Image of |z| = rho under f, sampled at equispaced angles and treated as a
// closed polyline.
struct BoundaryCurve {
    std::vector<cplx> points;
    double rho = 0.0;
    bool closed = true;
};

// Requires 0 < rho < 1 and M >= 16.  Point j is f(rho e^{2 pi i j / M}).
BoundaryCurve boundary_curve(const TruncatedSeries& f, double rho, int M);

// True iff no two non-adjacent segments of the closed polyline intersect
// (orientation-predicate segment test, O(M^2)).  Zero-length segments are a
// usage error.
bool jordan_test(const BoundaryCurve& curve);

// True iff jordan_test passes at every rho and the argument-principle count
// of f' zeros on |z| <= max(rhos) is zero.  The winding walk uses
// max(M, 4096) samples.  rhos must be strictly increasing inside (0, 1).
bool numeric_univalence(const TruncatedSeries& f, const std::vector<double>& rhos,
                        int M);

// min |f| over the curve at the two outermost ladder radii, extrapolated
// linearly in (1 - rho) to rho = 1.  Estimates the radius of the largest
// origin-centered disk inside f(D); exact for the identity.
double covering_radius(const TruncatedSeries& f, const std::vector<double>& rho_ladder,
                       int M);

// Evidence bundle for membership of f in the biunivalent class: necessary
// second-coefficient bounds, Grunsky norms of f and of its inverse series,
// covering radius, and a numeric univalence verdict.  Fields that fail to
// compute stay unset and the failure is recorded in `errors`, so partial
// certificates are still emitted.
struct BiunivalenceCertificate {
    double a2_modulus = 0.0;
    bool netanyahu_pass = false; // |a2| <= 4/3 (necessary)
    bool lemma2_pass = false;    // |a2| <= 1/2 (sufficient per the claim)
    std::optional<double> grunsky_f_norm;
    std::optional<double> grunsky_inverse_norm;
    std::optional<double> covering_radius;
    std::optional<bool> numeric_univalence;
    std::string overall; // "certified" | "refuted" | "indeterminate"
    std::vector<std::pair<std::string, std::string>> errors;

    // Fixed field order; unset fields serialize as null.
    std::string to_json() const;
};

// Populates every certificate field using cfg's ladder, sample counts, and
// tolerances.  Grunsky fields use N = min(cfg.grunsky_order, f.order()/2)
// and only the first 2N+1 coefficients of f.  Requires f(0) = 0, f'(0) = 1.
//
// overall: "refuted" when the necessary bound or numeric univalence fails;
// "certified" when numeric univalence, both Grunsky norms (<= 1 + tol_norm),
// the necessary bound, and covering >= 1 - tol_geometric all hold;
// "indeterminate" otherwise.
BiunivalenceCertificate biunivalence_certificates(const TruncatedSeries& f,
                                                  const RunConfig& cfg = RunConfig());

// For a family of univalent maps: computes a2max = max |a2|, the predicted
// common covering radius 1/(2 a2max), and per-member verdicts
// covering >= prediction - tol_geometric.  a2max = 0 marks the prediction
// inapplicable.  Empty family is a usage error.
ClaimReport lemma1_covering_check(const std::vector<TruncatedSeries>& family,
                                  const RunConfig& cfg = RunConfig());

} // namespace gft
