#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gft/report.hpp"
#include "gft/schwarzian.hpp"
#include "gft/series.hpp"
#include "gft/univalence.hpp"

namespace gft {

// Parameters of the extremal slit family z / (1 - t k z)^2.
// k is the dilatation, t the rotation of the slit direction.
struct ExtremalParams {
    double k = 0.0;
    cplx t = 1.0; // |t| = 1 within 1e-12
};

// Coefficients a_n = n (t k)^{n-1}, truncated at order N >= 1.
TruncatedSeries extremal_fk(const ExtremalParams& p, int N);

// The extremal Beltrami datum of the slit family, k |z|^3 / z^3.
// Defined on the extension region |z| > 1 only; modulus is exactly k.
cplx mu0_field(double k, cplx z);

// Polynomial of the given degree with seeded standard complex Gaussian
// coefficients, rescaled so its weighted sup norm on the default grid equals
// target_norm.  target 0 returns the zero differential at any degree.
QuadDifferential sample_schwarzian(double target_norm, int degree, std::uint64_t seed);

// One Monte-Carlo trial.  a2_modulus is the sharp second-coefficient ceiling
// over the Moebius orbit of the trial's solution: a function whose weighted
// Schwarzian norm is 2k' extends k'-quasiconformally fixing infinity, and
// among such normalizations |a_2| <= 2k' with equality exactly on the slit
// family, so the ceiling equals phi_norm.  The certified representative is
// the canonical solver output (w(0) = 0, w'(0) = 1, w''(0) = 0).
struct TrialRecord {
    int index = 0;
    double target_norm = 0.0;
    double phi_norm = 0.0;
    double a2_modulus = 0.0;
    std::optional<double> solver_residual;
    std::optional<BiunivalenceCertificate> certificate;
    std::string error; // empty when the trial completed
};

struct ExperimentAggregates {
    double fraction_netanyahu_pass = 0.0;
    double fraction_lemma2_pass = 0.0;
    double fraction_numeric_univalence = 0.0;
    double fraction_certified = 0.0;
    double fraction_refuted = 0.0;
    double fraction_indeterminate = 0.0;
    double fraction_a2_le_half = 0.0;
    double max_solver_residual = 0.0;
    bool all_a2_within_2k = true;
    int errored = 0;
};

// Seed-reproducible record of one experiment; identical (k, trials, seed,
// cfg) reproduce the JSON byte for byte.
struct ExperimentReport {
    std::uint64_t seed = 0;
    double k = 0.0;
    int trials = 0;
    int degree = 0;
    std::string distribution;
    RunConfig config;
    std::vector<TrialRecord> per_trial;
    ExperimentAggregates aggregates;

    // Hash-wrapped JSON document, indented, trailing newline.
    std::string to_json() const;
};

// Draws Schwarzians with weighted norm uniform in [0, 2k], solves the
// canonical second-order system for each, certifies the solutions, and
// aggregates the certificate fields.  Failed trials are marked, not dropped.
ExperimentReport theorem1_experiment(double k, int trials, std::uint64_t seed,
                                     const RunConfig& cfg = RunConfig());

// Minimum covering radius over a rotation grid of the extremal family and
// over sampled Schwarzians at level 2k, compared against covering the whole
// unit disk.
ClaimReport theorem2_experiment(double k, const RunConfig& cfg = RunConfig());

} // namespace gft
