#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gft {

// Run-wide knobs.  Serialized canonically (fixed field order, shortest
// round-trip floats) so byte-identical reruns are byte-identical reports.
struct RunConfig {
    int series_order = 32;
    int grid_radii = 65;
    int grid_angles = 512;
    bool grid_refine = true;
    std::vector<double> ladder_rhos = {0.90, 0.99, 0.999};
    int curve_samples = 2048;
    int winding_samples = 4096;
    int grunsky_order = 16;
    double tol_geometric = 1e-3;
    double tol_norm = 1e-6;
    std::uint64_t seed = 0;
    int threads = 0; // 0 = automatic

    // "key=value" pairs, sorted by key; flags override file entries.
    static RunConfig from_file(const std::string& path);
    void apply(const std::string& key, const std::string& value);
    std::string canonical() const;
};

// One checked statement: what was computed, what it was compared against,
// and the verdict of that comparison (not of the statement as such).
struct ClaimReport {
    std::string claim_id;
    std::string paper_anchor;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, double>> computed;
    std::vector<std::pair<std::string, std::string>> notes;
    std::string verdict; // "pass" | "fail" | "indeterminate"
    double tolerance = 0.0;
    std::optional<std::uint64_t> seed;
    std::string config; // RunConfig::canonical()

    // JSON with a leading content hash over the rest of the document.
    std::string to_json() const;
};

std::uint64_t fnv1a64(const std::string& s);
std::string fnv1a_hex(const std::string& s);

// Re-hashes a report produced by to_json (or the experiment writers) and
// compares with its embedded hash.
bool verify_report_hash(const std::string& json_text);

// Wraps a serialized JSON object {"a":...} into
// {"hash":"fnv1a:...","a":...} hashing the inner fields.
std::string wrap_with_hash(const std::string& body_object);

} // namespace gft
