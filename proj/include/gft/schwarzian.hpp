#pragma once

#include <optional>
#include <vector>

#include "gft/report.hpp"
#include "gft/series.hpp"

namespace gft {

// Disk sampling grid for weighted sup-norms.  Radii are 0.96*i/(radii_count-1)
// (0.015*i at the default 65 levels), so doubling radii_count halves the
// radial spacing over the same range; all radii stay below 1.
struct GridSpec {
    int radii_count = 65;
    int angles = 512;
    bool refine = true;

    std::vector<double> radii() const;
    bool operator==(const GridSpec&) const = default;
};

// Holomorphic quadratic differential phi(z) dz^2 on the disk, as a truncated
// series.  norm_cache, when set, is bnorm(phi) under the default GridSpec.
struct QuadDifferential {
    TruncatedSeries phi;
    std::optional<double> norm_cache;

    QuadDifferential(TruncatedSeries p, std::optional<double> cache = std::nullopt)
        : phi(std::move(p)), norm_cache(cache) {}

    int order() const { return phi.order(); }
};

// F(z) = z + b0 + sum_{n>=1} tail[n-1] z^{-n} on |z| > 1.
struct LaurentTail {
    cplx b0{0.0, 0.0};
    std::vector<cplx> tail;

    int order() const { return static_cast<int>(tail.size()); }
};

// (f''/f')' - (1/2)(f''/f')^2.  Input order N gives output order N-3, every
// retained coefficient exact.  Throws std::domain_error when f'(0) = 0.
QuadDifferential schwarzian(const TruncatedSeries& f);

// Max coefficient modulus, through order min(N)-4, of
// S_{f1 o f} - ((S_{f1} o f) (f')^2 + S_f).  Requires f(0) = 0.
double chain_rule_residual(const TruncatedSeries& f1, const TruncatedSeries& f);

// sup over the grid of (1-|z|^2)^2 |phi(z)|, with one golden-section
// refinement pass around the argmax when grid.refine is set.
double bnorm(const TruncatedSeries& phi, const GridSpec& grid = GridSpec());
double bnorm(const QuadDifferential& qd, const GridSpec& grid = GridSpec());

// Checks sup (1-|z|^2)^2 |S_f| <= 2k, the sufficient condition for a
// k-quasiconformal extension of f.
ClaimReport ahlfors_weill_admissible(const TruncatedSeries& f, double k,
                                     const GridSpec& grid = GridSpec());

// sup over r in {1+2^-j : j=1..14} u {2,4,8}, grid.angles angles per radius,
// of (|z|^2-1)|z F''(z)/F'(z)|.  Throws singularity_error naming the sample
// point where F' vanishes.  Only grid.angles is consulted.
double becker_norm(const LaurentTail& F, const GridSpec& grid = GridSpec());

// Solves u'' + (phi/2)u = 0 for two normalized solutions and returns
// w = u1/u2 with w(0) = 0, w'(0) = 1, w''(0) = 0, so S_w = phi.  Coefficients
// of phi beyond its stored order are read as zero; target_order < 0 means
// phi.order() + 2, beyond which every returned coefficient is exact.
TruncatedSeries solve_schwarzian(const QuadDifferential& phi, int target_order = -1);

// Dilatation to Teichmuller-metric distance from the origin.
double tau_from_k(double k);

} // namespace gft
