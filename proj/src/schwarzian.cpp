#include "gft/schwarzian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gft/errors.hpp"
#include "gft/parallel.hpp"

namespace gft {

namespace {

constexpr double kDerivativeFloor = 1e-14;

// Golden-section maximization on [a,b]; assumes the scan already landed in
// the right basin, so a local polish suffices.  Returns {argmax, value}.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, int iters = 48) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? std::pair{c, fc} : std::pair{d, fd};
}

std::string fmt_real(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

} // namespace

std::vector<double> GridSpec::radii() const {
    if (radii_count < 2 || angles < 1)
        throw std::invalid_argument("GridSpec: need at least 2 radii and 1 angle");
    std::vector<double> r(radii_count);
    for (int i = 0; i < radii_count; ++i)
        r[i] = 0.96 * i / (radii_count - 1);
    return r;
}

QuadDifferential schwarzian(const TruncatedSeries& f) {
    const int n = f.order();
    if (n < 3)
        throw std::invalid_argument("schwarzian: need order >= 3");
    if (std::abs(f[1]) < kDerivativeFloor)
        throw std::domain_error("schwarzian: f'(0) = 0, not locally univalent at 0");
    TruncatedSeries fp = derivative(f);
    // u = f''/f' has order n-2, S = u' - u^2/2 order n-3.
    TruncatedSeries u = mul(derivative(fp), reciprocal(truncated(fp, n - 2)));
    TruncatedSeries usq = mul(truncated(u, n - 3), truncated(u, n - 3));
    return QuadDifferential(sub(derivative(u), scale(usq, 0.5)));
}

double chain_rule_residual(const TruncatedSeries& f1, const TruncatedSeries& f) {
    const int n = std::min(f1.order(), f.order());
    if (n < 4)
        throw std::invalid_argument("chain_rule_residual: need order >= 4");
    if (f[0] != cplx(0.0))
        throw std::invalid_argument("chain_rule_residual: inner map must fix 0");
    const TruncatedSeries fin = truncated(f, n);
    const TruncatedSeries fout = truncated(f1, n);
    const TruncatedSeries lhs = schwarzian(compose(fout, fin)).phi;
    const TruncatedSeries fp = derivative(fin);
    const TruncatedSeries rhs =
        add(mul(compose(schwarzian(fout).phi, fin), truncated(mul(fp, fp), n - 3)),
            schwarzian(fin).phi);
    double worst = 0.0;
    for (int m = 0; m + 4 <= n; ++m)
        worst = std::max(worst, std::abs(lhs[m] - rhs[m]));
    return worst;
}

double bnorm(const TruncatedSeries& phi, const GridSpec& grid) {
    const std::vector<double> rs = grid.radii();
    const int na = grid.angles;
    const double dth = 2.0 * std::numbers::pi / na;
    auto weighted = [&phi](double r, double th) {
        const double w = 1.0 - r * r;
        return w * w * std::abs(evaluate(phi, std::polar(r, th)));
    };

    struct Slot {
        double val = -1.0;
        int angle = 0;
    };
    std::vector<Slot> best(rs.size());
    parallel_for(rs.size(), [&](std::size_t i) {
        Slot s;
        for (int j = 0; j < na; ++j) {
            const double v = weighted(rs[i], dth * j);
            if (v > s.val) {
                s.val = v;
                s.angle = j;
            }
        }
        best[i] = s;
    });

    std::size_t bi = 0;
    for (std::size_t i = 1; i < rs.size(); ++i)
        if (best[i].val > best[bi].val) bi = i;
    double sup = best[bi].val;

    if (grid.refine) {
        const double r0 = rs[bi];
        const double th0 = dth * best[bi].angle;
        const double dr = rs.back() / (rs.size() - 1);
        auto [th1, v1] = golden_max([&](double th) { return weighted(r0, th); },
                                    th0 - dth, th0 + dth);
        auto [r1, v2] = golden_max([&](double r) { return weighted(r, th1); },
                                   std::max(0.0, r0 - dr),
                                   std::min(rs.back(), r0 + dr));
        (void)r1;
        sup = std::max({sup, v1, v2});
    }
    return sup;
}

double bnorm(const QuadDifferential& qd, const GridSpec& grid) {
    if (qd.norm_cache && grid == GridSpec()) return *qd.norm_cache;
    return bnorm(qd.phi, grid);
}

ClaimReport ahlfors_weill_admissible(const TruncatedSeries& f, double k,
                                     const GridSpec& grid) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::invalid_argument("ahlfors_weill_admissible: k must lie in [0, 1)");
    const double sup = bnorm(schwarzian(f).phi, grid);
    ClaimReport rep;
    rep.claim_id = "ahlfors-weill-admissibility";
    rep.paper_anchor = "(1 - |z|^2)^2 |S_f(z)| <= 2k gives a k-quasiconformal extension";
    rep.inputs = {{"f_order", std::to_string(f.order())},
                  {"k", fmt_real(k)},
                  {"grid", std::to_string(grid.radii_count) + "x" +
                               std::to_string(grid.angles)}};
    rep.computed = {{"sup", sup}, {"threshold", 2.0 * k}};
    rep.verdict = sup <= 2.0 * k ? "pass" : "fail";
    rep.tolerance = 0.0;
    return rep;
}

double becker_norm(const LaurentTail& F, const GridSpec& grid) {
    if (grid.angles < 1)
        throw std::invalid_argument("becker_norm: need at least 1 angle");
    std::vector<double> rs;
    for (int j = 14; j >= 1; --j) rs.push_back(1.0 + std::ldexp(1.0, -j));
    rs.push_back(2.0);
    rs.push_back(4.0);
    rs.push_back(8.0);
    const double dth = 2.0 * std::numbers::pi / grid.angles;

    double sup = 0.0;
    for (double r : rs) {
        for (int j = 0; j < grid.angles; ++j) {
            const cplx z = std::polar(r, dth * j);
            const cplx w = 1.0 / z;
            cplx fp = 1.0;
            cplx fpp = 0.0;
            cplx pw = w * w; // z^{-n-1} for n = 1
            for (int n = 1; n <= F.order(); ++n) {
                const cplx b = F.tail[n - 1];
                fp -= static_cast<double>(n) * b * pw;
                fpp += static_cast<double>(n) * static_cast<double>(n + 1) * b * pw * w;
                pw *= w;
            }
            if (std::abs(fp) < 1e-12) {
                std::ostringstream msg;
                msg << "becker_norm: F' vanishes at z = " << z.real() << " + "
                    << z.imag() << "i (r = " << r << ", theta = " << dth * j << ")";
                throw singularity_error(msg.str());
            }
            sup = std::max(sup, (r * r - 1.0) * std::abs(z * fpp / fp));
        }
    }
    return sup;
}

TruncatedSeries solve_schwarzian(const QuadDifferential& qd, int target_order) {
    const TruncatedSeries& phi = qd.phi;
    if (phi.order() < 2)
        throw std::invalid_argument("solve_schwarzian: phi must have order >= 2");
    const int n = target_order < 0 ? phi.order() + 2 : target_order;
    if (n < 2)
        throw std::invalid_argument("solve_schwarzian: target order must be >= 2");
    std::vector<cplx> u1(n + 1, 0.0), u2(n + 1, 0.0);
    u1[1] = 1.0;
    u2[0] = 1.0;
    for (int m = 0; m + 2 <= n; ++m) {
        cplx s1 = 0.0, s2 = 0.0;
        const int jmax = std::min(m, phi.order());
        for (int j = 0; j <= jmax; ++j) {
            s1 += phi[j] * u1[m - j];
            s2 += phi[j] * u2[m - j];
        }
        const double denom = -2.0 * (m + 1) * (m + 2);
        u1[m + 2] = s1 / denom;
        u2[m + 2] = s2 / denom;
    }
    return mul(TruncatedSeries(std::move(u1)),
               reciprocal(TruncatedSeries(std::move(u2))));
}

double tau_from_k(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("tau_from_k: k must lie in [0, 1)");
    return 0.5 * std::atanh(k);
}

} // namespace gft
