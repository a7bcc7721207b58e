#include "gft/grunsky.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gft/errors.hpp"

namespace gft {

GrunskyMatrix::GrunskyMatrix(int order, const std::vector<cplx>& raw_block,
                             const std::vector<cplx>& raw_pure_z,
                             const std::vector<cplx>& raw_pure_w)
    : n_(order) {
    if (order < 1)
        throw std::invalid_argument("GrunskyMatrix: order must be >= 1");
    const auto nn = static_cast<std::size_t>(order);
    if (raw_block.size() != nn * nn || raw_pure_z.size() != nn || raw_pure_w.size() != nn)
        throw std::invalid_argument("GrunskyMatrix: inconsistent dimensions");
    c_.resize(nn * nn);
    for (int m = 1; m <= order; ++m)
        for (int n = m; n <= order; ++n) {
            const cplx v = 0.5 * (raw_block[idx(m, n)] + raw_block[idx(n, m)]);
            c_[idx(m, n)] = v;
            c_[idx(n, m)] = v;
        }
    pure_z_.resize(nn);
    for (std::size_t i = 0; i < nn; ++i)
        pure_z_[i] = 0.5 * (raw_pure_z[i] + raw_pure_w[i]);
    pure_w_ = pure_z_;
}

GrunskyMatrix grunsky_matrix(const TruncatedSeries& f, int N) {
    if (N < 1 || N > 64)
        throw std::invalid_argument("grunsky_matrix: N must lie in [1, 64]");
    if (f.order() < 2 * N)
        throw std::invalid_argument("grunsky_matrix: series order must be >= 2N");
    if (f[0] != cplx(0.0) || std::abs(f[1] - 1.0) > 1e-12)
        throw std::invalid_argument("grunsky_matrix: need f(0) = 0, f'(0) = 1");

    // Kernel (f(z)-f(w))/(z-w) restricted to the square block that the log
    // recursion touches.
    BivariateTruncated d(N);
    for (int p = 0; p <= N; ++p)
        for (int q = 0; q <= N; ++q)
            d.at(p, q) = (p + q + 1 <= f.order()) ? f[p + q + 1] : cplx(0.0);
    const BivariateTruncated L = bivariate_log(d);

    const auto nn = static_cast<std::size_t>(N);
    std::vector<cplx> block(nn * nn);
    std::vector<cplx> pz(nn), pw(nn);
    for (int m = 1; m <= N; ++m) {
        for (int n = 1; n <= N; ++n)
            block[static_cast<std::size_t>(m - 1) * nn + (n - 1)] = L.at(m, n);
        pz[m - 1] = L.at(m, 0);
        pw[m - 1] = L.at(0, m);
    }
    return GrunskyMatrix(N, block, pz, pw);
}

WeightedForm weighted_form(const GrunskyMatrix& g) {
    WeightedForm w;
    w.order = g.order();
    w.b.resize(static_cast<std::size_t>(w.order) * w.order);
    for (int m = 1; m <= w.order; ++m)
        for (int n = 1; n <= w.order; ++n)
            w.at(m, n) = std::sqrt(static_cast<double>(m) * n) * g.at(m, n);
    return w;
}

namespace {

double norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return s;
}

void matvec(const WeightedForm& w, const std::vector<cplx>& x, bool conj,
            std::vector<cplx>& out) {
    const int n = w.order;
    for (int i = 1; i <= n; ++i) {
        cplx s = 0.0;
        for (int j = 1; j <= n; ++j) {
            const cplx& e = w.at(i, j);
            s += (conj ? std::conj(e) : e) * x[j - 1];
        }
        out[i - 1] = s;
    }
}

} // namespace

double form_norm(const WeightedForm& w) {
    const int n = w.order;
    if (n < 1) throw std::invalid_argument("form_norm: empty matrix");
    double maxent = 0.0;
    for (const cplx& e : w.b) maxent = std::max(maxent, std::abs(e));
    if (maxent == 0.0) return 0.0;

    std::vector<cplx> x(n), y(n), z(n);
    for (int j = 0; j < n; ++j)
        x[j] = cplx(1.0 + 0.25 * std::cos(static_cast<double>(j)),
                    0.25 * std::sin(0.7 * static_cast<double>(j)));
    double nx = std::sqrt(norm2(x));
    for (auto& v : x) v /= nx;

    constexpr int cap = 200000;
    constexpr double tol = 1e-10;
    double lam_prev = -1.0;
    for (int iter = 0; iter < cap; ++iter) {
        matvec(w, x, false, y);      // y = B x
        const double lam = norm2(y); // Rayleigh quotient of B*B at unit x
        matvec(w, y, true, z);       // z = conj(B) y
        const double nz = std::sqrt(norm2(z));
        if (nz == 0.0) {
            // start vector hit the kernel of a nonzero matrix; restart from
            // the first basis vector outside it
            bool restarted = false;
            for (int j = 0; j < n && !restarted; ++j) {
                std::fill(x.begin(), x.end(), cplx(0.0));
                x[j] = 1.0;
                matvec(w, x, false, y);
                if (norm2(y) > 0.0) restarted = true;
            }
            if (!restarted) return 0.0;
            lam_prev = -1.0;
            continue;
        }
        for (int j = 0; j < n; ++j) x[j] = z[j] / nz;
        if (lam_prev >= 0.0 && std::abs(lam - lam_prev) <= tol * lam)
            return std::sqrt(lam);
        lam_prev = lam;
    }
    std::ostringstream msg;
    msg << "form_norm: power iteration did not settle after " << cap
        << " steps; last sigma = " << std::sqrt(std::max(lam_prev, 0.0));
    throw numerical_error(msg.str());
}

double grunsky_form_norm(const GrunskyMatrix& g) {
    return form_norm(weighted_form(g));
}

ClaimReport coefficient_bound_check(const GrunskyMatrix& g) {
    double worst = 0.0;
    int wm = 1, wn = 1;
    for (int m = 1; m <= g.order(); ++m)
        for (int n = 1; n <= g.order(); ++n) {
            const double v = std::sqrt(static_cast<double>(m) * n) * std::abs(g.at(m, n));
            if (v > worst) {
                worst = v;
                wm = m;
                wn = n;
            }
        }
    ClaimReport rep;
    rep.claim_id = "grunsky-coefficient-bound";
    rep.paper_anchor = "|c_mn| <= 1/(sqrt(m) sqrt(n)) for all m, n";
    rep.inputs = {{"order", std::to_string(g.order())}};
    rep.computed = {{"max_weighted", worst}, {"threshold", 1.0}};
    rep.notes = {{"argmax", std::to_string(wm) + "," + std::to_string(wn)}};
    rep.tolerance = 1e-9;
    rep.verdict = worst <= 1.0 + 1e-9 ? "pass" : "fail";
    return rep;
}

double seq_norm(const GrunskyMatrix& g) {
    double worst = 0.0;
    for (int m = 1; m <= g.order(); ++m)
        for (int n = 1; n <= g.order(); ++n)
            worst = std::max(worst,
                             std::sqrt(static_cast<double>(m) * n) * std::abs(g.at(m, n)));
    return worst + grunsky_form_norm(g);
}

double scaled_radius(const GrunskyMatrix& g) {
    const WeightedForm base = weighted_form(g);
    const int n = base.order;
    auto norm_at = [&](double r) {
        std::vector<double> pw(n + 1);
        pw[0] = 1.0;
        for (int m = 1; m <= n; ++m) pw[m] = pw[m - 1] * r;
        WeightedForm s = base;
        for (int m = 1; m <= n; ++m)
            for (int j = 1; j <= n; ++j) s.at(m, j) *= pw[m] * pw[j];
        return form_norm(s);
    };
    if (norm_at(1.0) <= 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 20; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (norm_at(mid) <= 1.0 ? lo : hi) = mid;
    }
    return lo;
}

GrunskyMatrix grunsky_of_inverse(const TruncatedSeries& f, int N) {
    return grunsky_matrix(lagrange_invert(f), N);
}

} // namespace gft
