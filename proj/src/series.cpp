#include "gft/series.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gft/errors.hpp"

namespace gft {

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty())
        throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    if (order < 0)
        throw std::invalid_argument("TruncatedSeries::zero: negative order");
    return TruncatedSeries(std::vector<cplx>(order + 1, cplx(0.0)));
}

TruncatedSeries TruncatedSeries::identity(int order) {
    if (order < 1)
        throw std::invalid_argument("TruncatedSeries::identity: order must be >= 1");
    std::vector<cplx> c(order + 1, cplx(0.0));
    c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

static void require_equal_orders(const TruncatedSeries& a, const TruncatedSeries& b,
                                 const char* who) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(who) + ": order mismatch");
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_orders(a, b, "add");
    std::vector<cplx> c(a.order() + 1);
    for (int n = 0; n <= a.order(); ++n)
        c[n] = a[n] + b[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_orders(a, b, "sub");
    std::vector<cplx> c(a.order() + 1);
    for (int n = 0; n <= a.order(); ++n)
        c[n] = a[n] - b[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_orders(a, b, "mul");
    const int n = a.order();
    std::vector<cplx> c(n + 1, cplx(0.0));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == cplx(0.0))
            continue;
        for (int j = 0; j + i <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, cplx s) {
    std::vector<cplx> c(a.order() + 1);
    for (int n = 0; n <= a.order(); ++n)
        c[n] = s * a[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.order() < 1)
        throw std::invalid_argument("derivative: order must be >= 1");
    std::vector<cplx> c(a.order());
    for (int n = 1; n <= a.order(); ++n)
        c[n - 1] = double(n) * a[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries truncated(const TruncatedSeries& a, int order) {
    if (order < 0 || order > a.order())
        throw std::invalid_argument("truncated: order out of range");
    return TruncatedSeries(std::vector<cplx>(a.coeffs().begin(), a.coeffs().begin() + order + 1));
}

TruncatedSeries padded(const TruncatedSeries& a, int order) {
    if (order < a.order())
        throw std::invalid_argument("padded: order smaller than input");
    std::vector<cplx> c = a.coeffs();
    c.resize(order + 1, cplx(0.0));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner[0] != cplx(0.0))
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const int n = std::min(outer.order(), inner.order());
    const TruncatedSeries in = inner.order() == n ? inner : truncated(inner, n);
    TruncatedSeries res = TruncatedSeries::zero(n);
    res[0] = outer[outer.order()];
    for (int k = outer.order() - 1; k >= 0; --k) {
        res = mul(res, in);
        res[0] += outer[k];
    }
    return res;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (a[0] == cplx(0.0))
        throw std::invalid_argument("reciprocal: constant term is zero");
    const int n = a.order();
    std::vector<cplx> r(n + 1);
    r[0] = 1.0 / a[0];
    for (int m = 1; m <= n; ++m) {
        cplx s(0.0);
        for (int j = 1; j <= m; ++j)
            s += a[j] * r[m - j];
        r[m] = -s / a[0];
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries log_series(const TruncatedSeries& a) {
    if (std::abs(a[0] - cplx(1.0)) > 1e-12)
        throw std::invalid_argument("log_series: constant term must be 1");
    // n l_n = n a_n - sum_{j<n} j l_j a_{n-j}, from l' a = a'.
    const int n = a.order();
    std::vector<cplx> l(n + 1, cplx(0.0));
    for (int m = 1; m <= n; ++m) {
        cplx s = double(m) * a[m];
        for (int j = 1; j < m; ++j)
            s -= double(j) * l[j] * a[m - j];
        l[m] = s / double(m);
    }
    return TruncatedSeries(std::move(l));
}

TruncatedSeries lagrange_invert(const TruncatedSeries& f) {
    if (f[0] != cplx(0.0) || f[1] != cplx(1.0))
        throw std::invalid_argument("lagrange_invert: need f(0) = 0 and f'(0) = 1");
    const int n = f.order();
    TruncatedSeries g = TruncatedSeries::identity(n);
    if (n == 1)
        return g;
    const TruncatedSeries fp = derivative(f); // order n-1
    int correct = 1;
    while (correct < n) {
        // e = f(g) - z has valuation > correct, so e_0 = e_1 = 0 and the
        // padded reciprocal below is exact through order n.
        TruncatedSeries e = sub(compose(f, g), TruncatedSeries::identity(n));
        TruncatedSeries d = reciprocal(compose(fp, truncated(g, n - 1)));
        g = sub(g, mul(e, padded(d, n)));
        correct *= 2;
    }
    return g;
}

cplx evaluate(const TruncatedSeries& a, cplx z) {
    cplx acc = a[a.order()];
    for (int k = a.order() - 1; k >= 0; --k)
        acc = acc * z + a[k];
    return acc;
}

BivariateTruncated::BivariateTruncated(int order) : order_(order) {
    if (order < 0)
        throw std::invalid_argument("BivariateTruncated: negative order");
    d_.assign(static_cast<std::size_t>(order_ + 1) * (order_ + 1), cplx(0.0));
}

BivariateTruncated divided_difference(const TruncatedSeries& f) {
    if (f.order() < 1)
        throw std::invalid_argument("divided_difference: order must be >= 1");
    if (f[0] != cplx(0.0) || f[1] != cplx(1.0))
        throw std::invalid_argument("divided_difference: need f(0) = 0 and f'(0) = 1");
    const int n = f.order() - 1;
    BivariateTruncated d(n);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            d.at(p, q) = p + q + 1 <= f.order() ? f[p + q + 1] : cplx(0.0);
    return d;
}

BivariateTruncated bivariate_log(const BivariateTruncated& d) {
    if (std::abs(d.at(0, 0) - cplx(1.0)) > 1e-12)
        throw std::invalid_argument("bivariate_log: constant term must be 1");
    const int n = d.order();
    BivariateTruncated l(n);
    // Row 0 is the univariate log of d(0, .).
    for (int m = 1; m <= n; ++m) {
        cplx s = double(m) * d.at(0, m);
        for (int j = 1; j < m; ++j)
            s -= double(j) * l.at(0, j) * d.at(0, m - j);
        l.at(0, m) = s / double(m);
    }
    // Rows m >= 1 from dD/dz = dL/dz * D; the (m-1, n) term of the
    // convolution isolates m L_mn.
    for (int m = 1; m <= n; ++m) {
        for (int q = 0; q <= n; ++q) {
            cplx s = double(m) * d.at(m, q);
            for (int p = 0; p <= m - 1; ++p) {
                for (int r = 0; r <= q; ++r) {
                    if (p == m - 1 && r == q)
                        continue;
                    s -= double(p + 1) * l.at(p + 1, r) * d.at(m - 1 - p, q - r);
                }
            }
            l.at(m, q) = s / double(m);
        }
    }
    return l;
}

TruncatedSeries koebe(int order) {
    if (order < 1)
        throw std::invalid_argument("koebe: order must be >= 1");
    std::vector<cplx> c(order + 1);
    for (int n = 0; n <= order; ++n)
        c[n] = double(n);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mobius_recompose(const TruncatedSeries& f, cplx c) {
    if (f[0] != cplx(0.0))
        throw std::invalid_argument("mobius_recompose: need f(0) = 0");
    if (c == cplx(0.0))
        return f;
    // z/(1 - c z) = sum c^{n-1} z^n, composed with f.
    std::vector<cplx> m(f.order() + 1, cplx(0.0));
    cplx pw = 1.0;
    for (int n = 1; n <= f.order(); ++n) {
        m[n] = pw;
        pw *= c;
    }
    return compose(TruncatedSeries(std::move(m)), f);
}

TruncatedSeries read_series(std::istream& in) {
    std::vector<cplx> c;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        double re, im;
        if (!(ls >> re))
            continue; // blank line
        if (!(ls >> im))
            throw std::invalid_argument("read_series: expected \"re im\" per line");
        c.emplace_back(re, im);
    }
    if (c.size() < 2)
        throw std::invalid_argument("read_series: need at least two coefficients");
    return TruncatedSeries(std::move(c));
}

void write_series(std::ostream& out, const TruncatedSeries& a) {
    out.precision(17);
    for (int n = 0; n <= a.order(); ++n)
        out << a[n].real() << " " << a[n].imag() << "\n";
}

TruncatedSeries load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("load_series: cannot open " + path);
    return read_series(in);
}

void save_series(const std::string& path, const TruncatedSeries& a) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("save_series: cannot open " + path);
    write_series(out, a);
}

} // namespace gft
