#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace gft {

using cplx = std::complex<double>;

// Power series truncated at a fixed order: coefficients c_0..c_N of
// sum_n c_n z^n.  Coefficients beyond the stored order are unknown rather
// than zero; routines that assume they vanish (the polynomial reading) say
// so.  Each operation below states the exact order of its result, i.e. the
// largest order through which the result is the true truncation of the
// exact series, assuming exact inputs.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<cplx> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries identity(int order); // z

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const cplx& operator[](int n) const { return c_[n]; }
    cplx& operator[](int n) { return c_[n]; }
    const std::vector<cplx>& coeffs() const { return c_; }

private:
    std::vector<cplx> c_;
};

// Coefficientwise sum/difference; both arguments must have the same order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

// Cauchy product truncated to the common order (orders must match).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries scale(const TruncatedSeries& a, cplx s);

// n c_n z^{n-1}; the result has order N-1 (the z^N coefficient of the
// derivative would need c_{N+1}).
TruncatedSeries derivative(const TruncatedSeries& a);

// Copy truncated to a smaller order (exact) ...
TruncatedSeries truncated(const TruncatedSeries& a, int order);
// ... or zero-padded to a larger one (polynomial reading).
TruncatedSeries padded(const TruncatedSeries& a, int order);

// outer(inner(z)); inner must have zero constant term.  Result order is
// min of the two orders.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// 1/a; requires a_0 != 0.
TruncatedSeries reciprocal(const TruncatedSeries& a);

// log a; requires a_0 = 1 (within 1e-12).
TruncatedSeries log_series(const TruncatedSeries& a);

// Compositional inverse g with f(g(w)) = w, for f(0) = 0, f'(0) = 1.
// Newton iteration doubling the valid order each step.
TruncatedSeries lagrange_invert(const TruncatedSeries& f);

// Horner evaluation of the stored polynomial part.
cplx evaluate(const TruncatedSeries& a, cplx z);

// Square bivariate truncation: coefficients d_pq of sum d_pq z^p w^q with
// 0 <= p,q <= order.
class BivariateTruncated {
public:
    explicit BivariateTruncated(int order);

    int order() const { return order_; }
    const cplx& at(int p, int q) const { return d_[idx(p, q)]; }
    cplx& at(int p, int q) { return d_[idx(p, q)]; }

private:
    std::size_t idx(int p, int q) const {
        return static_cast<std::size_t>(p) * (order_ + 1) + q;
    }
    int order_;
    std::vector<cplx> d_;
};

// Divided-difference kernel (f(z) - f(w))/(z - w): d_pq = a_{p+q+1}.
// Result order is N-1; entries with p+q+1 > N use the polynomial reading
// (zero).  Requires f(0) = 0, f'(0) = 1.
BivariateTruncated divided_difference(const TruncatedSeries& f);

// log D for D with constant term 1; computed row by row from
// dD/dz = dL/dz * D (no power-sum cancellation).
BivariateTruncated bivariate_log(const BivariateTruncated& d);

// z/(1-z)^2 = sum n z^n.
TruncatedSeries koebe(int order);

// Disk-preserving recentering of the second coefficient: returns
// f/(1 - c f), which adds c to a_2 and fixes f(0) = 0, f'(0) = 1.
TruncatedSeries mobius_recompose(const TruncatedSeries& f, cplx c);

// Text format: one coefficient per line, "re im", index order 0..N, N >= 1.
TruncatedSeries read_series(std::istream& in);
void write_series(std::ostream& out, const TruncatedSeries& a);
TruncatedSeries load_series(const std::string& path);
void save_series(const std::string& path, const TruncatedSeries& a);

} // namespace gft
