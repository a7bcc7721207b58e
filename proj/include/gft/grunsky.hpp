#pragma once

#include <vector>

#include "gft/report.hpp"
#include "gft/series.hpp"

namespace gft {

// Coefficients c_mn (m,n >= 1) of log((f(z)-f(w))/(z-w)) = sum c_mn z^m w^n,
// together with the pure z^m and w^n rows of the same expansion, which the
// classical quadratic form omits.  The block is symmetrized bitwise at
// construction; the two pure vectors are stored equal.
class GrunskyMatrix {
public:
    GrunskyMatrix(int order, const std::vector<cplx>& raw_block,
                  const std::vector<cplx>& raw_pure_z,
                  const std::vector<cplx>& raw_pure_w);

    int order() const { return n_; }
    // 1-based indices.
    const cplx& at(int m, int n) const { return c_[idx(m, n)]; }
    const std::vector<cplx>& pure_z() const { return pure_z_; }
    const std::vector<cplx>& pure_w() const { return pure_w_; }

private:
    std::size_t idx(int m, int n) const {
        return static_cast<std::size_t>(m - 1) * n_ + (n - 1);
    }
    int n_;
    std::vector<cplx> c_;
    std::vector<cplx> pure_z_, pure_w_;
};

// B_mn = sqrt(mn) c_mn, the kernel of the quadratic form sum B_mn x_m x_n.
struct WeightedForm {
    int order = 0;
    std::vector<cplx> b; // row-major, symmetric

    const cplx& at(int m, int n) const {
        return b[static_cast<std::size_t>(m - 1) * order + (n - 1)];
    }
    cplx& at(int m, int n) {
        return b[static_cast<std::size_t>(m - 1) * order + (n - 1)];
    }
};

// Requires f(0) = 0, f'(0) = 1, f.order() >= 2N, 1 <= N <= 64 (the bivariate
// log cost grows like N^4).  When f.order() == 2N exactly, the entries with
// m + n = 2N read the one missing coefficient a_{2N+1} as zero; supply order
// 2N+1 for a fully exact block.
GrunskyMatrix grunsky_matrix(const TruncatedSeries& f, int N);

WeightedForm weighted_form(const GrunskyMatrix& g);

// Largest singular value of the symmetric matrix B, which equals
// sup_{|x|=1} |sum B_mn x_m x_n|.  Power iteration on B*B with a fixed start
// vector, relative tolerance 1e-10; throws numerical_error if it fails to
// settle within the iteration cap.
double form_norm(const WeightedForm& w);
double grunsky_form_norm(const GrunskyMatrix& g);

// max sqrt(mn)|c_mn| against 1, the necessary coefficient bound for
// univalence; verdict "fail" certifies non-univalence.
ClaimReport coefficient_bound_check(const GrunskyMatrix& g);

// sup sqrt(mn)|c_mn| + form norm.
double seq_norm(const GrunskyMatrix& g);

// Largest r <= 1 with form norm of (sqrt(mn) c_mn r^{m+n}) at most 1, by 20
// bisection steps; 1 when the bound already holds at r = 1.
double scaled_radius(const GrunskyMatrix& g);

// grunsky_matrix of the compositional inverse of f.
GrunskyMatrix grunsky_of_inverse(const TruncatedSeries& f, int N);

} // namespace gft
