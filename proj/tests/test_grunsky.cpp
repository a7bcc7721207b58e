#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "gft/errors.hpp"
#include "gft/grunsky.hpp"
#include "gft/rng.hpp"
#include "gft/series.hpp"

using namespace gft;

namespace {

TruncatedSeries fk_series(double k, cplx t, int order) {
    std::vector<cplx> c(order + 1, 0.0);
    const cplx s = t * k;
    cplx p = 1.0;
    for (int n = 1; n <= order; ++n) {
        c[n] = static_cast<double>(n) * p;
        p *= s;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries random_normalized(int order, GaussStream& g) {
    std::vector<cplx> c(order + 1, 0.0);
    c[1] = 1.0;
    double s = 0.35;
    for (int n = 2; n <= order; ++n) {
        s *= 0.4;
        c[n] = cplx(g.next(), g.next()) * s;
    }
    return TruncatedSeries(std::move(c));
}

// Lower bound on the form norm from random unit vectors; alternates complex
// and real draws because the bilinear sup of a real diagonal matrix is only
// approached along (nearly) real directions.
double sample_form_max(const WeightedForm& B, int count, GaussStream& g) {
    const int n = B.order;
    double best = 0.0;
    std::vector<cplx> x(n);
    for (int s = 0; s < count; ++s) {
        double nx = 0.0;
        for (auto& v : x) {
            v = (s % 2 == 0) ? cplx(g.next(), g.next()) : cplx(g.next(), 0.0);
            nx += std::norm(v);
        }
        cplx q = 0.0;
        for (int m = 1; m <= n; ++m)
            for (int j = 1; j <= n; ++j) q += B.at(m, j) * x[m - 1] * x[j - 1];
        best = std::max(best, std::abs(q) / nx);
    }
    return best;
}

} // namespace

TEST_CASE("identity map yields the zero matrix") {
    const GrunskyMatrix g = grunsky_matrix(TruncatedSeries::identity(33), 16);
    for (int m = 1; m <= 16; ++m) {
        CHECK(std::abs(g.pure_z()[m - 1]) == 0.0);
        for (int n = 1; n <= 16; ++n) CHECK(std::abs(g.at(m, n)) == 0.0);
    }
    CHECK(grunsky_form_norm(g) == 0.0);
    CHECK(seq_norm(g) == 0.0);
    CHECK(scaled_radius(g) == 1.0);
    CHECK(coefficient_bound_check(g).verdict == "pass");
}

TEST_CASE("slit map block is diagonal with the closed form") {
    const GrunskyMatrix g = grunsky_matrix(koebe(17), 8);
    for (int m = 1; m <= 8; ++m) {
        CHECK(std::abs(g.at(m, m) + 1.0 / m) < 1e-12);
        CHECK(std::abs(g.pure_z()[m - 1] - 2.0 / m) < 1e-12);
        for (int n = 1; n <= 8; ++n)
            if (n != m) CHECK(std::abs(g.at(m, n)) < 1e-12);
    }
    CHECK(g.pure_w() == g.pure_z());
}

TEST_CASE("rotated family block is diagonal with rescaled entries") {
    const double k = 0.6;
    const cplx t = std::polar(1.0, 0.9);
    const cplx s = t * k;
    const GrunskyMatrix g = grunsky_matrix(fk_series(k, t, 17), 8);
    for (int m = 1; m <= 8; ++m) {
        CHECK(std::abs(g.at(m, m) + std::pow(s, 2 * m) / static_cast<double>(m)) < 1e-12);
        CHECK(std::abs(g.pure_z()[m - 1] - 2.0 * std::pow(s, m) / static_cast<double>(m)) < 1e-12);
        for (int n = 1; n <= 8; ++n)
            if (n != m) CHECK(std::abs(g.at(m, n)) < 1e-12);
    }
}

TEST_CASE("block symmetry is bitwise") {
    GaussStream gs(31);
    const GrunskyMatrix g = grunsky_matrix(random_normalized(33, gs), 16);
    for (int m = 1; m <= 16; ++m)
        for (int n = 1; n <= 16; ++n) CHECK(g.at(m, n) == g.at(n, m));
}

TEST_CASE("construction validates its inputs") {
    CHECK_THROWS_AS(grunsky_matrix(koebe(15), 8), std::invalid_argument);
    CHECK_THROWS_AS(grunsky_matrix(koebe(17), 0), std::invalid_argument);
    CHECK_THROWS_AS(grunsky_matrix(koebe(140), 65), std::invalid_argument);
    std::vector<cplx> c(18, 0.0);
    c[1] = 2.0;
    CHECK_THROWS_AS(grunsky_matrix(TruncatedSeries(c), 8), std::invalid_argument);
}

TEST_CASE("form norm closed forms at order 48") {
    const double nk = grunsky_form_norm(grunsky_matrix(koebe(97), 48));
    CHECK(nk == doctest::Approx(1.0).epsilon(1e-8));
    const double nf = grunsky_form_norm(grunsky_matrix(fk_series(0.5, 1.0, 97), 48));
    CHECK(nf == doctest::Approx(0.25).epsilon(1e-8));

    // deterministic: identical bits on a repeat run
    CHECK(grunsky_form_norm(grunsky_matrix(koebe(97), 48)) == nk);
}

TEST_CASE("coefficient bound verdicts") {
    const auto pass = coefficient_bound_check(grunsky_matrix(koebe(33), 16));
    CHECK(pass.verdict == "pass");
    CHECK(pass.computed.at(0).second == doctest::Approx(1.0).epsilon(1e-12));

    const auto fail =
        coefficient_bound_check(grunsky_matrix(padded(TruncatedSeries({0.0, 1.0, 1.0}), 33), 16));
    CHECK(fail.verdict == "fail");
    CHECK(fail.computed.at(0).second == doctest::Approx(300540195.0).epsilon(1e-9));
    CHECK(verify_report_hash(fail.to_json()));
}

TEST_CASE("sequence norm closed forms") {
    CHECK(seq_norm(grunsky_matrix(koebe(97), 48)) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(seq_norm(grunsky_matrix(fk_series(0.5, 1.0, 97), 48)) ==
          doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("scaled radius saturates for univalent examples") {
    CHECK(scaled_radius(grunsky_matrix(koebe(33), 16)) == 1.0);
    CHECK(scaled_radius(grunsky_matrix(fk_series(0.5, 1.0, 33), 16)) == 1.0);
}

TEST_CASE("inverse of the slit map fails the form bound") {
    const GrunskyMatrix g = grunsky_of_inverse(koebe(33), 16);
    const double norm = grunsky_form_norm(g);
    CHECK(norm == doctest::Approx(9.676324858206083e16).epsilon(1e-6));
    CHECK(norm > 1.0); // certifies the inverse is not univalent on the disk
    CHECK(scaled_radius(g) == doctest::Approx(0.27736949920654297).epsilon(1e-6));
}

TEST_CASE("inverse of the identity is trivial") {
    const GrunskyMatrix g = grunsky_of_inverse(TruncatedSeries::identity(33), 16);
    CHECK(grunsky_form_norm(g) == 0.0);
}

TEST_CASE("form norm grows with truncation order") {
    const TruncatedSeries zz2 = padded(TruncatedSeries({0.0, 1.0, 1.0}), 33);
    const double n8 = grunsky_form_norm(grunsky_matrix(zz2, 8));
    const double n16 = grunsky_form_norm(grunsky_matrix(zz2, 16));
    CHECK(n8 <= n16 * (1.0 + 1e-10));

    GaussStream gs(7);
    const TruncatedSeries f = random_normalized(25, gs);
    const double r8 = grunsky_form_norm(grunsky_matrix(f, 8));
    const double r12 = grunsky_form_norm(grunsky_matrix(f, 12));
    CHECK(r8 <= r12 * (1.0 + 1e-10));

    CHECK(grunsky_form_norm(grunsky_matrix(koebe(97), 8)) <=
          grunsky_form_norm(grunsky_matrix(koebe(97), 16)) + 1e-10);
}

TEST_CASE("power iteration agrees with random-sampling lower bounds") {
    GaussStream gs(2718);

    const WeightedForm bk = weighted_form(grunsky_matrix(koebe(17), 8));
    const double nk = form_norm(bk);
    const double sk = sample_form_max(bk, 10000, gs);
    CHECK(sk <= nk * (1.0 + 1e-12));
    CHECK(nk <= sk * 1.05);

    const WeightedForm bf = weighted_form(grunsky_matrix(fk_series(0.9, 1.0, 17), 8));
    const double nf = form_norm(bf);
    const double sf = sample_form_max(bf, 10000, gs);
    CHECK(sf <= nf * (1.0 + 1e-12));
    CHECK(nf <= sf * 1.05);

    for (int rep = 0; rep < 2; ++rep) {
        WeightedForm b;
        b.order = 3;
        b.b.resize(9);
        for (int m = 1; m <= 3; ++m)
            for (int n = m; n <= 3; ++n) {
                const cplx v(gs.next(), gs.next());
                b.at(m, n) = v;
                b.at(n, m) = v;
            }
        const double nb = form_norm(b);
        const double sb = sample_form_max(b, 10000, gs);
        CHECK(sb <= nb * (1.0 + 1e-12));
        CHECK(nb <= sb * 1.05);
    }
}

TEST_CASE("diagonal rescaling matches the closed form") {
    // For the slit map the rescaled form is diag(-r^{2n}), so its norm is r^2.
    const WeightedForm base = weighted_form(grunsky_matrix(koebe(17), 8));
    const double r = 0.5;
    WeightedForm s = base;
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) s.at(m, n) *= std::pow(r, m + n);
    CHECK(form_norm(s) == doctest::Approx(r * r).epsilon(1e-10));
}
