#include "gft/univalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gft/errors.hpp"
#include "gft/grunsky.hpp"
#include "gft/parallel.hpp"

namespace gft {

namespace {

int orient(const cplx& a, const cplx& b, const cplx& c) {
    const double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
                     (b.imag() - a.imag()) * (c.real() - a.real());
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(const cplx& a, const cplx& b, const cplx& c) {
    return std::min(a.real(), b.real()) <= c.real() &&
           c.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= c.imag() &&
           c.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(const cplx& p1, const cplx& p2, const cplx& q1,
                        const cplx& q2) {
    const int o1 = orient(p1, p2, q1);
    const int o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1);
    const int o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

void validate_rhos(const std::vector<double>& rhos) {
    if (rhos.empty())
        throw std::invalid_argument("univalence: need at least one radius");
    double prev = 0.0;
    for (double r : rhos) {
        if (!(r > prev && r < 1.0))
            throw std::invalid_argument(
                "univalence: radii must be strictly increasing inside (0, 1)");
        prev = r;
    }
}

double min_modulus(const TruncatedSeries& f, double rho, int M) {
    const BoundaryCurve c = boundary_curve(f, rho, M);
    double best = std::abs(c.points[0]);
    for (const cplx& p : c.points) best = std::min(best, std::abs(p));
    return best;
}

} // namespace

BoundaryCurve boundary_curve(const TruncatedSeries& f, double rho, int M) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("boundary_curve: rho must lie in (0, 1)");
    if (M < 16)
        throw std::invalid_argument("boundary_curve: need at least 16 points");
    BoundaryCurve c;
    c.rho = rho;
    c.closed = true;
    c.points.resize(M);
    const double dth = 2.0 * std::numbers::pi / M;
    parallel_for(static_cast<std::size_t>(M), [&](std::size_t j) {
        c.points[j] = evaluate(f, std::polar(rho, dth * static_cast<double>(j)));
    });
    return c;
}

bool jordan_test(const BoundaryCurve& curve) {
    const auto& p = curve.points;
    const int m = static_cast<int>(p.size());
    if (!curve.closed || m < 16)
        throw std::invalid_argument("jordan_test: need a closed curve with >= 16 points");
    for (int i = 0; i < m; ++i)
        if (p[i] == p[(i + 1) % m])
            throw std::invalid_argument("jordan_test: zero-length segment");

    for (int i = 0; i < m; ++i) {
        const cplx& a = p[i];
        const cplx& b = p[(i + 1) % m];
        const double alo = std::min(a.real(), b.real()), ahi = std::max(a.real(), b.real());
        const double blo = std::min(a.imag(), b.imag()), bhi = std::max(a.imag(), b.imag());
        for (int j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue; // adjacent around the seam
            const cplx& c = p[j];
            const cplx& d = p[(j + 1) % m];
            if (std::max(c.real(), d.real()) < alo || std::min(c.real(), d.real()) > ahi ||
                std::max(c.imag(), d.imag()) < blo || std::min(c.imag(), d.imag()) > bhi)
                continue;
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

bool numeric_univalence(const TruncatedSeries& f, const std::vector<double>& rhos,
                        int M) {
    validate_rhos(rhos);
    if (M < 16)
        throw std::invalid_argument("numeric_univalence: need at least 16 points");

    // zero count of f' inside the outermost circle, by winding number
    const TruncatedSeries fp = derivative(f);
    const int ws = std::max(M, 4096);
    const double rmax = rhos.back();
    const double dth = 2.0 * std::numbers::pi / ws;
    std::vector<cplx> vals(ws);
    parallel_for(static_cast<std::size_t>(ws), [&](std::size_t j) {
        vals[j] = evaluate(fp, std::polar(rmax, dth * static_cast<double>(j)));
    });
    double acc = 0.0;
    for (int j = 0; j < ws; ++j) {
        const cplx& w0 = vals[j];
        const cplx& w1 = vals[(j + 1) % ws];
        if (w0 == cplx(0.0) || w1 == cplx(0.0)) return false;
        acc += std::arg(w1 / w0);
    }
    if (std::lround(acc / (2.0 * std::numbers::pi)) != 0) return false;

    std::vector<char> ok(rhos.size(), 0);
    parallel_for(rhos.size(), [&](std::size_t i) {
        ok[i] = jordan_test(boundary_curve(f, rhos[i], M)) ? 1 : 0;
    });
    return std::all_of(ok.begin(), ok.end(), [](char v) { return v == 1; });
}

double covering_radius(const TruncatedSeries& f, const std::vector<double>& rho_ladder,
                       int M) {
    validate_rhos(rho_ladder);
    if (rho_ladder.size() < 2)
        throw std::invalid_argument("covering_radius: need at least two ladder rungs");
    if (M < 16)
        throw std::invalid_argument("covering_radius: need at least 16 points");
    const double r1 = rho_ladder[rho_ladder.size() - 2];
    const double r2 = rho_ladder.back();
    const double m1 = min_modulus(f, r1, M);
    const double m2 = min_modulus(f, r2, M);
    const double e1 = 1.0 - r1;
    const double e2 = 1.0 - r2;
    return m2 + (m2 - m1) * e2 / (e1 - e2);
}

std::string BiunivalenceCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["a2_modulus"] = a2_modulus;
    j["netanyahu_pass"] = netanyahu_pass;
    j["lemma2_pass"] = lemma2_pass;
    j["grunsky_f_norm"] = grunsky_f_norm ? nlohmann::ordered_json(*grunsky_f_norm)
                                         : nlohmann::ordered_json(nullptr);
    j["grunsky_inverse_norm"] = grunsky_inverse_norm
                                    ? nlohmann::ordered_json(*grunsky_inverse_norm)
                                    : nlohmann::ordered_json(nullptr);
    j["covering_radius"] = covering_radius ? nlohmann::ordered_json(*covering_radius)
                                           : nlohmann::ordered_json(nullptr);
    j["numeric_univalence"] = numeric_univalence
                                  ? nlohmann::ordered_json(*numeric_univalence)
                                  : nlohmann::ordered_json(nullptr);
    j["overall"] = overall;
    if (!errors.empty()) {
        j["errors"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : errors) j["errors"][k] = v;
    }
    return j.dump(2) + "\n";
}

BiunivalenceCertificate biunivalence_certificates(const TruncatedSeries& f,
                                                  const RunConfig& cfg) {
    if (f[0] != cplx(0.0) || std::abs(f[1] - 1.0) > 1e-12)
        throw std::invalid_argument("biunivalence_certificates: need f(0) = 0, f'(0) = 1");

    BiunivalenceCertificate cert;
    cert.a2_modulus = f.order() >= 2 ? std::abs(f[2]) : 0.0;
    cert.netanyahu_pass = cert.a2_modulus <= 4.0 / 3.0 + cfg.tol_norm;
    cert.lemma2_pass = cert.a2_modulus <= 0.5 + cfg.tol_norm;

    const int ng = std::min(cfg.grunsky_order, f.order() / 2);
    if (ng >= 1) {
        const TruncatedSeries head = truncated(f, std::min(f.order(), 2 * ng + 1));
        try {
            cert.grunsky_f_norm = grunsky_form_norm(grunsky_matrix(head, ng));
        } catch (const std::exception& e) {
            cert.errors.emplace_back("grunsky_f_norm", e.what());
        }
        try {
            cert.grunsky_inverse_norm = grunsky_form_norm(grunsky_of_inverse(head, ng));
        } catch (const std::exception& e) {
            cert.errors.emplace_back("grunsky_inverse_norm", e.what());
        }
    } else {
        cert.errors.emplace_back("grunsky_f_norm", "series order too small");
        cert.errors.emplace_back("grunsky_inverse_norm", "series order too small");
    }

    try {
        cert.covering_radius = covering_radius(f, cfg.ladder_rhos, cfg.curve_samples);
    } catch (const std::exception& e) {
        cert.errors.emplace_back("covering_radius", e.what());
    }
    try {
        cert.numeric_univalence = numeric_univalence(f, cfg.ladder_rhos, cfg.curve_samples);
    } catch (const std::exception& e) {
        cert.errors.emplace_back("numeric_univalence", e.what());
    }

    const bool refuted = !cert.netanyahu_pass ||
                         (cert.numeric_univalence && !*cert.numeric_univalence);
    const bool certified =
        cert.netanyahu_pass && cert.numeric_univalence && *cert.numeric_univalence &&
        cert.grunsky_f_norm && *cert.grunsky_f_norm <= 1.0 + cfg.tol_norm &&
        cert.grunsky_inverse_norm && *cert.grunsky_inverse_norm <= 1.0 + cfg.tol_norm &&
        cert.covering_radius && *cert.covering_radius >= 1.0 - cfg.tol_geometric;
    cert.overall = refuted ? "refuted" : certified ? "certified" : "indeterminate";
    return cert;
}

ClaimReport lemma1_covering_check(const std::vector<TruncatedSeries>& family,
                                  const RunConfig& cfg) {
    if (family.empty())
        throw std::invalid_argument("lemma1_covering_check: empty family");

    double a2max = 0.0;
    for (const auto& f : family)
        if (f.order() >= 2) a2max = std::max(a2max, std::abs(f[2]));

    ClaimReport rep;
    rep.claim_id = "covering-from-second-coefficient";
    rep.paper_anchor =
        "every member covers entirely the disk |w| < 1/(2 |a2^0|), and that radius is sharp";
    rep.inputs = {{"family_size", std::to_string(family.size())}};
    rep.tolerance = cfg.tol_geometric;
    rep.config = cfg.canonical();

    if (a2max < 1e-12) {
        rep.computed = {{"a2_max", a2max}};
        rep.notes = {{"prediction", "inapplicable (a2_max = 0)"}};
        rep.verdict = "indeterminate";
        return rep;
    }

    const double prediction = 1.0 / (2.0 * a2max);
    std::vector<double> covers(family.size());
    parallel_for(family.size(), [&](std::size_t i) {
        covers[i] = covering_radius(family[i], cfg.ladder_rhos, cfg.curve_samples);
    });
    bool all = true;
    double worst = covers[0];
    for (std::size_t i = 0; i < covers.size(); ++i) {
        worst = std::min(worst, covers[i]);
        const bool ok = covers[i] >= prediction - cfg.tol_geometric;
        all = all && ok;
        std::ostringstream note;
        note << "covering = " << covers[i] << (ok ? " (pass)" : " (fail)");
        rep.notes.emplace_back("member_" + std::to_string(i), note.str());
    }
    rep.computed = {{"a2_max", a2max}, {"prediction", prediction}, {"min_covering", worst}};
    rep.verdict = all ? "pass" : "fail";
    return rep;
}

} // namespace gft
