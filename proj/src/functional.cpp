#include "gft/functional.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gft/errors.hpp"
#include "gft/experiments.hpp"
#include "gft/rng.hpp"
#include "gft/schwarzian.hpp"

namespace gft {

Polynomial::Polynomial(cplx constant) {
    if (constant != cplx(0.0))
        terms_[Monomial()] = constant;
}

Polynomial Polynomial::variable(int index) {
    Polynomial p;
    p.terms_[Monomial{{index, 1}}] = 1.0;
    return p;
}

void Polynomial::add_term(const Monomial& m, cplx coeff) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (coeff != cplx(0.0))
            terms_[m] = coeff;
        return;
    }
    it->second += coeff;
    if (it->second == cplx(0.0))
        terms_.erase(it);
}

std::vector<int> Polynomial::variables() const {
    std::vector<int> v;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, pw] : m)
            if (std::find(v.begin(), v.end(), var) == v.end())
                v.push_back(var);
    std::sort(v.begin(), v.end());
    return v;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.push_back({a[i].first, a[i].second + b[j].second});
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(merge_monomials(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(cplx s) const {
    Polynomial r;
    if (s == cplx(0.0))
        return r;
    for (const auto& [m, c] : terms_)
        r.terms_[m] = c * s;
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != var)
                continue;
            Monomial d = m;
            const int pw = d[i].second;
            if (pw == 1)
                d.erase(d.begin() + i);
            else
                d[i].second = pw - 1;
            r.add_term(d, c * double(pw));
            break;
        }
    }
    return r;
}

cplx Polynomial::evaluate(const std::map<int, cplx>& assignment) const {
    cplx total = 0.0;
    for (const auto& [m, c] : terms_) {
        cplx t = c;
        for (const auto& [var, pw] : m) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw std::invalid_argument("polynomial evaluation: variable " +
                                            std::to_string(var) + " unassigned");
            for (int p = 0; p < pw; ++p)
                t *= it->second;
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& args) const {
    Polynomial total;
    for (const auto& [m, c] : terms_) {
        Polynomial t(1.0);
        t = t.scaled(c);
        for (const auto& [var, pw] : m) {
            auto it = args.find(var);
            if (it == args.end())
                throw std::invalid_argument("polynomial substitution: variable " +
                                            std::to_string(var) + " unassigned");
            for (int p = 0; p < pw; ++p)
                t = t * it->second;
        }
        total = total + t;
    }
    return total;
}

bool approx_equal(const Polynomial& p, const Polynomial& q, double tol) {
    const Polynomial d = p - q;
    for (const auto& [m, c] : d.terms())
        if (std::abs(c) > tol)
            return false;
    return true;
}

FunctionalSpec make_functional(char alphabet, std::vector<int> indices, Polynomial poly) {
    if (alphabet != 'a' && alphabet != 'b')
        throw std::invalid_argument("make_functional: alphabet must be 'a' or 'b'");
    if (indices.empty())
        throw std::invalid_argument("make_functional: need at least one index");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 2)
            throw std::invalid_argument("make_functional: indices start at 2");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw std::invalid_argument("make_functional: indices must increase strictly");
    }
    for (int v : poly.variables())
        if (std::find(indices.begin(), indices.end(), v) == indices.end())
            throw std::invalid_argument("make_functional: variable " + std::to_string(v) +
                                        " outside the declared indices");
    bool grad = false;
    for (int v : indices)
        if (!poly.derivative(v).is_zero())
            grad = true;
    if (!grad)
        throw std::invalid_argument("make_functional: gradient vanishes identically");
    FunctionalSpec J;
    J.alphabet = alphabet;
    J.indices = std::move(indices);
    J.poly = std::move(poly);
    return J;
}

InversionTable::InversionTable(std::vector<Polynomial> rows) : rows_(std::move(rows)) {
    if (rows_.size() < 3)
        throw std::invalid_argument("InversionTable: need rows up to index 2");
}

const Polynomial& InversionTable::row(int n) const {
    if (n < 2 || n >= static_cast<int>(rows_.size()))
        throw std::invalid_argument("InversionTable: row " + std::to_string(n) +
                                    " out of range");
    return rows_[n];
}

InversionTable inversion_polynomials(int N) {
    if (N < 2)
        throw std::invalid_argument("inversion_polynomials: need N >= 2");
    // reversion of z + a_2 z^2 + ... with symbolic coefficients: the w^n
    // condition on f(g(w)) = w determines g_n from g_2..g_{n-1}
    std::vector<Polynomial> F(N + 1);
    F[1] = Polynomial(1.0);
    for (int j = 2; j <= N; ++j)
        F[j] = Polynomial::variable(j);
    std::vector<Polynomial> G(N + 1);
    G[1] = Polynomial(1.0);
    for (int n = 2; n <= N; ++n) {
        std::vector<Polynomial> total(n + 1);
        std::vector<Polynomial> gk(n + 1);
        gk[0] = Polynomial(1.0);
        for (int j = 1; j <= n; ++j) {
            std::vector<Polynomial> nxt(n + 1);
            for (int p = 0; p <= n; ++p) {
                if (gk[p].is_zero())
                    continue;
                for (int q = 1; p + q <= n; ++q) {
                    if (G[q].is_zero())
                        continue;
                    nxt[p + q] = nxt[p + q] + gk[p] * G[q];
                }
            }
            gk = std::move(nxt);
            for (int p = 0; p <= n; ++p)
                total[p] = total[p] + F[j] * gk[p];
        }
        G[n] = Polynomial() - total[n];
    }
    return InversionTable(std::move(G));
}

FunctionalSpec transform_functional(const FunctionalSpec& J, const InversionTable& T) {
    if (J.indices.back() > T.size())
        throw std::invalid_argument("transform_functional: table too small for index " +
                                    std::to_string(J.indices.back()));
    std::map<int, Polynomial> args;
    for (int v : J.poly.variables())
        args[v] = T.row(v);
    Polynomial out = J.poly.substitute(args);
    return make_functional(J.alphabet == 'a' ? 'b' : 'a', out.variables(), std::move(out));
}

TruncatedSeries phi0(const FunctionalSpec& Jt, const std::map<int, cplx>& at,
                     KernelChoice kernel, bool* degenerate) {
    for (int v : Jt.poly.variables())
        if (!at.count(v))
            throw std::invalid_argument("phi0: assignment missing variable " +
                                        std::to_string(v));
    const int top = Jt.indices.back() + kernel.exponent_offset;
    if (Jt.indices.front() + kernel.exponent_offset < 0)
        throw std::invalid_argument("phi0: kernel exponent below zero");
    std::vector<cplx> c(top + 1, 0.0);
    bool any = false;
    for (int n : Jt.indices) {
        const cplx lambda = Jt.poly.derivative(n).evaluate(at);
        c[n + kernel.exponent_offset] = lambda;
        if (lambda != cplx(0.0))
            any = true;
    }
    if (degenerate)
        *degenerate = !any;
    return TruncatedSeries(std::move(c));
}

cplx extremal_mu(const TruncatedSeries& phi0_poly, double k, cplx z) {
    if (k < 0.0)
        throw std::domain_error("extremal_mu: need k >= 0");
    if (std::abs(z) <= 1.0)
        throw std::domain_error("extremal_mu: defined on the extension region |z| > 1");
    const cplx v = evaluate(phi0_poly, z);
    if (std::abs(v) < 1e-300) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "extremal_mu: phi0 vanishes at z = (%g, %g)",
                      z.real(), z.imag());
        throw singularity_error(buf);
    }
    return k * std::abs(v) / v;
}

cplx evaluate_functional(const FunctionalSpec& J, const TruncatedSeries& f) {
    if (f.order() < J.indices.back())
        throw std::invalid_argument("evaluate_functional: series order " +
                                    std::to_string(f.order()) + " below index " +
                                    std::to_string(J.indices.back()));
    std::map<int, cplx> at;
    for (int v : J.poly.variables())
        at[v] = f[v];
    return J.poly.evaluate(at);
}

namespace {

double frac(double x) { return x - std::floor(x); }

} // namespace

SearchResult parametric_search(const FunctionalSpec& J, double k, int budget,
                               std::uint64_t seed) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::invalid_argument("parametric_search: need 0 <= k < 1");
    if (budget < 1)
        throw std::invalid_argument("parametric_search: need budget >= 1");

    const int order = std::max(32, J.indices.back());
    SearchResult res;
    res.best_value = -1.0;

    auto record = [&](const SearchCandidate& cand, double value) {
        SearchTraceEntry e;
        e.index = static_cast<int>(res.trace.size());
        e.params = cand;
        e.value = value;
        res.trace.push_back(e);
        if (value > res.best_value) {
            res.best_value = value;
            res.argmax = cand;
        }
    };

    auto eval_extremal = [&](double kp, double th, const char* family) {
        const TruncatedSeries f = extremal_fk({kp, std::polar(1.0, th)}, order);
        const double v = std::abs(evaluate_functional(J, f));
        record({family, kp, th, 0.0}, v);
        return v;
    };

    // the explored prefix is nested as the budget grows
    const int explore = budget <= 8 ? budget : 8 + (budget - 8) / 2;
    static const double corner_theta[4] = {0.0, std::numbers::pi, std::numbers::pi / 2,
                                           -std::numbers::pi / 2};
    double best_corner_theta = 0.0;
    double best_corner_value = -1.0;
    for (int i = 0; i < explore; ++i) {
        if (i < 4) {
            const double v = eval_extremal(k, corner_theta[i], "extremal");
            if (v > best_corner_value) {
                best_corner_value = v;
                best_corner_theta = corner_theta[i];
            }
        } else if (i % 4 == 0) {
            SplitMix64 u(trial_seed(seed, i));
            const double target = 2.0 * k * u.uniform01();
            const QuadDifferential phi =
                sample_schwarzian(target, 6, trial_seed(trial_seed(seed, i), 1));
            const TruncatedSeries w = solve_schwarzian(phi, order);
            record({"sampled", k, 0.0, target}, std::abs(evaluate_functional(J, w)));
        } else {
            const double th = 2.0 * std::numbers::pi * frac(i * 0.6180339887498949);
            const double kp = k * frac(i * 0.7548776662466927);
            eval_extremal(kp, th, "extremal");
        }
    }

    // golden refinement of the angle around the best corner; the bracket
    // depends only on the corner set, so longer runs extend shorter ones
    int refine = budget - explore;
    if (refine > 0) {
        const double iphi = 0.6180339887498949;
        double lo = best_corner_theta - 0.7;
        double hi = best_corner_theta + 0.7;
        double x1 = hi - iphi * (hi - lo);
        double x2 = lo + iphi * (hi - lo);
        double f1 = 0.0, f2 = 0.0;
        int used = 0;
        if (used < refine) {
            f1 = eval_extremal(k, x1, "refined");
            ++used;
        }
        if (used < refine) {
            f2 = eval_extremal(k, x2, "refined");
            ++used;
        }
        while (used < refine) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + iphi * (hi - lo);
                f2 = eval_extremal(k, x2, "refined");
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - iphi * (hi - lo);
                f1 = eval_extremal(k, x1, "refined");
            }
            ++used;
        }
    }
    return res;
}

FunctionalSpec parse_functional(std::istream& in) {
    Polynomial poly;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        double re = 0.0, im = 0.0;
        std::string colon;
        if (!(ls >> re >> im >> colon) || colon != ":")
            throw std::invalid_argument("functional line " + std::to_string(lineno) +
                                        ": expected \"re im : terms\"");
        std::map<int, int> powers;
        std::string tok;
        while (ls >> tok) {
            int var = 0, pw = 1;
            const auto caret = tok.find('^');
            try {
                if (caret == std::string::npos) {
                    var = std::stoi(tok);
                } else {
                    var = std::stoi(tok.substr(0, caret));
                    pw = std::stoi(tok.substr(caret + 1));
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("functional line " + std::to_string(lineno) +
                                            ": bad term \"" + tok + "\"");
            }
            if (var < 2 || pw < 1)
                throw std::invalid_argument("functional line " + std::to_string(lineno) +
                                            ": bad term \"" + tok + "\"");
            powers[var] += pw;
        }
        Monomial m(powers.begin(), powers.end());
        poly.add_term(m, cplx(re, im));
    }
    return make_functional('a', poly.variables(), poly);
}

void format_functional(std::ostream& out, const FunctionalSpec& J) {
    char buf[64];
    for (const auto& [m, c] : J.poly.terms()) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g :", c.real(), c.imag());
        out << buf;
        for (const auto& [var, pw] : m)
            out << ' ' << var << '^' << pw;
        out << '\n';
    }
}

} // namespace gft
