#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gft/series.hpp"

namespace gft {

// Sparse multivariate polynomial over complex coefficients.  A monomial is
// the sorted list of (variable index, power) with powers >= 1; the empty
// monomial is the constant term.  Variable indices name series coefficients
// (variable n stands for the n-th coefficient in the active alphabet).
using Monomial = std::vector<std::pair<int, int>>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(cplx constant);
    static Polynomial variable(int index);

    // terms with coefficient exactly zero are dropped
    void add_term(const Monomial& m, cplx coeff);

    const std::map<Monomial, cplx>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::vector<int> variables() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(cplx s) const;

    Polynomial derivative(int var) const;

    // throws std::invalid_argument naming the first unassigned variable
    cplx evaluate(const std::map<int, cplx>& assignment) const;

    // simultaneous substitution of every variable
    Polynomial substitute(const std::map<int, Polynomial>& args) const;

private:
    std::map<Monomial, cplx> terms_;
};

bool approx_equal(const Polynomial& p, const Polynomial& q, double tol);

// Coefficient functional J(a_{n_1}, ..., a_{n_s}).  The alphabet marks which
// coefficient family the variables refer to: 'a' for the function itself,
// 'b' for its compositional inverse.
struct FunctionalSpec {
    char alphabet = 'a';
    std::vector<int> indices; // sorted, strictly increasing, all >= 2
    Polynomial poly;
};

// Validates the invariants: index layout, poly variables within indices,
// gradient not identically zero.
FunctionalSpec make_functional(char alphabet, std::vector<int> indices, Polynomial poly);

// Rows 2..N express the inverse-series coefficients b_n through a_2..a_n;
// generated by formal reversion with symbolic coefficients.
class InversionTable {
public:
    explicit InversionTable(std::vector<Polynomial> rows); // rows[n] at index n
    int size() const { return static_cast<int>(rows_.size()) - 1; }
    const Polynomial& row(int n) const;

private:
    std::vector<Polynomial> rows_;
};

InversionTable inversion_polynomials(int N);

// Substitutes each variable through the table and flips the alphabet.
// The coefficient map is an involution, so applying this twice returns the
// original functional.
FunctionalSpec transform_functional(const FunctionalSpec& J, const InversionTable& T);

// kernel_n(z) = z^{n + exponent_offset}; the default offset 1 is the unique
// monomial choice whose Beltrami phase matches the extremal field of the
// second-coefficient functional.
struct KernelChoice {
    int exponent_offset = 1;
};

// phi_0(z) = sum_l (dJ/db_{n_l} at the assignment) * kernel_{n_l}(z),
// returned as a polynomial in z.  A zero gradient at the assignment yields
// the zero polynomial and sets *degenerate when provided.
TruncatedSeries phi0(const FunctionalSpec& Jt, const std::map<int, cplx>& at,
                     KernelChoice kernel = {}, bool* degenerate = nullptr);

// k |phi0(z)| / phi0(z) on |z| > 1; modulus is exactly k away from zeros.
cplx extremal_mu(const TruncatedSeries& phi0_poly, double k, cplx z);

// Polynomial evaluation at the series coefficients; the series order must
// reach the largest index of J.
cplx evaluate_functional(const FunctionalSpec& J, const TruncatedSeries& f);

struct SearchCandidate {
    std::string family; // "extremal" | "sampled" | "refined"
    double k_prime = 0.0;
    double theta = 0.0;
    double target_norm = 0.0; // sampled family only
};

struct SearchTraceEntry {
    int index = 0;
    SearchCandidate params;
    double value = 0.0;
};

struct SearchResult {
    double best_value = 0.0;
    SearchCandidate argmax;
    std::vector<SearchTraceEntry> trace;
};

// Deterministic lower-bound search for max |J|: a fixed corner + lattice +
// sampled enumeration, then golden refinement of the slit-family angle
// around the best corner.  The evaluated prefix is nested in the budget, so
// best_value never decreases as the budget grows (same seed).
SearchResult parametric_search(const FunctionalSpec& J, double k, int budget,
                               std::uint64_t seed);

// Text format, one term per line: "coeff_re coeff_im : n1^p1 n2^p2 ...".
// An empty tail after ':' is the constant term; "n" abbreviates "n^1".
FunctionalSpec parse_functional(std::istream& in);
void format_functional(std::ostream& out, const FunctionalSpec& J);

} // namespace gft
