#ifndef FLAGCOH_POLYNOMIAL_HPP
#define FLAGCOH_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "flagcoh/partition.hpp"

namespace flagcoh {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponent = std::vector<int>;

/// Graded lexicographic order, largest first: higher total degree wins, then
/// the first differing exponent decides (x1 > x2 > ...).
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in x_1..x_d with exact rational coefficients. Every x_i
/// has cohomological degree 2; `degree()` reports the polynomial degree.
/// No zero coefficient is ever stored.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, GrlexGreater>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    /// x_{i+1} (i is 0-based).
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(Exponent e, const Rational& c = 1);

    int nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    Rational coefficient(const Exponent& e) const;

    /// Largest total degree, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Polynomial homogeneous_component(int degree) const;

    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Natural embedding into a ring with more variables (new ones last).
    Polynomial embed(int nvars) const;

    /// Terms in graded-lex order, e.g. "1/1*x6*x11 + -1/2*x1^2". Zero is "0".
    std::string to_string() const;
    /// Inverse of to_string; also accepts integer coefficients and bare
    /// monomials such as "x1*x2".
    static Polynomial parse(const std::string& text, int nvars);

private:
    void check_compatible(const Polynomial& o) const;

    int nvars_ = 0;
    TermMap terms_;
};

/// w · x_i = x_{w(i)}, with w a 0-based permutation of {0..d-1}.
Polynomial permute(std::span<const int> w, const Polynomial& p);
int permutation_sign(std::span<const int> w);

/// Variable blocks X_1..X_n of a composition: block j holds μ_j consecutive
/// variables.
class BlockStructure {
public:
    explicit BlockStructure(Composition mu);

    const Composition& mu() const noexcept { return mu_; }
    int nvars() const noexcept { return mu_.size(); }
    std::size_t blocks() const noexcept { return mu_.length(); }
    /// First variable (0-based) of block j (1-based).
    int begin(std::size_t j) const;
    int end(std::size_t j) const;
    /// 0-based variables in the union of the given 1-based blocks. The blocks
    /// must be strictly increasing and in range.
    std::vector<int> variables(std::span<const int> blocks) const;
    /// All elements of S_μ as 0-based permutations.
    std::vector<std::vector<int>> group_elements() const;

private:
    Composition mu_;
    std::vector<int> offsets_;
};

/// r-th elementary / complete symmetric polynomial in the given variables of
/// a d-variable ring (1 for r = 0, 0 for r < 0).
Polynomial elementary_symmetric(int nvars, std::span<const int> vars, int r);
Polynomial complete_symmetric(int nvars, std::span<const int> vars, int r);

/// e_r(μ; i_1..i_m) and h_r(μ; i_1..i_m). Blocks are 1-based and must be a
/// non-empty strictly increasing list.
Polynomial elementary_block(const Composition& mu, std::span<const int> blocks, int r);
Polynomial complete_block(const Composition& mu, std::span<const int> blocks, int r);

/// Expands both sides of the block convolution identities for e and h and
/// compares them exactly.
bool convolution_identity_check(const Composition& mu, std::span<const int> blocks, int r);

/// ε_μ: (1/|S_μ|) times the product of (x_i - x_j), i < j in the same block.
Polynomial block_antisymmetrizer(const Composition& mu);

/// Exponents sorted weakly decreasing inside each block, i.e. one
/// representative per S_μ-orbit; returned in graded-lex order, largest first.
std::vector<Exponent> canonical_exponents(const Composition& mu, int degree);
bool is_canonical(const Composition& mu, const Exponent& e);
/// Sum of the distinct monomials in the S_μ-orbit of e.
Polynomial orbit_sum(const Composition& mu, const Exponent& e);
/// Orbit sums spanning the component of cohomological degree `coh_degree`
/// of the invariant ring. Throws InvalidArgument on odd or negative degree.
std::vector<Polynomial> invariant_monomial_basis(const Composition& mu, int coh_degree);
/// True iff the coefficients of p are constant on S_μ-orbits.
bool is_block_invariant(const Composition& mu, const Polynomial& p);

}  // namespace flagcoh

#endif  // FLAGCOH_POLYNOMIAL_HPP
