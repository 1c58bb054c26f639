#ifndef FLAGCOH_PRESENTATION_HPP
#define FLAGCOH_PRESENTATION_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagcoh/invariant_ring.hpp"
#include "flagcoh/polynomial.hpp"
#include "flagcoh/tableau.hpp"

namespace flagcoh {

/// H: complete symmetric generators h_r(μ;S). E: elementary generators e_r(μ;S).
enum class Family { H, E };

const char* to_string(Family f) noexcept;
/// "H" or "E"; throws InvalidArgument otherwise.
Family parse_family(const std::string& text);

/// Throws InvalidArgument unless λ has at most len(μ) parts and |λ| = |μ|.
void check_pair(const Partition& lambda, const Composition& mu);

/// Generators of the family for block set S are the r > bound.
int generator_bound(const Partition& lambda, const Composition& mu, Family f, std::span<const int> blocks);

struct GeneratorElement {
    std::vector<int> blocks;  ///< 1-based, increasing
    int r = 0;
    Polynomial poly;          ///< in x_1..x_d
};

/// Non-zero family members of cohomological degree ≤ max_coh_degree, ordered
/// by |S|, then S lexicographically, then r.
std::vector<GeneratorElement> generators(const Partition& lambda, const Composition& mu, Family f,
                                         int max_coh_degree);

/// Distinct non-zero e_r(x_I), |I| = m, r > m - (λ_{d-m+1} + ... ), generating
/// the ideal of the Springer fiber in d variables.
std::vector<Polynomial> tanisaki_generators(const Partition& lambda, int d);

/// Graded dimensions: coefficients[r] is the dimension in cohomological
/// degree 2r. Trailing zeros are trimmed.
struct HilbertSeries {
    std::vector<long> coefficients;

    HilbertSeries() = default;
    explicit HilbertSeries(std::vector<long> c);

    long total() const;
    /// Value at q (with the series read as Σ c_r q^{2r}).
    Integer evaluate(long q) const;
    std::string to_string() const;
    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// C^λ_μ = P_μ / I^λ_μ, computed degree by degree up to a truncation degree
/// in the free generators z of P_μ. For every degree D (polynomial degree in
/// x, i.e. cohomological degree 2D) it stores the canonical reduced echelon
/// form of I_D for the lexicographic order on z-monomials: the standard
/// monomials and, for every leading monomial, its normal form.
class GradedQuotient {
public:
    /// max_degree < 0 selects max(0, d_λ - d_μ) + max(1, max μ_i), enough to
    /// certify that everything above d_λ - d_μ vanishes.
    static std::shared_ptr<const GradedQuotient> build(const Partition& lambda, const Composition& mu, Family f,
                                                       int max_degree = -1);

    const Partition& lambda() const noexcept { return lambda_; }
    const Composition& mu() const noexcept { return mu_; }
    Family family() const noexcept { return family_; }
    const InvariantRing& ring() const noexcept { return ring_; }

    /// d_λ - d_μ (may be negative).
    int top_degree() const noexcept { return top_; }
    int max_degree() const noexcept { return max_degree_; }
    /// True iff every computed degree above top_degree() is zero and the
    /// truncation covers top_degree() + max weight, so C vanishes above top.
    bool vanishes_above_top() const noexcept;

    long dimension(int degree) const;
    std::vector<long> dimensions() const;
    HilbertSeries hilbert() const;
    long total_dimension() const;

    std::vector<Exponent> standard_monomials(int degree) const;
    /// Normal form of a z-polynomial, homogeneous of the given degree, as
    /// coordinates over standard_monomials(degree). Degrees past the
    /// truncation give the empty vector when vanishes_above_top().
    std::vector<Rational> reduce(const Polynomial& z, int degree) const;

    /// Same ideal in every degree both quotients computed.
    bool same_ideal(const GradedQuotient& other) const;

    struct Degree {
        std::vector<std::string> monomials;            // decreasing
        std::unordered_map<std::string, int> index;
        std::vector<int> position;                     // index in standard, or -1
        std::vector<int> standard;                     // monomial indices
        std::vector<std::vector<Rational>> tail;       // normal form of leading monomials
    };

private:
    GradedQuotient(const Partition& lambda, const Composition& mu, Family f, int max_degree);
    void compute();
    void compute_degree(int degree, const std::vector<Polynomial>& gens);

    Partition lambda_;
    Composition mu_;
    Family family_;
    InvariantRing ring_;
    int top_ = 0;
    int max_degree_ = 0;
    std::vector<Degree> degrees_;
};

/// h(T) = h(T̄) ∏ h_{γ_i}(μ;n) in x_1..x_d.
Polynomial h_of_tableau(const Tableau& t, const Composition& mu);
/// The same element in the z coordinates of the ring.
Polynomial h_of_tableau(const InvariantRing& ring, const Tableau& t);

struct BasisCertificate {
    bool certified = false;
    std::vector<Tableau> basis;      ///< by degree, then enumeration order
    std::vector<int> degrees;
    HilbertSeries hilbert;           ///< of the quotient
    HilbertSeries tableau_series;    ///< Σ_T q^{2 deg T}
    std::string witness;             ///< JSON, empty when certified
};

/// Checks that the images of h(T), T ∈ Col^λ_μ, form a basis of the quotient
/// degree by degree.
BasisCertificate certify_basis(const GradedQuotient& q);

/// Multiplication table: product[i][j] lists the non-zero (k, c) with
/// h(T_i) h(T_j) ≡ Σ c h(T_k).
struct StructureConstants {
    std::size_t dimension = 0;
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> product;

    bool is_integral() const;
};

/// A quotient together with its certified h(T) basis.
class CertifiedBasis {
public:
    /// Throws VerificationError (with witness) if certification fails.
    explicit CertifiedBasis(std::shared_ptr<const GradedQuotient> q);

    const GradedQuotient& quotient() const noexcept { return *q_; }
    const std::vector<Tableau>& tableaux() const noexcept { return cert_.basis; }
    const std::vector<int>& degrees() const noexcept { return cert_.degrees; }
    const BasisCertificate& certificate() const noexcept { return cert_; }

    /// Coordinates of an S_μ-invariant x-polynomial in the h(T) basis.
    std::vector<Rational> normal_form(const Polynomial& p) const;
    /// Same for a z-polynomial.
    std::vector<Rational> coordinates(const Polynomial& z) const;
    StructureConstants structure_constants() const;

private:
    void add_degree_coordinates(const Polynomial& z, int degree, std::vector<Rational>& out) const;

    std::shared_ptr<const GradedQuotient> q_;
    BasisCertificate cert_;
    std::vector<std::size_t> offset_;                  // first basis index per degree
    std::vector<std::vector<std::vector<Rational>>> inverse_;
    std::vector<Polynomial> h_z_;
};

/// H and E families give the same ideal in every computed degree.
bool rel_equivalence(const Partition& lambda, const Composition& mu);

/// The Springer fiber quotient in d variables: λ padded to d parts, μ = (1^d).
std::shared_ptr<const GradedQuotient> regular_quotient(const Partition& lambda, int d);

struct TransferDegree {
    int degree = 0;              ///< polynomial degree D' in the regular quotient
    long quotient_dim = 0;       ///< dim (C^λ_μ) in degree D' - d_μ
    long anti_invariant_dim = 0; ///< dim of S_μ anti-invariants of C^λ in degree D'
    long image_rank = 0;         ///< rank of x ↦ x ε_μ from degree D' - d_μ
    bool kernel_matches = true;  ///< x ε_μ ∈ I^λ exactly for x ∈ I^λ_μ
};

struct TransferReport {
    bool passed = false;
    int shift = 0;               ///< d_μ
    std::vector<TransferDegree> degrees;
    std::string witness;         ///< JSON, empty when passed
};

/// Checks that x ↦ x ε_μ induces a degree-shifting bijection from C^λ_μ onto
/// the S_μ anti-invariants of C^λ.
TransferReport anti_invariant_transfer(const GradedQuotient& q, const GradedQuotient& regular);
TransferReport anti_invariant_transfer(const Partition& lambda, const Composition& mu);

}  // namespace flagcoh

#endif  // FLAGCOH_PRESENTATION_HPP
