#ifndef FLAGCOH_INVARIANT_RING_HPP
#define FLAGCOH_INVARIANT_RING_HPP

#include <span>
#include <vector>

#include "flagcoh/polynomial.hpp"

namespace flagcoh {

/// P_μ written as the free polynomial ring on z_{j,r} = e_r(μ;j),
/// 1 ≤ r ≤ μ_j, where z_{j,r} has weight r (its degree in the x variables).
/// Polynomials in the z variables reuse `Polynomial`; variable v is the
/// v-th generator in (block, r) order.
class InvariantRing {
public:
    explicit InvariantRing(Composition mu);

    const Composition& mu() const noexcept { return mu_; }
    int nvars() const noexcept { return static_cast<int>(weight_.size()); }
    int weight(int v) const { return weight_.at(v); }
    /// 1-based block of variable v.
    int block(int v) const { return block_.at(v); }
    /// Index of z_{j,r}.
    int index(int block, int r) const;
    int max_weight() const noexcept;

    int weighted_degree(const Exponent& e) const;
    /// Exponent vectors of the given weighted degree, lexicographically
    /// decreasing (z_0 > z_1 > ...).
    std::vector<Exponent> monomials(int degree) const;

    /// e_r(μ;S) and h_r(μ;S) for r = 0..max_r, as z-polynomials.
    std::vector<Polynomial> elementary_series(std::span<const int> blocks, int max_r) const;
    std::vector<Polynomial> complete_series(std::span<const int> blocks, int max_r) const;

    /// Expansion into x_1..x_d.
    Polynomial to_x(const Polynomial& z) const;
    /// Inverse of to_x on S_μ-invariant input. Throws InvalidArgument when p
    /// is not invariant or lives in the wrong ring.
    Polynomial from_x(const Polynomial& p) const;

private:
    std::vector<Polynomial> block_series(int block, bool complete, int max_r) const;

    Composition mu_;
    std::vector<int> weight_;
    std::vector<int> block_;
    std::vector<int> first_;  // first_[j-1] = index of z_{j,1}
};

}  // namespace flagcoh

#endif  // FLAGCOH_INVARIANT_RING_HPP
