#include "flagcoh/invariant_ring.hpp"

#include <algorithm>
#include <functional>

#include "flagcoh/error.hpp"

namespace flagcoh {

namespace {

std::vector<Polynomial> series_product(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    std::vector<Polynomial> out(a.size(), Polynomial(a.front().nvars()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

InvariantRing::InvariantRing(Composition mu) : mu_(std::move(mu)) {
    for (std::size_t j = 1; j <= mu_.length(); ++j) {
        first_.push_back(static_cast<int>(weight_.size()));
        for (int r = 1; r <= mu_[j - 1]; ++r) {
            weight_.push_back(r);
            block_.push_back(static_cast<int>(j));
        }
    }
}

int InvariantRing::index(int block, int r) const {
    if (block < 1 || static_cast<std::size_t>(block) > mu_.length() || r < 1 || r > mu_[block - 1])
        throw InvalidArgument("no generator z_{" + std::to_string(block) + "," + std::to_string(r) + "}");
    return first_[block - 1] + r - 1;
}

int InvariantRing::max_weight() const noexcept {
    return weight_.empty() ? 0 : *std::max_element(weight_.begin(), weight_.end());
}

int InvariantRing::weighted_degree(const Exponent& e) const {
    int deg = 0;
    for (std::size_t v = 0; v < e.size(); ++v) deg += e[v] * weight_[v];
    return deg;
}

std::vector<Exponent> InvariantRing::monomials(int degree) const {
    std::vector<Exponent> out;
    if (degree < 0) return out;
    const int nv = nvars();
    Exponent e(nv, 0);
    std::function<void(int, int)> rec = [&](int v, int rem) {
        if (v == nv) {
            if (rem == 0) out.push_back(e);
            return;
        }
        for (int k = rem / weight_[v]; k >= 0; --k) {
            e[v] = k;
            rec(v + 1, rem - k * weight_[v]);
        }
        e[v] = 0;
    };
    rec(0, degree);
    return out;
}

std::vector<Polynomial> InvariantRing::block_series(int block, bool complete, int max_r) const {
    const int nv = nvars();
    std::vector<Polynomial> s(max_r + 1, Polynomial(nv));
    s[0] = Polynomial::constant(nv, 1);
    const int m = mu_[block - 1];
    if (!complete) {
        for (int r = 1; r <= std::min(m, max_r); ++r) s[r] = Polynomial::variable(nv, index(block, r));
        return s;
    }
    // Σ_a (-1)^a e_a h_{r-a} = 0 for r ≥ 1.
    for (int r = 1; r <= max_r; ++r)
        for (int a = 1; a <= std::min(r, m); ++a) {
            Polynomial term = Polynomial::variable(nv, index(block, a)) * s[r - a];
            if (a % 2 == 1) s[r] += term;
            else s[r] -= term;
        }
    return s;
}

std::vector<Polynomial> InvariantRing::elementary_series(std::span<const int> blocks, int max_r) const {
    if (blocks.empty()) throw InvalidArgument("block set must be non-empty");
    if (max_r < 0) return {};
    auto acc = block_series(blocks[0], false, max_r);
    for (std::size_t i = 1; i < blocks.size(); ++i) acc = series_product(acc, block_series(blocks[i], false, max_r));
    return acc;
}

std::vector<Polynomial> InvariantRing::complete_series(std::span<const int> blocks, int max_r) const {
    if (blocks.empty()) throw InvalidArgument("block set must be non-empty");
    if (max_r < 0) return {};
    auto acc = block_series(blocks[0], true, max_r);
    for (std::size_t i = 1; i < blocks.size(); ++i) acc = series_product(acc, block_series(blocks[i], true, max_r));
    return acc;
}

Polynomial InvariantRing::to_x(const Polynomial& z) const {
    if (z.nvars() != nvars()) throw InvalidArgument("polynomial is not in the generator ring");
    const int d = mu_.size();
    std::vector<Polynomial> image;
    for (int v = 0; v < nvars(); ++v) {
        const int j = block_[v];
        const int vars[] = {j};
        image.push_back(elementary_block(mu_, vars, weight_[v]));
    }
    Polynomial out(d);
    for (const auto& [e, c] : z.terms()) {
        Polynomial term = Polynomial::constant(d, c);
        for (int v = 0; v < nvars(); ++v)
            for (int k = 0; k < e[v]; ++k) term = term * image[v];
        out += term;
    }
    return out;
}

Polynomial InvariantRing::from_x(const Polynomial& p) const {
    const int d = mu_.size();
    if (p.nvars() != d) throw InvalidArgument("polynomial has " + std::to_string(p.nvars()) +
                                              " variables, expected " + std::to_string(d));
    if (!is_block_invariant(mu_, p)) throw InvalidArgument("polynomial is not invariant under S_mu");
    const BlockStructure bs(mu_);
    Polynomial rest = p;
    Polynomial out(nvars());
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().begin();
        if (!is_canonical(mu_, lead)) throw InvalidArgument("polynomial is not invariant under S_mu");
        // Leading monomial of ∏ e_r^{b_r} in a block is x^a with a_k = Σ_{r≥k} b_r.
        Exponent z(nvars(), 0);
        for (std::size_t j = 1; j <= mu_.length(); ++j) {
            const int b = bs.begin(j);
            for (int r = 1; r <= mu_[j - 1]; ++r) {
                const int next = r < mu_[j - 1] ? lead[b + r] : 0;
                z[index(static_cast<int>(j), r)] = lead[b + r - 1] - next;
            }
        }
        const Rational coeff = c;
        Polynomial zm = Polynomial::monomial(z, coeff);
        rest -= to_x(zm);
        out += zm;
    }
    return out;
}

}  // namespace flagcoh
