#include "flagcoh/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "flagcoh/error.hpp"

namespace flagcoh {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw InvalidArgument("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return b < a;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw InvalidArgument("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponent e, const Rational& c) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Polynomial Polynomial::homogeneous_component(int degree) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw InvalidArgument("exponent length does not match the number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InvalidArgument("polynomials live in rings of different rank");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::embed(int nvars) const {
    if (nvars < nvars_) throw InvalidArgument("cannot embed into a smaller ring");
    Polynomial out(nvars);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f.resize(nvars, 0);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.get_num().get_str() + "/" + c.get_den().get_str();
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

Polynomial Polynomial::parse(const std::string& text, int nvars) {
    Polynomial p(nvars);
    const std::string body = trim(text);
    if (body.empty()) throw InvalidArgument("empty polynomial text");
    if (body == "0") return p;
    std::stringstream ss(body);
    std::string term;
    while (std::getline(ss, term, '+')) {
        term = trim(term);
        if (term.empty()) throw InvalidArgument("empty term in polynomial '" + text + "'");
        std::vector<std::string> factors;
        std::stringstream ts(term);
        std::string f;
        while (std::getline(ts, f, '*')) factors.push_back(trim(f));
        Rational coeff = 1;
        std::size_t first = 0;
        if (factors[0] == "-" || factors[0].rfind("-x", 0) == 0) {
            coeff = -1;
            factors[0] = factors[0].substr(1);
            if (factors[0].empty()) first = 1;
        }
        if (first < factors.size() && !factors[first].empty() && factors[first][0] != 'x') {
            coeff *= parse_rational(factors[first]);
            ++first;
        }
        Exponent e(nvars, 0);
        for (std::size_t k = first; k < factors.size(); ++k) {
            const std::string& v = factors[k];
            if (v.size() < 2 || v[0] != 'x') throw InvalidArgument("bad factor '" + v + "'");
            const auto caret = v.find('^');
            int idx = 0, pw = 1;
            try {
                idx = std::stoi(v.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
                if (caret != std::string::npos) pw = std::stoi(v.substr(caret + 1));
            } catch (const std::exception&) {
                throw InvalidArgument("bad factor '" + v + "'");
            }
            if (idx < 1 || idx > nvars || pw < 0)
                throw InvalidArgument("factor '" + v + "' is out of range for " +
                                      std::to_string(nvars) + " variables");
            e[idx - 1] += pw;
        }
        p.add_term(e, coeff);
    }
    return p;
}

Polynomial permute(std::span<const int> w, const Polynomial& p) {
    const int d = p.nvars();
    if (static_cast<int>(w.size()) != d) throw InvalidArgument("permutation has the wrong length");
    std::vector<bool> seen(d, false);
    for (int v : w) {
        if (v < 0 || v >= d || seen[v]) throw InvalidArgument("not a permutation");
        seen[v] = true;
    }
    Polynomial out(d);
    Exponent f(d);
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < d; ++i) f[w[i]] = e[i];
        out.add_term(f, c);
    }
    return out;
}

int permutation_sign(std::span<const int> w) {
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

BlockStructure::BlockStructure(Composition mu) : mu_(std::move(mu)) {
    offsets_.push_back(0);
    for (int p : mu_.parts()) offsets_.push_back(offsets_.back() + p);
}

int BlockStructure::begin(std::size_t j) const {
    if (j < 1 || j > blocks()) throw InvalidArgument("block index out of range");
    return offsets_[j - 1];
}

int BlockStructure::end(std::size_t j) const {
    if (j < 1 || j > blocks()) throw InvalidArgument("block index out of range");
    return offsets_[j];
}

std::vector<int> BlockStructure::variables(std::span<const int> blocks_) const {
    std::vector<int> vars;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k > 0 && blocks_[k] <= blocks_[k - 1])
            throw InvalidArgument("block indices must be strictly increasing");
        for (int v = begin(blocks_[k]); v < end(blocks_[k]); ++v) vars.push_back(v);
    }
    return vars;
}

std::vector<std::vector<int>> BlockStructure::group_elements() const {
    std::vector<std::vector<int>> out{std::vector<int>(nvars())};
    std::iota(out[0].begin(), out[0].end(), 0);
    for (std::size_t j = 1; j <= blocks(); ++j) {
        const int b = begin(j), e = end(j);
        if (e - b < 2) continue;
        std::vector<std::vector<int>> next;
        std::vector<int> local(e - b);
        std::iota(local.begin(), local.end(), b);
        for (const auto& w : out) {
            std::vector<int> perm = local;
            do {
                std::vector<int> x = w;
                for (int i = b; i < e; ++i) x[i] = perm[i - b];
                next.push_back(std::move(x));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        out = std::move(next);
    }
    return out;
}

Polynomial elementary_symmetric(int nvars, std::span<const int> vars, int r) {
    if (r < 0) return Polynomial(nvars);
    if (r == 0) return Polynomial::constant(nvars, 1);
    Polynomial out(nvars);
    const int k = static_cast<int>(vars.size());
    if (r > k) return out;
    std::vector<int> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    Exponent e(nvars, 0);
    while (true) {
        std::fill(e.begin(), e.end(), 0);
        for (int i : pick) e[vars[i]] = 1;
        out.add_term(e, 1);
        int i = r - 1;
        while (i >= 0 && pick[i] == k - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

Polynomial complete_symmetric(int nvars, std::span<const int> vars, int r) {
    if (r < 0) return Polynomial(nvars);
    if (r == 0) return Polynomial::constant(nvars, 1);
    Polynomial out(nvars);
    const int k = static_cast<int>(vars.size());
    Exponent e(nvars, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
            e[vars[i]] = left;
            out.add_term(e, 1);
            e[vars[i]] = 0;
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[vars[i]] = a;
            rec(i + 1, left - a);
        }
        e[vars[i]] = 0;
    };
    if (k > 0) rec(0, r);
    return out;
}

namespace {

std::vector<int> checked_block_vars(const Composition& mu, std::span<const int> blocks) {
    if (blocks.empty()) throw InvalidArgument("block subset must be non-empty");
    return BlockStructure(mu).variables(blocks);
}

}  // namespace

Polynomial elementary_block(const Composition& mu, std::span<const int> blocks, int r) {
    const auto vars = checked_block_vars(mu, blocks);
    return elementary_symmetric(mu.size(), vars, r);
}

Polynomial complete_block(const Composition& mu, std::span<const int> blocks, int r) {
    const auto vars = checked_block_vars(mu, blocks);
    return complete_symmetric(mu.size(), vars, r);
}

bool convolution_identity_check(const Composition& mu, std::span<const int> blocks, int r) {
    const int d = mu.size();
    const std::size_t m = blocks.size();
    auto convolve = [&](auto&& single) {
        Polynomial sum(d);
        std::vector<int> parts(m, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i + 1 == m) {
                parts[i] = left;
                Polynomial prod = Polynomial::constant(d, 1);
                for (std::size_t j = 0; j < m; ++j) {
                    const int b = blocks[j];
                    prod = prod * single(std::span<const int>(&b, 1), parts[j]);
                }
                sum += prod;
                return;
            }
            for (int a = 0; a <= left; ++a) {
                parts[i] = a;
                rec(i + 1, left - a);
            }
        };
        if (r >= 0) rec(0, r);
        return sum;
    };
    const Polynomial e_rhs =
        convolve([&](std::span<const int> b, int k) { return elementary_block(mu, b, k); });
    const Polynomial h_rhs =
        convolve([&](std::span<const int> b, int k) { return complete_block(mu, b, k); });
    return elementary_block(mu, blocks, r) == e_rhs && complete_block(mu, blocks, r) == h_rhs;
}

Polynomial block_antisymmetrizer(const Composition& mu) {
    const BlockStructure bs(mu);
    const int d = mu.size();
    Polynomial out = Polynomial::constant(d, 1);
    long order = 1;
    for (std::size_t j = 1; j <= bs.blocks(); ++j) {
        order *= factorial(mu[j - 1]);
        for (int a = bs.begin(j); a < bs.end(j); ++a)
            for (int b = a + 1; b < bs.end(j); ++b)
                out = out * (Polynomial::variable(d, a) - Polynomial::variable(d, b));
    }
    return out * Rational(1, order);
}

std::vector<Exponent> canonical_exponents(const Composition& mu, int degree) {
    std::vector<Exponent> out;
    if (degree < 0) return out;
    const BlockStructure bs(mu);
    const int d = mu.size();
    Exponent e(d, 0);
    // Fill block j, position `pos`, with values bounded above by `cap`.
    std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t j, int pos, int cap,
                                                              int left) {
        if (j > bs.blocks()) {
            if (left == 0) out.push_back(e);
            return;
        }
        if (pos == bs.end(j)) {
            rec(j + 1, j + 1 <= bs.blocks() ? bs.begin(j + 1) : 0, left, left);
            return;
        }
        for (int a = std::min(cap, left); a >= 0; --a) {
            e[pos] = a;
            rec(j, pos + 1, a, left - a);
        }
        e[pos] = 0;
    };
    if (bs.blocks() == 0) {
        if (degree == 0) out.push_back(e);
        return out;
    }
    rec(1, bs.begin(1), degree, degree);
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
}

bool is_canonical(const Composition& mu, const Exponent& e) {
    const BlockStructure bs(mu);
    for (std::size_t j = 1; j <= bs.blocks(); ++j)
        for (int v = bs.begin(j) + 1; v < bs.end(j); ++v)
            if (e[v] > e[v - 1]) return false;
    return true;
}

Polynomial orbit_sum(const Composition& mu, const Exponent& e) {
    const BlockStructure bs(mu);
    const int d = mu.size();
    if (static_cast<int>(e.size()) != d) throw InvalidArgument("exponent length mismatch");
    std::vector<Exponent> orbit{e};
    for (std::size_t j = 1; j <= bs.blocks(); ++j) {
        const int b = bs.begin(j), en = bs.end(j);
        if (en - b < 2) continue;
        std::vector<Exponent> next;
        for (const auto& x : orbit) {
            std::vector<int> local(x.begin() + b, x.begin() + en);
            std::sort(local.begin(), local.end());
            do {
                Exponent y = x;
                std::copy(local.begin(), local.end(), y.begin() + b);
                next.push_back(std::move(y));
            } while (std::next_permutation(local.begin(), local.end()));
        }
        orbit = std::move(next);
    }
    Polynomial out(d);
    for (const auto& x : orbit) out.add_term(x, 1);
    return out;
}

std::vector<Polynomial> invariant_monomial_basis(const Composition& mu, int coh_degree) {
    if (coh_degree < 0 || coh_degree % 2 != 0)
        throw InvalidArgument("invariant basis needs an even non-negative cohomological degree");
    std::vector<Polynomial> out;
    for (const auto& e : canonical_exponents(mu, coh_degree / 2)) out.push_back(orbit_sum(mu, e));
    return out;
}

bool is_block_invariant(const Composition& mu, const Polynomial& p) {
    if (p.nvars() != mu.size()) throw InvalidArgument("polynomial ring does not match composition");
    const BlockStructure bs(mu);
    struct ClassInfo {
        Rational coeff;
        long count = 0;
    };
    std::map<Exponent, ClassInfo> classes;
    for (const auto& [e, c] : p.terms()) {
        Exponent s = e;
        for (std::size_t j = 1; j <= bs.blocks(); ++j)
            std::sort(s.begin() + bs.begin(j), s.begin() + bs.end(j), std::greater<>());
        auto [it, inserted] = classes.try_emplace(s, ClassInfo{c, 0});
        if (!inserted && it->second.coeff != c) return false;
        ++it->second.count;
    }
    for (const auto& [s, info] : classes) {
        long size = 1;
        for (std::size_t j = 1; j <= bs.blocks(); ++j) {
            size *= factorial(bs.end(j) - bs.begin(j));
            for (int v = bs.begin(j); v < bs.end(j);) {
                int w = v;
                while (w < bs.end(j) && s[w] == s[v]) ++w;
                size /= factorial(w - v);
                v = w;
            }
        }
        if (info.count != size) return false;
    }
    return true;
}

}  // namespace flagcoh
