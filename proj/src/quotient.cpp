#include <algorithm>
#include <functional>
#include <numeric>

#include "flagcoh/error.hpp"
#include "flagcoh/linalg.hpp"
#include "flagcoh/presentation.hpp"

namespace flagcoh {

namespace {

std::string key_of(const Exponent& e) {
    std::string k(e.size(), '\0');
    for (std::size_t i = 0; i < e.size(); ++i) k[i] = static_cast<char>(e[i]);
    return k;
}

Exponent exponent_of(const std::string& k) {
    Exponent e(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) e[i] = static_cast<unsigned char>(k[i]);
    return e;
}

std::vector<std::vector<int>> block_subsets(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int m = 1; m <= n; ++m) {
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == m) {
                out.push_back(cur);
                return;
            }
            for (int i = start; i <= n; ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(1);
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::shared_ptr<const GradedQuotient> GradedQuotient::build(const Partition& lambda, const Composition& mu,
                                                            Family f, int max_degree) {
    std::shared_ptr<GradedQuotient> q(new GradedQuotient(lambda, mu, f, max_degree));
    q->compute();
    return q;
}

GradedQuotient::GradedQuotient(const Partition& lambda, const Composition& mu, Family f, int max_degree)
    : lambda_(lambda), mu_(mu), family_(f), ring_(mu) {
    check_pair(lambda, mu);
    const FlagDims fd = dims(lambda, mu);
    top_ = static_cast<int>(fd.lambda - fd.mu);
    max_degree_ = max_degree >= 0 ? max_degree : std::max(0, top_) + std::max(1, ring_.max_weight());
}

void GradedQuotient::compute() {
    std::vector<std::vector<Polynomial>> by_degree(max_degree_ + 1);
    for (const auto& s : block_subsets(static_cast<int>(mu_.length()))) {
        const int bound = generator_bound(lambda_, mu_, family_, s);
        const int start = std::max(0, bound + 1);
        int vars = 0;
        for (int j : s) vars += mu_[j - 1];
        // For H, h_r(S) with r > bound + |vars| lies in the ideal of the
        // lower ones by Σ (-1)^a e_a h_{r-a} = 0; for E, e_r(S) = 0 there.
        int stop = family_ == Family::H ? std::max(start, bound + vars) : vars;
        stop = std::min(stop, max_degree_);
        if (stop < start) continue;
        auto series = family_ == Family::H ? ring_.complete_series(s, stop) : ring_.elementary_series(s, stop);
        for (int r = start; r <= stop; ++r)
            if (!series[r].is_zero()) by_degree[r].push_back(std::move(series[r]));
    }
    degrees_.resize(max_degree_ + 1);
    for (int d = 0; d <= max_degree_; ++d) compute_degree(d, by_degree[d]);
}

void GradedQuotient::compute_degree(int degree, const std::vector<Polynomial>& gens) {
    Degree& cur = degrees_[degree];
    for (const auto& e : ring_.monomials(degree)) cur.monomials.push_back(key_of(e));
    const int n = static_cast<int>(cur.monomials.size());
    cur.index.reserve(n);
    for (int i = 0; i < n; ++i) cur.index.emplace(cur.monomials[i], i);
    const int nv = ring_.nvars();

    // up[v][k]: index of z_v * (k-th standard monomial of degree - w_v).
    std::vector<std::vector<int>> up(nv);
    for (int v = 0; v < nv; ++v) {
        const int w = ring_.weight(v);
        if (w > degree) continue;
        const Degree& low = degrees_[degree - w];
        for (int s : low.standard) {
            std::string k = low.monomials[s];
            ++k[v];
            up[v].push_back(cur.index.at(k));
        }
    }

    struct Reducer {
        int v;
        int m;
    };
    std::vector<std::vector<Reducer>> reducers(n);
    std::vector<int> wpos(n, -1);
    int nw = 0;
    for (int i = 0; i < n; ++i) {
        std::string k = cur.monomials[i];
        for (int v = 0; v < nv; ++v) {
            if (k[v] == 0) continue;
            const Degree& low = degrees_[degree - ring_.weight(v)];
            --k[v];
            const int m = low.index.at(k);
            ++k[v];
            if (low.position[m] < 0) reducers[i].push_back({v, m});
        }
        if (reducers[i].empty()) wpos[i] = nw++;
    }

    // Normal forms modulo the multiples of lower-degree ideal elements,
    // expressed over the unreduced monomials W; smallest monomials first.
    std::vector<std::vector<Rational>> nfw(n);
    auto add_scaled = [&](std::vector<Rational>& acc, int j, const Rational& c) {
        if (wpos[j] >= 0) {
            acc[wpos[j]] += c;
            return;
        }
        const auto& src = nfw[j];
        for (int t = 0; t < nw; ++t)
            if (src[t] != 0) acc[t] += c * src[t];
    };
    auto shifted_tail = [&](const Reducer& r) {
        std::vector<Rational> acc(nw);
        const Degree& low = degrees_[degree - ring_.weight(r.v)];
        const auto& tail = low.tail[r.m];
        for (std::size_t s = 0; s < tail.size(); ++s)
            if (tail[s] != 0) add_scaled(acc, up[r.v][s], tail[s]);
        return acc;
    };
    for (int i = n - 1; i >= 0; --i)
        if (!reducers[i].empty()) nfw[i] = shifted_tail(reducers[i].front());

    linalg::EchelonBasis relations(nw);
    for (int i = 0; i < n; ++i) {
        const auto& rs = reducers[i];
        if (rs.size() < 2) continue;
        UnionFind uf(rs.size());
        for (std::size_t a = 0; a < rs.size(); ++a)
            for (std::size_t b = a + 1; b < rs.size(); ++b) {
                std::string k = cur.monomials[i];
                --k[rs[a].v];
                --k[rs[b].v];
                const Degree& low = degrees_[degree - ring_.weight(rs[a].v) - ring_.weight(rs[b].v)];
                if (low.position[low.index.at(k)] < 0) uf.unite(static_cast<int>(a), static_cast<int>(b));
            }
        for (std::size_t a = 1; a < rs.size(); ++a) {
            if (uf.find(static_cast<int>(a)) != static_cast<int>(a)) continue;
            auto rel = shifted_tail(rs[a]);
            for (int t = 0; t < nw; ++t) rel[t] -= nfw[i][t];
            relations.insert(rel);
        }
    }
    for (const auto& g : gens) {
        std::vector<Rational> rel(nw);
        for (const auto& [e, c] : g.terms()) add_scaled(rel, cur.index.at(key_of(e)), c);
        relations.insert(rel);
    }

    const auto pivots = relations.pivots();
    const auto reduced = relations.reduced();
    std::vector<int> wstd(nw, -1), wrow(nw, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) wrow[pivots[r]] = static_cast<int>(r);
    cur.position.assign(n, -1);
    for (int i = 0; i < n; ++i)
        if (wpos[i] >= 0 && wrow[wpos[i]] < 0) {
            wstd[wpos[i]] = static_cast<int>(cur.standard.size());
            cur.position[i] = static_cast<int>(cur.standard.size());
            cur.standard.push_back(i);
        }
    const std::size_t ns = cur.standard.size();
    cur.tail.assign(n, {});
    std::vector<std::vector<Rational>> pivot_tail(nw);
    for (int t = 0; t < nw; ++t) {
        if (wrow[t] < 0) continue;
        auto& pt = pivot_tail[t];
        pt.assign(ns, 0);
        for (int u = 0; u < nw; ++u)
            if (wstd[u] >= 0) pt[wstd[u]] = -reduced[wrow[t]][u];
    }
    for (int i = 0; i < n; ++i) {
        if (cur.position[i] >= 0) continue;
        if (wpos[i] >= 0) {
            cur.tail[i] = std::move(pivot_tail[wpos[i]]);
            continue;
        }
        std::vector<Rational> t(ns);
        for (int u = 0; u < nw; ++u) {
            const Rational& c = nfw[i][u];
            if (c == 0) continue;
            if (wstd[u] >= 0) {
                t[wstd[u]] += c;
            } else {
                const auto& pt = pivot_tail[u];
                for (std::size_t s = 0; s < ns; ++s)
                    if (pt[s] != 0) t[s] += c * pt[s];
            }
        }
        cur.tail[i] = std::move(t);
        nfw[i].clear();
        nfw[i].shrink_to_fit();
    }
}

bool GradedQuotient::vanishes_above_top() const noexcept {
    const int lo = std::max(0, top_ + 1);
    const int hi = lo + std::max(1, ring_.max_weight()) - 1;
    if (hi > max_degree_) return false;
    for (int d = lo; d <= max_degree_; ++d)
        if (!degrees_[d].standard.empty()) return false;
    return true;
}

long GradedQuotient::dimension(int degree) const {
    if (degree < 0) return 0;
    if (degree > max_degree_) {
        if (vanishes_above_top()) return 0;
        throw InvalidArgument("degree " + std::to_string(degree) + " is beyond the truncation");
    }
    return static_cast<long>(degrees_[degree].standard.size());
}

std::vector<long> GradedQuotient::dimensions() const {
    std::vector<long> out;
    for (const auto& d : degrees_) out.push_back(static_cast<long>(d.standard.size()));
    return out;
}

HilbertSeries GradedQuotient::hilbert() const { return HilbertSeries(dimensions()); }

long GradedQuotient::total_dimension() const { return hilbert().total(); }

std::vector<Exponent> GradedQuotient::standard_monomials(int degree) const {
    std::vector<Exponent> out;
    if (degree < 0 || degree > max_degree_) return out;
    const Degree& d = degrees_[degree];
    for (int s : d.standard) out.push_back(exponent_of(d.monomials[s]));
    return out;
}

std::vector<Rational> GradedQuotient::reduce(const Polynomial& z, int degree) const {
    if (z.nvars() != ring_.nvars()) throw InvalidArgument("polynomial is not in the generator ring");
    if (degree < 0) throw InvalidArgument("negative degree");
    for (const auto& [e, c] : z.terms())
        if (ring_.weighted_degree(e) != degree)
            throw InvalidArgument("polynomial is not homogeneous of degree " + std::to_string(degree));
    if (degree > max_degree_) {
        if (vanishes_above_top()) return {};
        throw InvalidArgument("degree " + std::to_string(degree) + " is beyond the truncation");
    }
    const Degree& d = degrees_[degree];
    std::vector<Rational> out(d.standard.size());
    for (const auto& [e, c] : z.terms()) {
        const int i = d.index.at(key_of(e));
        if (d.position[i] >= 0) {
            out[d.position[i]] += c;
            continue;
        }
        const auto& t = d.tail[i];
        for (std::size_t s = 0; s < t.size(); ++s)
            if (t[s] != 0) out[s] += c * t[s];
    }
    return out;
}

bool GradedQuotient::same_ideal(const GradedQuotient& other) const {
    if (mu_ != other.mu_) return false;
    const int hi = std::min(max_degree_, other.max_degree_);
    for (int d = 0; d <= hi; ++d) {
        const Degree& a = degrees_[d];
        const Degree& b = other.degrees_[d];
        if (a.standard != b.standard || a.tail != b.tail) return false;
    }
    return true;
}

}  // namespace flagcoh
