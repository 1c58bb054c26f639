#include "flagcoh/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "flagcoh/error.hpp"
#include "flagcoh/linalg.hpp"

namespace flagcoh {

namespace {

using nlohmann::json;

std::vector<std::vector<int>> subsets_by_size(int n) {
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

json rational_json(const Rational& q) { return q.get_str(); }

json rows_json(const std::vector<std::vector<int>>& rows) { return rows; }

}  // namespace

const char* to_string(Family f) noexcept { return f == Family::H ? "H" : "E"; }

Family parse_family(const std::string& text) {
    if (text == "H" || text == "h") return Family::H;
    if (text == "E" || text == "e") return Family::E;
    throw InvalidArgument("unknown generator family '" + text + "' (expected H or E)");
}

void check_pair(const Partition& lambda, const Composition& mu) {
    if (static_cast<std::size_t>(lambda.height()) > mu.length())
        throw InvalidArgument("lambda " + lambda.to_string() + " has more than " + std::to_string(mu.length()) +
                              " non-zero parts");
    if (lambda.size() != mu.size())
        throw InvalidArgument("lambda " + lambda.to_string() + " and mu " + mu.to_string() +
                              " have different sizes");
}

int generator_bound(const Partition& lambda, const Composition& mu, Family f, std::span<const int> blocks) {
    int in_s = 0;
    for (int j : blocks) {
        if (j < 1 || static_cast<std::size_t>(j) > mu.length()) throw InvalidArgument("block index out of range");
        in_s += mu[j - 1];
    }
    const int m = static_cast<int>(blocks.size());
    if (f == Family::H) {
        int head = 0;
        for (int k = 0; k < m; ++k) head += lambda[k];
        return head - in_s;
    }
    int l = 0;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        if (mu[i - 1] > 0 && std::find(blocks.begin(), blocks.end(), static_cast<int>(i)) == blocks.end()) ++l;
    int tail = 0;
    for (int k = l; k < lambda.height(); ++k) tail += lambda[k];
    return in_s - tail;
}

std::vector<GeneratorElement> generators(const Partition& lambda, const Composition& mu, Family f,
                                         int max_coh_degree) {
    check_pair(lambda, mu);
    std::vector<GeneratorElement> out;
    if (max_coh_degree < 0) return out;
    const int max_r = max_coh_degree / 2;
    for (const auto& s : subsets_by_size(static_cast<int>(mu.length()))) {
        const int bound = generator_bound(lambda, mu, f, s);
        for (int r = std::max(0, bound + 1); r <= max_r; ++r) {
            Polynomial p = f == Family::H ? complete_block(mu, s, r) : elementary_block(mu, s, r);
            if (!p.is_zero()) out.push_back({s, r, std::move(p)});
        }
    }
    return out;
}

std::vector<Polynomial> tanisaki_generators(const Partition& lambda, int d) {
    if (lambda.height() > d || lambda.size() != d)
        throw InvalidArgument("lambda " + lambda.to_string() + " is not a partition of " + std::to_string(d));
    std::vector<Polynomial> out;
    std::vector<int> cur;
    for (int m = 1; m <= d; ++m) {
        int tail = 0;
        for (int k = d - m; k < d; ++k) tail += lambda[k];
        const int start = std::max(0, m - tail + 1);
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(cur.size()) == m) {
                for (int r = start; r <= m; ++r) {
                    Polynomial p = elementary_symmetric(d, cur, r);
                    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
                }
                return;
            }
            for (int i = from; i < d; ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

HilbertSeries::HilbertSeries(std::vector<long> c) : coefficients(std::move(c)) {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

long HilbertSeries::total() const {
    long t = 0;
    for (long c : coefficients) t += c;
    return t;
}

Integer HilbertSeries::evaluate(long q) const {
    Integer out = 0, power = 1;
    const Integer q2 = Integer(q) * q;
    for (long c : coefficients) {
        out += power * c;
        power *= q2;
    }
    return out;
}

std::string HilbertSeries::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < coefficients.size(); ++r) {
        if (coefficients[r] == 0) continue;
        if (!out.empty()) out += " + ";
        if (r == 0 || coefficients[r] != 1) out += std::to_string(coefficients[r]);
        if (r == 1) out += "q^2";
        else if (r > 1) out += "q^" + std::to_string(2 * r);
    }
    return out.empty() ? "0" : out;
}

Polynomial h_of_tableau(const Tableau& t, const Composition& mu) {
    Polynomial out = Polynomial::constant(mu.size(), 1);
    Tableau cur = t;
    Composition content = mu;
    if (t.content(mu.length()) != mu.parts() || !t.is_column_strict())
        throw InvalidArgument("tableau " + t.to_string() + " is not column-strict with content " + mu.to_string());
    while (content.length() > 0) {
        const int n = static_cast<int>(content.length());
        Reduction red = reduce_tableau(cur, content);
        for (int g : red.gamma.parts()) out = out * complete_block(mu, std::span<const int>(&n, 1), g);
        cur = std::move(red.reduced);
        content = std::move(red.reduced_content);
    }
    return out;
}

Polynomial h_of_tableau(const InvariantRing& ring, const Tableau& t) {
    const Composition& mu = ring.mu();
    Polynomial out = Polynomial::constant(ring.nvars(), 1);
    Tableau cur = t;
    Composition content = mu;
    if (t.content(mu.length()) != mu.parts() || !t.is_column_strict())
        throw InvalidArgument("tableau " + t.to_string() + " is not column-strict with content " + mu.to_string());
    while (content.length() > 0) {
        const int n = static_cast<int>(content.length());
        Reduction red = reduce_tableau(cur, content);
        if (!red.gamma.empty()) {
            const auto series = ring.complete_series(std::span<const int>(&n, 1), red.gamma[0]);
            for (int g : red.gamma.parts()) out = out * series[g];
        }
        cur = std::move(red.reduced);
        content = std::move(red.reduced_content);
    }
    return out;
}

BasisCertificate certify_basis(const GradedQuotient& q) {
    BasisCertificate cert;
    cert.hilbert = q.hilbert();
    const auto tabs = column_strict_tableaux(q.lambda(), q.mu());
    std::map<int, std::vector<const Tableau*>> by_degree;
    for (const auto& t : tabs) by_degree[tableau_degree(t, q.mu())].push_back(&t);
    std::vector<long> counts;
    for (const auto& [deg, list] : by_degree) {
        if (counts.size() <= static_cast<std::size_t>(deg)) counts.resize(deg + 1, 0);
        counts[deg] = static_cast<long>(list.size());
        for (const auto* t : list) {
            cert.basis.push_back(*t);
            cert.degrees.push_back(deg);
        }
    }
    cert.tableau_series = HilbertSeries(counts);

    json failure;
    if (!q.vanishes_above_top()) {
        failure = {{"reason", "quotient does not vanish above the top degree"},
                   {"top_degree", q.top_degree()},
                   {"dimensions", q.dimensions()}};
    }
    const int hi = std::max(q.max_degree(), counts.empty() ? 0 : static_cast<int>(counts.size()) - 1);
    for (int deg = 0; deg <= hi && failure.is_null(); ++deg) {
        const long dim = deg <= q.max_degree() ? q.dimension(deg) : 0;
        const auto it = by_degree.find(deg);
        const long count = it == by_degree.end() ? 0 : static_cast<long>(it->second.size());
        if (count != dim) {
            failure = {{"reason", "tableau count differs from quotient dimension"},
                       {"degree", 2 * deg},
                       {"tableaux", count},
                       {"dimension", dim}};
            break;
        }
        if (count == 0) continue;
        linalg::RationalMatrix rows;
        for (const auto* t : it->second) rows.push_back(q.reduce(h_of_tableau(q.ring(), *t), deg));
        const auto kernel = linalg::left_kernel(rows);
        if (!kernel.empty()) {
            json combo = json::array();
            for (std::size_t i = 0; i < kernel[0].size(); ++i)
                if (kernel[0][i] != 0)
                    combo.push_back({{"tableau", rows_json(it->second[i]->rows())},
                                     {"coeff", rational_json(kernel[0][i])}});
            failure = {{"reason", "h(T) images are linearly dependent"},
                       {"degree", 2 * deg},
                       {"combination", combo}};
        }
    }
    if (failure.is_null()) {
        cert.certified = true;
    } else {
        failure["lambda"] = q.lambda().parts();
        failure["mu"] = q.mu().parts();
        cert.witness = failure.dump();
    }
    return cert;
}

bool StructureConstants::is_integral() const {
    for (const auto& row : product)
        for (const auto& cell : row)
            for (const auto& [k, c] : cell)
                if (c.get_den() != 1) return false;
    return true;
}

CertifiedBasis::CertifiedBasis(std::shared_ptr<const GradedQuotient> q) : q_(std::move(q)) {
    cert_ = certify_basis(*q_);
    if (!cert_.certified) throw VerificationError("h(T) basis certification failed", cert_.witness);
    const int top = std::max(0, q_->top_degree());
    offset_.assign(top + 2, 0);
    for (int deg : cert_.degrees) ++offset_[deg + 1];
    for (std::size_t i = 1; i < offset_.size(); ++i) offset_[i] += offset_[i - 1];
    inverse_.resize(top + 1);
    for (const auto& t : cert_.basis) h_z_.push_back(h_of_tableau(q_->ring(), t));
    for (int deg = 0; deg <= top; ++deg) {
        linalg::RationalMatrix rows;
        for (std::size_t i = offset_[deg]; i < offset_[deg + 1]; ++i) rows.push_back(q_->reduce(h_z_[i], deg));
        if (rows.empty()) continue;
        inverse_[deg] = *linalg::inverse(rows);
    }
}

void CertifiedBasis::add_degree_coordinates(const Polynomial& z, int degree, std::vector<Rational>& out) const {
    if (degree >= static_cast<int>(inverse_.size()) || inverse_[degree].empty()) {
        q_->reduce(z, degree);  // validates homogeneity and range
        return;
    }
    const auto v = q_->reduce(z, degree);
    const auto c = linalg::multiply(v, inverse_[degree]);
    for (std::size_t i = 0; i < c.size(); ++i) out[offset_[degree] + i] += c[i];
}

std::vector<Rational> CertifiedBasis::coordinates(const Polynomial& z) const {
    std::vector<Rational> out(cert_.basis.size());
    std::map<int, Polynomial> parts;
    for (const auto& [e, c] : z.terms()) {
        const int deg = q_->ring().weighted_degree(e);
        auto it = parts.try_emplace(deg, Polynomial(z.nvars())).first;
        it->second.add_term(e, c);
    }
    for (const auto& [deg, part] : parts) add_degree_coordinates(part, deg, out);
    return out;
}

std::vector<Rational> CertifiedBasis::normal_form(const Polynomial& p) const {
    return coordinates(q_->ring().from_x(p));
}

StructureConstants CertifiedBasis::structure_constants() const {
    StructureConstants sc;
    const std::size_t n = cert_.basis.size();
    sc.dimension = n;
    sc.product.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int deg = cert_.degrees[i] + cert_.degrees[j];
            if (deg > q_->top_degree()) continue;
            std::vector<Rational> out(n);
            add_degree_coordinates(h_z_[i] * h_z_[j], deg, out);
            for (std::size_t k = 0; k < n; ++k)
                if (out[k] != 0) sc.product[i][j].emplace_back(static_cast<int>(k), out[k]);
        }
    return sc;
}

bool rel_equivalence(const Partition& lambda, const Composition& mu) {
    const auto h = GradedQuotient::build(lambda, mu, Family::H);
    const auto e = GradedQuotient::build(lambda, mu, Family::E);
    return h->max_degree() == e->max_degree() && h->same_ideal(*e);
}

std::shared_ptr<const GradedQuotient> regular_quotient(const Partition& lambda, int d) {
    if (lambda.height() > d) throw InvalidArgument("lambda has more than d parts");
    return GradedQuotient::build(lambda, Composition(std::vector<int>(d, 1)), Family::H);
}

TransferReport anti_invariant_transfer(const GradedQuotient& q, const GradedQuotient& regular) {
    const Composition& mu = q.mu();
    const int d = mu.size();
    if (regular.mu() != Composition(std::vector<int>(d, 1)) || regular.lambda() != q.lambda())
        throw InvalidArgument("second quotient must be the regular quotient for the same lambda");
    TransferReport report;
    report.shift = static_cast<int>(half_pair_count(mu.parts()));
    const Polynomial eps = block_antisymmetrizer(mu);
    const auto group = BlockStructure(mu).group_elements();
    const InvariantRing& ring = q.ring();

    // In the regular ring z_{i,1} = x_i, so x-polynomials are z-polynomials.
    auto regular_image = [&](const Polynomial& x, int degree) { return regular.reduce(x, degree); };

    json failure;
    for (int dp = 0; dp <= regular.max_degree(); ++dp) {
        TransferDegree td;
        td.degree = dp;
        const int deg = dp - report.shift;
        const bool in_range = deg >= 0 && deg <= q.max_degree();
        td.quotient_dim = in_range ? q.dimension(deg) : 0;

        linalg::RationalMatrix anti;
        for (const auto& s : regular.standard_monomials(dp)) {
            Polynomial alt(d);
            for (const auto& w : group) {
                Exponent moved(d, 0);
                for (int i = 0; i < d; ++i) moved[w[i]] = s[i];
                alt.add_term(moved, permutation_sign(w));
            }
            anti.push_back(regular_image(alt, dp));
        }
        td.anti_invariant_dim = anti.empty() ? 0 : static_cast<long>(linalg::rank(anti));

        if (in_range) {
            linalg::RationalMatrix image;
            for (const auto& s : q.standard_monomials(deg))
                image.push_back(regular_image(ring.to_x(Polynomial::monomial(s)) * eps, dp));
            td.image_rank = image.empty() ? 0 : static_cast<long>(linalg::rank(image));
            const auto stds = q.standard_monomials(deg);
            for (const auto& m : ring.monomials(deg)) {
                Polynomial zm = Polynomial::monomial(m);
                const auto nf = q.reduce(zm, deg);
                if (std::find(stds.begin(), stds.end(), m) != stds.end()) continue;
                Polynomial elem = zm;
                for (std::size_t k = 0; k < nf.size(); ++k)
                    if (nf[k] != 0) elem.add_term(stds[k], -nf[k]);
                const auto v = regular_image(ring.to_x(elem) * eps, dp);
                if (std::any_of(v.begin(), v.end(), [](const Rational& c) { return c != 0; })) {
                    td.kernel_matches = false;
                    break;
                }
            }
            if (td.image_rank != td.quotient_dim) td.kernel_matches = false;
        }
        const bool ok = td.kernel_matches && td.anti_invariant_dim == td.quotient_dim;
        if (!ok && failure.is_null())
            failure = {{"lambda", q.lambda().parts()},   {"mu", mu.parts()},
                       {"degree", 2 * dp},               {"quotient_dim", td.quotient_dim},
                       {"anti_invariant_dim", td.anti_invariant_dim},
                       {"image_rank", td.image_rank},    {"kernel_matches", td.kernel_matches}};
        report.degrees.push_back(td);
    }
    report.passed = failure.is_null();
    if (!report.passed) report.witness = failure.dump();
    return report;
}

TransferReport anti_invariant_transfer(const Partition& lambda, const Composition& mu) {
    const auto q = GradedQuotient::build(lambda, mu, Family::H);
    const auto reg = regular_quotient(lambda, mu.size());
    return anti_invariant_transfer(*q, *reg);
}

}  // namespace flagcoh
