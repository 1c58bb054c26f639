#include "flagcoh/linalg.hpp"

#include <algorithm>

#include "flagcoh/error.hpp"

namespace flagcoh::linalg {

namespace {

std::vector<Integer> primitive_row(const std::vector<Rational>& row) {
    Integer l = 1;
    for (const auto& q : row)
        if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> out(row.size());
    Integer g = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        out[j] = row[j].get_num() * (l / row[j].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[j].get_mpz_t());
    }
    if (g > 1)
        for (auto& v : out)
            if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

void make_primitive(std::vector<Integer>& row) {
    Integer g = 0;
    for (const auto& v : row)
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : row)
            if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

RationalMatrix back_substitute(const IntegerMatrix& rows, const std::vector<std::size_t>& pivots) {
    RationalMatrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i].resize(rows[i].size());
        for (std::size_t j = 0; j < rows[i].size(); ++j) out[i][j] = Rational(rows[i][j]);
    }
    for (std::size_t ii = rows.size(); ii-- > 0;) {
        auto& row = out[ii];
        const Rational piv = row[pivots[ii]];
        for (auto& v : row)
            if (v != 0) v /= piv;
        for (std::size_t k = 0; k < ii; ++k) {
            const Rational f = out[k][pivots[ii]];
            if (f == 0) continue;
            for (std::size_t j = pivots[ii]; j < row.size(); ++j)
                if (row[j] != 0) out[k][j] -= f * row[j];
        }
    }
    return out;
}

}  // namespace

IntegerMatrix clear_denominators(const RationalMatrix& m) {
    IntegerMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(primitive_row(row));
    return out;
}

Echelon fraction_free_echelon(IntegerMatrix m) {
    Echelon e;
    const std::size_t nrows = m.size();
    if (nrows == 0) return e;
    const std::size_t ncols = m.front().size();
    Integer prev = 1, lhs, rhs;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t best = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (m[i][c] == 0) continue;
            if (best == nrows || mpz_cmpabs(m[i][c].get_mpz_t(), m[best][c].get_mpz_t()) > 0) best = i;
        }
        if (best == nrows) continue;
        std::swap(m[r], m[best]);
        const Integer& piv = m[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            auto& row = m[i];
            const Integer f = row[c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                if (f == 0 && row[j] == 0) continue;
                lhs = piv * row[j];
                rhs = f * m[r][j];
                lhs -= rhs;
                mpz_divexact(row[j].get_mpz_t(), lhs.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = piv;
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

std::size_t rank(const RationalMatrix& m) {
    return fraction_free_echelon(clear_denominators(m)).pivots.size();
}

RationalMatrix reduced_row_echelon(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
    Echelon e = fraction_free_echelon(clear_denominators(m));
    if (pivots) *pivots = e.pivots;
    return back_substitute(e.rows, e.pivots);
}

RationalMatrix left_kernel(const RationalMatrix& m) {
    const std::size_t nrows = m.size();
    if (nrows == 0) return {};
    const std::size_t ncols = m.front().size();
    RationalMatrix aug(nrows, std::vector<Rational>(ncols + nrows));
    for (std::size_t i = 0; i < nrows; ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][ncols + i] = 1;
    }
    std::vector<std::size_t> piv;
    RationalMatrix red = reduced_row_echelon(aug, &piv);
    RationalMatrix out;
    for (std::size_t i = 0; i < red.size(); ++i)
        if (piv[i] >= ncols) out.emplace_back(red[i].begin() + ncols, red[i].end());
    return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidArgument("inverse needs a square matrix");
    RationalMatrix aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][n + i] = 1;
    }
    std::vector<std::size_t> piv;
    RationalMatrix red = reduced_row_echelon(aug, &piv);
    if (red.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    RationalMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(red[i].begin() + n, red[i].end());
    return out;
}

std::vector<Rational> multiply(const std::vector<Rational>& row, const RationalMatrix& m) {
    if (row.size() != m.size()) throw InvalidArgument("dimension mismatch in vector-matrix product");
    std::vector<Rational> out(m.empty() ? 0 : m.front().size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (m[i][j] != 0) out[j] += row[i] * m[i][j];
    }
    return out;
}

void EchelonBasis::reduce(std::vector<Integer>& row) const {
    Integer g, a, b;
    for (const auto& [p, basis] : rows_) {
        if (row[p] == 0) continue;
        mpz_gcd(g.get_mpz_t(), basis[p].get_mpz_t(), row[p].get_mpz_t());
        mpz_divexact(a.get_mpz_t(), basis[p].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), row[p].get_mpz_t(), g.get_mpz_t());
        for (std::size_t j = 0; j < columns_; ++j) {
            if (j < p || basis[j] == 0) {
                if (row[j] != 0 && a != 1) row[j] *= a;
                continue;
            }
            row[j] *= a;
            row[j] -= b * basis[j];
        }
    }
}

bool EchelonBasis::insert(const std::vector<Rational>& row) {
    if (row.size() != columns_) throw InvalidArgument("row has the wrong number of columns");
    return insert_integer(primitive_row(row));
}

bool EchelonBasis::insert_integer(std::vector<Integer> row) {
    if (row.size() != columns_) throw InvalidArgument("row has the wrong number of columns");
    reduce(row);
    auto lead = std::find_if(row.begin(), row.end(), [](const Integer& v) { return v != 0; });
    if (lead == row.end()) return false;
    make_primitive(row);
    if (*lead < 0)
        for (auto& v : row) v = -v;
    const std::size_t p = static_cast<std::size_t>(lead - row.begin());
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                                [](const auto& entry, std::size_t key) { return entry.first < key; });
    rows_.insert(pos, {p, std::move(row)});
    return true;
}

bool EchelonBasis::contains(const std::vector<Rational>& row) const {
    if (row.size() != columns_) throw InvalidArgument("row has the wrong number of columns");
    auto v = primitive_row(row);
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::vector<std::size_t> EchelonBasis::pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
}

RationalMatrix EchelonBasis::reduced() const {
    IntegerMatrix rows;
    std::vector<std::size_t> piv;
    for (const auto& [p, r] : rows_) {
        rows.push_back(r);
        piv.push_back(p);
    }
    return back_substitute(rows, piv);
}

}  // namespace flagcoh::linalg
