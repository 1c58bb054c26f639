#include <algorithm>
#include <random>

#include "doctest.h"
#include "flagcoh/linalg.hpp"

using namespace flagcoh;
using namespace flagcoh::linalg;

namespace {

Rational frac(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Textbook Gauss-Jordan over the rationals.
RationalMatrix naive_rref(RationalMatrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, std::vector<Rational>(cols));
    for (auto& row : m)
        for (auto& v : row)
            if (rng() % 3 != 0) v = frac(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
    // plant dependencies
    if (rows >= 3 && rng() % 2 == 0) {
        const Rational a = frac(static_cast<long>(rng() % 7) - 3, 2);
        for (std::size_t j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] + a * m[1][j];
    }
    if (rows >= 2 && rng() % 4 == 0) m[rows - 2] = m[0];
    for (auto& row : m) row.resize(cols);
    return m;
}

RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out;
    for (const auto& row : a) out.push_back(multiply(row, b));
    return out;
}

}  // namespace

TEST_CASE("rank and reduced echelon form against Gauss-Jordan") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t rows = 1 + rng() % 7;
        const std::size_t cols = 1 + rng() % 8;
        const RationalMatrix m = random_matrix(rng, rows, cols);
        const RationalMatrix expected = naive_rref(m);
        CHECK(rank(m) == expected.size());
        std::vector<std::size_t> pivots;
        CHECK(reduced_row_echelon(m, &pivots) == expected);
        CHECK(pivots.size() == expected.size());
        const Echelon e = fraction_free_echelon(clear_denominators(m));
        CHECK(e.rows.size() == expected.size());
        CHECK(e.pivots == pivots);
    }
}

TEST_CASE("fraction-free elimination keeps integers and pivots on the first column") {
    const IntegerMatrix m{{0, 2, 4}, {3, 1, 0}, {-6, 0, 1}};
    const Echelon e = fraction_free_echelon(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});
    // largest magnitude in column 0 is -6, so row 2 leads
    CHECK(e.rows[0][0] == -6);
}

TEST_CASE("clear denominators gives primitive integer rows") {
    const RationalMatrix m{{Rational(1, 2), Rational(3, 4), 0}, {0, 0, 0}, {2, 4, 6}};
    const IntegerMatrix z = clear_denominators(m);
    CHECK(z[0] == std::vector<Integer>{2, 3, 0});
    CHECK(z[1] == std::vector<Integer>{0, 0, 0});
    CHECK(z[2] == std::vector<Integer>{1, 2, 3});
}

TEST_CASE("left kernel") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 6;
        const std::size_t cols = 1 + rng() % 6;
        const RationalMatrix m = random_matrix(rng, rows, cols);
        const RationalMatrix k = left_kernel(m);
        CHECK(k.size() == rows - rank(m));
        if (!k.empty()) CHECK(rank(k) == k.size());
        for (const auto& y : k)
            for (const auto& v : multiply(y, m)) CHECK(v == 0);
    }
}

TEST_CASE("inverse") {
    std::mt19937 rng(303);
    int invertible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const RationalMatrix m = random_matrix(rng, n, n);
        const auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == n));
        if (!inv) continue;
        ++invertible;
        const RationalMatrix id = product(m, *inv);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
    }
    CHECK(invertible > 20);
    CHECK_FALSE(inverse({{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("incremental echelon basis") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng() % 8;
        const std::size_t cols = 1 + rng() % 8;
        RationalMatrix m = random_matrix(rng, rows, cols);
        const RationalMatrix expected = naive_rref(m);

        EchelonBasis basis(cols);
        RationalMatrix accepted;
        for (const auto& row : m) {
            const std::size_t before = accepted.empty() ? 0 : rank(accepted);
            const bool independent = basis.insert(row);
            accepted.push_back(row);
            CHECK(basis.rank() == rank(accepted));
            CHECK(independent == (basis.rank() > before));
            CHECK(basis.contains(row));
        }
        CHECK(basis.rank() == expected.size());
        CHECK(basis.reduced() == expected);
        std::vector<std::size_t> pivots;
        reduced_row_echelon(m, &pivots);
        CHECK(basis.pivots() == pivots);

        std::shuffle(m.begin(), m.end(), rng);
        EchelonBasis shuffled(cols);
        for (const auto& row : m) shuffled.insert(row);
        CHECK(shuffled.reduced() == expected);

        std::vector<Rational> probe(cols);
        for (auto& v : probe) v = Rational(static_cast<long>(rng() % 5) - 2);
        RationalMatrix extended = m;
        extended.push_back(probe);
        CHECK(basis.contains(probe) == (rank(extended) == rank(m)));
    }
}

TEST_CASE("echelon basis rejects zero and wrong-sized rows") {
    EchelonBasis b(3);
    CHECK_FALSE(b.insert({0, 0, 0}));
    CHECK(b.rank() == 0);
    CHECK_THROWS(b.insert({1, 2}));
    CHECK(b.insert_integer({0, 2, 4}));
    CHECK(b.reduced() == RationalMatrix{{0, 1, 2}});
}
