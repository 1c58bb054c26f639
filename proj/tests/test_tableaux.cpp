#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "flagcoh/error.hpp"
#include "flagcoh/tableau.hpp"
#include "oracles.hpp"

using namespace flagcoh;

namespace {

const Composition kExampleMu{1, 4, 1, 3, 1, 2};
const char* kExampleTableau = "2,1,2,2;3,2,4;4,4,6;6,5";

std::set<oracle::Rows> as_rows(const std::vector<Tableau>& ts) {
    std::set<oracle::Rows> out;
    for (const auto& t : ts) out.insert(t.rows());
    return out;
}

}  // namespace

TEST_CASE("dominance order") {
    CHECK(dominance_leq({2, 1, 1}, {2, 2}));
    CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
    CHECK(dominance_leq(Composition{1, 4, 1, 3, 1, 2}.sorted(), {4, 3, 3, 2}));
    CHECK_THROWS_AS(dominance_leq({2}, {1}), InvalidArgument);
    for (int d = 0; d <= 8; ++d)
        for (const auto& a : oracle::weakly_decreasing(d, d, d))
            for (const auto& b : oracle::weakly_decreasing(d, d, d))
                CHECK(dominance_leq(Partition(a), Partition(b)) == oracle::dominated(Partition(a), Partition(b)));
}

TEST_CASE("transpose") {
    CHECK(Partition{4, 3, 2}.transpose() == Partition{3, 3, 2, 1});
    CHECK(Partition{}.transpose() == Partition{});
    CHECK(Partition{1, 1}.transpose() == Partition{2});
    CHECK(Partition{2, 0} == Partition{2});
    for (int d = 0; d <= 9; ++d)
        for (const auto& p : oracle::weakly_decreasing(d, d, d)) {
            const Partition l(p);
            CHECK(l.transpose().transpose() == l);
            CHECK(l.transpose().size() == d);
        }
}

TEST_CASE("column sequence codec") {
    const int c[] = {1, 3};
    CHECK(column_sequence_to_partition(c, 4) == Partition{1});
    const int minimal[] = {1, 2, 3};
    CHECK(column_sequence_to_partition(minimal, 5).empty());
    const int maximal[] = {3, 4, 5};
    CHECK(column_sequence_to_partition(maximal, 5) == Partition{2, 2, 2});
    const int repeated[] = {2, 2};
    CHECK_THROWS_AS(column_sequence_to_partition(repeated, 4), InvalidArgument);
    const int decreasing[] = {3, 1};
    CHECK_THROWS_AS(column_sequence_to_partition(decreasing, 4), InvalidArgument);

    for (int d = 0; d <= 10; ++d)
        for (int k = 0; k <= d; ++k) {
            // every k-subset of {1..d} round-trips, and the images are exactly
            // the partitions in the k × (d-k) box
            std::set<Partition> seen;
            std::vector<bool> pick(d, false);
            std::fill(pick.begin(), pick.begin() + k, true);
            do {
                std::vector<int> cols;
                for (int i = 0; i < d; ++i)
                    if (pick[i]) cols.push_back(i + 1);
                const Partition g = column_sequence_to_partition(cols, d);
                CHECK(g.height() <= k);
                CHECK(g[0] <= d - k);
                CHECK(partition_to_column_sequence(g, k, d) == cols);
                seen.insert(g);
            } while (std::prev_permutation(pick.begin(), pick.end()));
            std::size_t box = 0;
            for (int s = 0; s <= k * (d - k); ++s) box += oracle::weakly_decreasing(s, k, d - k).size();
            CHECK(seen.size() == box);
        }
}

TEST_CASE("enumeration examples") {
    CHECK(column_strict_tableaux({2}, {1, 1}).size() == 2);
    CHECK(column_strict_tableaux({2, 1}, {1, 1, 1}).size() == 3);
    CHECK(column_strict_tableaux({1, 1}, {2, 0}).empty());
    CHECK(semistandard_tableaux({2, 1}, {1, 1, 1}).size() == 2);
    CHECK(semistandard_tableaux({5}, {5}).size() == 1);
    CHECK(semistandard_tableaux({1, 1}, {1, 1}).size() == 1);
    const auto empty = column_strict_tableaux({}, {});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
}

TEST_CASE("enumeration agrees with brute force, d <= 6") {
    for (const auto& [l, m] : oracle::all_pairs(6)) {
        const auto col = column_strict_tableaux(l, m);
        const auto std_ = semistandard_tableaux(l, m);
        CHECK(as_rows(col) == oracle::brute_tableaux(l, m, false));
        CHECK(as_rows(std_) == oracle::brute_tableaux(l, m, true));
        for (std::size_t i = 1; i < col.size(); ++i) CHECK(col[i - 1].reading_word() < col[i].reading_word());
        for (const auto& t : col) {
            CHECK(t.shape() == l);
            CHECK(t.content(m.length()) == m.parts());
        }
    }
}

TEST_CASE("non-empty iff dominance, d <= 7") {
    for (const auto& [l, m] : oracle::all_pairs(7))
        CHECK(column_strict_tableaux(l, m).empty() != oracle::dominated(m.sorted(), l));
}

TEST_CASE("content symmetry, d <= 6") {
    for (const auto& [l, m] : oracle::all_pairs(6)) {
        std::vector<int> parts = m.parts();
        std::sort(parts.begin(), parts.end());
        const std::size_t expected = column_strict_tableaux(l, Composition(parts)).size();
        do CHECK(column_strict_tableaux(l, Composition(parts)).size() == expected);
        while (std::next_permutation(parts.begin(), parts.end()));
    }
}

TEST_CASE("reduction of the worked example") {
    const Tableau t = Tableau::parse(kExampleTableau);
    const Reduction r = reduce_tableau(t, kExampleMu);
    CHECK(r.columns == std::vector<int>{1, 3});
    CHECK(r.gamma == Partition{1});
    CHECK(r.reduced.rows() == oracle::Rows{{1, 2, 2, 2}, {2, 3, 4}, {4, 4}, {5}});
    CHECK(r.reduced_shape == Partition{4, 3, 2, 1});
    CHECK(r.reduced_content == Composition{1, 4, 1, 3, 1});
    CHECK(tableau_degree(t, kExampleMu) == 2);
}

TEST_CASE("reduction edge cases") {
    const Reduction a = reduce_tableau(Tableau::parse("1,2"), {1, 1});
    CHECK(a.columns == std::vector<int>{2});
    CHECK(a.gamma == Partition{1});
    CHECK(a.reduced.rows() == oracle::Rows{{1}});

    const Tableau t = Tableau::parse("1,2;3");
    const Reduction z = reduce_tableau(t, {1, 1, 1, 0});
    CHECK(z.columns.empty());
    CHECK(z.gamma.empty());
    CHECK(z.reduced == t);
    CHECK(z.reduced_content == Composition{1, 1, 1});

    CHECK(tableau_degree(Tableau(), Composition{}) == 0);
    CHECK_THROWS_AS(reduce_tableau(Tableau::parse("1;1"), {2}), InvalidArgument);
    CHECK_THROWS_AS(reduce_tableau(Tableau::parse("1,2"), {2, 0}), InvalidArgument);
    CHECK_THROWS_AS(Tableau::parse("1;2,3"), InvalidArgument);
}

TEST_CASE("degrees of the (2,1) Springer fiber cells") {
    std::multiset<int> degs;
    for (const auto& t : column_strict_tableaux({2, 1}, {1, 1, 1})) degs.insert(tableau_degree(t, {1, 1, 1}));
    CHECK(degs == std::multiset<int>{0, 1, 1});
}

TEST_CASE("degree laws and straightening, d <= 6") {
    for (const auto& [l, m] : oracle::all_pairs(6)) {
        const auto col = column_strict_tableaux(l, m);
        if (col.empty()) continue;
        const auto std_ = semistandard_tableaux(l, m);
        const FlagDims fd = dims(l, m);
        const long top = fd.lambda - fd.mu;
        int zero = 0;
        std::size_t at_top = 0;
        for (const auto& t : col) {
            const int deg = tableau_degree(t, m);
            CHECK(deg >= 0);
            CHECK(deg <= top);
            CHECK((deg == top) == t.is_semistandard());
            zero += deg == 0;
            at_top += deg == top;
            const Tableau s = straighten(t, m);
            CHECK(s.is_semistandard());
            CHECK(s.shape() == l);
            CHECK(s.content(m.length()) == m.parts());
            CHECK(straighten(s, m) == s);
            CHECK((s == t) == t.is_semistandard());
        }
        CHECK(zero == 1);
        CHECK(at_top == std_.size());
    }
}

TEST_CASE("straighten example") {
    CHECK(straighten(Tableau::parse("2,1"), {1, 1}) == Tableau::parse("1,2"));
    CHECK(straighten(Tableau::parse("1,2"), {1, 1}) == Tableau::parse("1,2"));
}

TEST_CASE("fibers of straightening partition Col, d <= 5") {
    for (const auto& [l, m] : oracle::all_pairs(5)) {
        const auto col = column_strict_tableaux(l, m);
        const auto std_ = semistandard_tableaux(l, m);
        std::map<oracle::Rows, int> hits;
        for (const auto& s : std_) hits[s.rows()] = 0;
        for (const auto& t : col) ++hits.at(straighten(t, m).rows());
        int total = 0;
        for (const auto& [s, n] : hits) {
            CHECK(n >= 1);
            total += n;
        }
        CHECK(total == static_cast<int>(col.size()));
    }
}

TEST_CASE("cell order") {
    const Tableau a = Tableau::parse("2,1");
    const Tableau b = Tableau::parse("1,2");
    CHECK(cell_order(a, a, {1, 1}) == CellOrder::equal);
    CHECK(cell_order(a, b, {1, 1}) == CellOrder::less);
    CHECK(cell_order(b, a, {1, 1}) == CellOrder::greater);
    CHECK_THROWS_AS(cell_order(a, Tableau::parse("1;2"), {1, 1}), InvalidArgument);
}

TEST_CASE("cell order axioms, d <= 5") {
    for (const auto& [l, m] : oracle::all_pairs(5)) {
        const auto col = column_strict_tableaux(l, m);
        std::vector<std::vector<Partition>> sig;
        for (const auto& t : col) sig.push_back(cell_signature(t, m));
        const std::size_t n = col.size();
        std::vector<std::vector<CellOrder>> rel(n, std::vector<CellOrder>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rel[i][j] = compare_signatures(sig[i], sig[j]);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(rel[i][i] == CellOrder::equal);
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) CHECK(rel[i][j] != CellOrder::equal);
                if (rel[i][j] == CellOrder::less) CHECK(rel[j][i] == CellOrder::greater);
                if (rel[i][j] == CellOrder::incomparable) CHECK(rel[j][i] == CellOrder::incomparable);
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (rel[i][j] != CellOrder::less) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (rel[j][k] == CellOrder::less) CHECK(rel[i][k] == CellOrder::less);
            }
        if (m.size() <= 4)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) CHECK(cell_order(col[i], col[j], m) == rel[i][j]);
    }
}

TEST_CASE("cell order on random pairs matches the recursive definition") {
    std::mt19937 rng(20240611);
    const auto pairs = oracle::all_pairs(7, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& [l, m] = pairs[rng() % pairs.size()];
        const auto col = column_strict_tableaux(l, m);
        if (col.empty()) continue;
        const Tableau& a = col[rng() % col.size()];
        const Tableau& b = col[rng() % col.size()];
        CHECK(cell_order(a, b, m) == compare_signatures(cell_signature(a, m), cell_signature(b, m)));
    }
}

TEST_CASE("flag dimensions") {
    CHECK(dims({}, {1, 1, 1}).mu == 0);
    CHECK(dims({4, 3, 3, 2}, kExampleMu).mu == 10);
    CHECK(dims({2, 1}, {1, 1, 1}).lambda == 1);
    CHECK(dims({4, 3, 3, 2}, kExampleMu).lambda == 6 + 3 + 3 + 1);
}

TEST_CASE("partition and composition enumeration counts") {
    for (int d = 0; d <= 8; ++d)
        for (int n = 0; n <= d + 1; ++n) {
            CHECK(partitions(d, n).size() == oracle::weakly_decreasing(d, n, d).size());
            CHECK(compositions(d, n).size() == oracle::all_compositions(d, n).size());
        }
    CHECK(parse_int_list("4,3,3,2") == std::vector<int>{4, 3, 3, 2});
    CHECK(parse_int_list("").empty());
    CHECK_THROWS_AS(parse_int_list("4,x"), InvalidArgument);
    CHECK_THROWS_AS(Composition({1, -2}), InvalidArgument);
    CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
}
