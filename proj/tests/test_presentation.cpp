#include <algorithm>
#include <set>

#include "doctest.h"
#include "flagcoh/error.hpp"
#include "flagcoh/presentation.hpp"
#include "flagcoh/tableau.hpp"
#include "oracles.hpp"

using namespace flagcoh;

namespace {

Polynomial x(int nvars, int i) { return Polynomial::variable(nvars, i - 1); }

std::set<std::string> texts(const std::vector<Polynomial>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(p.to_string());
    return out;
}

std::vector<Rational> unit(std::size_t n, std::size_t k) {
    std::vector<Rational> v(n);
    v[k] = 1;
    return v;
}

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

}  // namespace

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(check_pair({1, 1, 1}, {2, 1}), InvalidArgument);
    CHECK_THROWS_AS(check_pair({2}, {1, 2}), InvalidArgument);
    CHECK_NOTHROW(check_pair({}, {}));
    CHECK(parse_family("H") == Family::H);
    CHECK(parse_family("E") == Family::E);
    CHECK_THROWS_AS(parse_family("X"), InvalidArgument);
    CHECK_THROWS_AS(GradedQuotient::build({3}, {1, 1}, Family::H), InvalidArgument);
}

TEST_CASE("generator family of the projective line") {
    const auto gens = generators({2}, {1, 1}, Family::H, 6);
    REQUIRE(gens.size() >= 3);
    CHECK(gens[0].blocks == std::vector<int>{1});
    CHECK(gens[0].r == 2);
    CHECK(gens[0].poly == x(2, 1) * x(2, 1));
    std::vector<Polynomial> full;
    for (const auto& g : gens)
        if (g.blocks == std::vector<int>{1, 2}) full.push_back(g.poly);
    REQUIRE(full.size() == 3);
    CHECK(full[0] == x(2, 1) + x(2, 2));
    CHECK(full[1] == x(2, 1) * x(2, 1) + x(2, 1) * x(2, 2) + x(2, 2) * x(2, 2));
    for (std::size_t i = 1; i < gens.size(); ++i) {
        const auto& a = gens[i - 1];
        const auto& b = gens[i];
        const bool ordered = a.blocks.size() < b.blocks.size() ||
                             (a.blocks.size() == b.blocks.size() && (a.blocks < b.blocks ||
                                                                     (a.blocks == b.blocks && a.r < b.r)));
        CHECK(ordered);
    }
}

TEST_CASE("generator families agree with the defining inequalities, d <= 5") {
    for (const auto& [l, m] : oracle::all_pairs(5))
        for (bool complete : {true, false}) {
            const int r_max = m.size() + 1;
            std::vector<Polynomial> got;
            for (const auto& g : generators(l, m, complete ? Family::H : Family::E, 2 * r_max)) {
                CHECK(g.poly.is_homogeneous());
                CHECK(g.poly.degree() == g.r);
                got.push_back(g.poly);
            }
            CHECK(texts(got) == texts(oracle::family_generators(l, m, complete, r_max)));
        }
}

TEST_CASE("full block set always contributes degree one") {
    for (const auto& [l, m] : oracle::all_pairs(5, 1)) {
        if (l != m.sorted()) continue;
        std::vector<int> all(m.length());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i + 1);
        CHECK(generator_bound(l, m, Family::H, all) == 0);
        CHECK(generator_bound(l, m, Family::E, all) == 0);
    }
}

TEST_CASE("empty varieties contain the unit in both families") {
    for (const auto& [l, m] : oracle::all_pairs(5))
        if (!dominance_leq(m.sorted(), l))
            for (Family f : {Family::H, Family::E}) {
                bool unit_found = false;
                for (const auto& g : generators(l, m, f, 0)) unit_found |= g.poly == Polynomial::constant(m.size(), 1);
                CHECK(unit_found);
            }
}

TEST_CASE("regular compositions: E family is the Tanisaki generator set, d <= 5") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& lp : oracle::weakly_decreasing(d, d, d)) {
            const Partition l(lp);
            const Composition m(std::vector<int>(d, 1));
            std::vector<Polynomial> e;
            for (const auto& g : generators(l, m, Family::E, 2 * d)) e.push_back(g.poly);
            CHECK(texts(e) == texts(tanisaki_generators(l, d)));
        }
}

TEST_CASE("quotient examples") {
    const auto p1 = GradedQuotient::build({2}, {1, 1}, Family::H);
    CHECK(p1->dimensions().at(0) == 1);
    CHECK(p1->hilbert() == HilbertSeries({1, 1}));
    CHECK(p1->total_dimension() == 2);
    CHECK(GradedQuotient::build({2, 1}, {1, 1, 1}, Family::H)->hilbert() == HilbertSeries({1, 2}));
    const auto point = GradedQuotient::build({}, {}, Family::H);
    CHECK(point->hilbert() == HilbertSeries({1}));
    for (const auto& [l, m] : oracle::all_pairs(5))
        if (Composition(l.padded(m.length())) == m) CHECK(GradedQuotient::build(l, m, Family::E)->total_dimension() == 1);
}

TEST_CASE("quotient dimensions match the orbit-sum spanning set, d <= 4") {
    for (const auto& [l, m] : oracle::all_pairs(4))
        for (Family f : {Family::H, Family::E}) {
            const auto q = GradedQuotient::build(l, m, f);
            CHECK(q->dimensions() == oracle::naive_dimensions(l, m, f == Family::H, q->max_degree()));
        }
}

TEST_CASE("quotient dimensions match the orbit-sum spanning set on selected d = 5 pairs") {
    const oracle::Pair pairs[] = {{{3, 2}, {2, 1, 2}}, {{2, 2, 1}, {1, 2, 1, 1}}, {{4, 1}, {1, 1, 3}}, {{3, 1, 1}, {2, 0, 3}}};
    for (const auto& [l, m] : pairs)
        for (Family f : {Family::H, Family::E}) {
            const auto q = GradedQuotient::build(l, m, f);
            CHECK(q->dimensions() == oracle::naive_dimensions(l, m, f == Family::H, q->max_degree()));
        }
}

TEST_CASE("quotient laws, d <= 5") {
    for (const auto& [l, m] : oracle::all_pairs(5)) {
        const auto q = GradedQuotient::build(l, m, Family::H);
        const auto col = column_strict_tableaux(l, m);
        CHECK(q->vanishes_above_top());
        CHECK(q->dimension(q->max_degree() + 3) == 0);
        CHECK((q->total_dimension() > 0) == dominance_leq(m.sorted(), l));
        CHECK(q->total_dimension() == static_cast<long>(col.size()));
        if (!col.empty()) {
            CHECK(q->dimension(0) == 1);
            CHECK(q->dimension(q->top_degree()) == static_cast<long>(semistandard_tableaux(l, m).size()));
        }
        for (int D = 0; D <= q->max_degree(); ++D)
            CHECK(static_cast<long>(q->standard_monomials(D).size()) == q->dimension(D));
        CHECK(rel_equivalence(l, m));
    }
}

TEST_CASE("Hilbert series is invariant under permuting mu, d <= 5") {
    for (const auto& [l, m] : oracle::all_pairs(5)) {
        std::vector<int> parts = m.parts();
        std::sort(parts.begin(), parts.end());
        if (parts != m.parts()) continue;
        const HilbertSeries h = GradedQuotient::build(l, m, Family::H)->hilbert();
        while (std::next_permutation(parts.begin(), parts.end()))
            CHECK(GradedQuotient::build(l, Composition(parts), Family::H)->hilbert() == h);
    }
}

TEST_CASE("construction is deterministic") {
    const auto a = GradedQuotient::build({3, 2, 1}, {2, 1, 2, 1}, Family::H);
    const auto b = GradedQuotient::build({3, 2, 1}, {2, 1, 2, 1}, Family::H);
    CHECK(a->same_ideal(*b));
    CHECK(a->hilbert() == b->hilbert());
    const auto c = GradedQuotient::build({3, 2, 1}, {1, 2, 2, 1}, Family::H);
    CHECK_FALSE(a->same_ideal(*c));
}

TEST_CASE("reduce checks its input") {
    const auto q = GradedQuotient::build({2}, {1, 1}, Family::H);
    const Polynomial z = x(2, 1) + Polynomial::constant(2, 1);
    CHECK_THROWS_AS(q->reduce(z, 1), InvalidArgument);
    CHECK_THROWS_AS(q->reduce(x(3, 1), 1), InvalidArgument);
    CHECK(q->reduce(x(2, 1) * x(2, 2) * x(2, 2), 3).empty());
}

TEST_CASE("h(T) of the worked example") {
    const Composition mu{1, 4, 1, 3, 1, 2};
    const Tableau t = Tableau::parse("2,1,2,2;3,2,4;4,4,6;6,5");
    CHECK(h_of_tableau(t, mu) == x(12, 6) * (x(12, 11) + x(12, 12)));
    const int three[] = {3};
    const int six[] = {6};
    CHECK(h_of_tableau(t, mu) == complete_block(mu, three, 1) * complete_block(mu, six, 1));
}

TEST_CASE("h(T) basics, d <= 5") {
    const auto p1 = column_strict_tableaux({2}, {1, 1});
    CHECK(h_of_tableau(p1[0], {1, 1}) == x(2, 2));
    CHECK(h_of_tableau(p1[1], {1, 1}) == Polynomial::constant(2, 1));
    for (const auto& [l, m] : oracle::all_pairs(5)) {
        const InvariantRing ring(m);
        for (const auto& t : column_strict_tableaux(l, m)) {
            const Polynomial h = h_of_tableau(t, m);
            const int deg = tableau_degree(t, m);
            CHECK(h.is_homogeneous());
            CHECK(h.degree() == deg);
            CHECK(is_block_invariant(m, h));
            CHECK(ring.to_x(h_of_tableau(ring, t)) == h);
            if (deg == 0) CHECK(h == Polynomial::constant(m.size(), 1));
        }
    }
    CHECK_THROWS_AS(h_of_tableau(Tableau::parse("1;1"), {2}), InvalidArgument);
}

TEST_CASE("basis certification") {
    const auto cert = certify_basis(*GradedQuotient::build({2}, {1, 1}, Family::H));
    CHECK(cert.certified);
    CHECK(cert.basis.size() == 2);
    CHECK(cert.witness.empty());
    const auto empty = certify_basis(*GradedQuotient::build({1, 1}, {2, 0}, Family::H));
    CHECK(empty.certified);
    CHECK(empty.basis.empty());
    for (const auto& [l, m] : oracle::all_pairs(5)) {
        const auto c = certify_basis(*GradedQuotient::build(l, m, Family::E));
        CHECK(c.certified);
        CHECK(c.hilbert == c.tableau_series);
        CHECK(c.basis.size() == column_strict_tableaux(l, m).size());
    }
}

TEST_CASE("normal forms") {
    const CertifiedBasis p1(GradedQuotient::build({2}, {1, 1}, Family::H));
    CHECK(p1.normal_form(x(2, 1)) == std::vector<Rational>{0, -1});
    CHECK(p1.normal_form(x(2, 2)) == std::vector<Rational>{0, 1});
    CHECK(p1.normal_form(Polynomial::constant(2, 1)) == std::vector<Rational>{1, 0});
    CHECK(p1.normal_form(x(2, 2) * x(2, 2)) == std::vector<Rational>{0, 0});
    CHECK_THROWS_AS(CertifiedBasis(GradedQuotient::build({2}, {2}, Family::H)).normal_form(x(2, 1)),
                    InvalidArgument);

    for (const auto& [l, m] : oracle::all_pairs(5)) {
        const auto q = GradedQuotient::build(l, m, Family::H);
        const CertifiedBasis cb(q);
        const std::size_t n = cb.tableaux().size();
        for (std::size_t k = 0; k < n; ++k) CHECK(cb.normal_form(h_of_tableau(cb.tableaux()[k], m)) == unit(n, k));
        if (n > 0) {
            const auto one = cb.normal_form(Polynomial::constant(m.size(), 1));
            CHECK(one == unit(n, 0));
            CHECK(cb.degrees()[0] == 0);
        }
        if (m.size() > 4) continue;
        for (Family f : {Family::H, Family::E})
            for (const auto& g : generators(l, m, f, 2 * q->max_degree())) CHECK(all_zero(cb.normal_form(g.poly)));
    }
}

TEST_CASE("structure constants, d <= 4") {
    const CertifiedBasis p1(GradedQuotient::build({2}, {1, 1}, Family::H));
    const StructureConstants s1 = p1.structure_constants();
    CHECK(s1.product[1][1].empty());
    CHECK(s1.product[0][1] == std::vector<std::pair<int, Rational>>{{1, 1}});

    for (const auto& [l, m] : oracle::all_pairs(4)) {
        const CertifiedBasis cb(GradedQuotient::build(l, m, Family::H));
        const StructureConstants sc = cb.structure_constants();
        const std::size_t n = sc.dimension;
        CHECK(sc.is_integral());
        auto dense = [&](std::size_t i, std::size_t j) {
            std::vector<Rational> v(n);
            for (const auto& [k, c] : sc.product[i][j]) v[k] = c;
            return v;
        };
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(dense(0, i) == unit(n, i));
            for (std::size_t j = 0; j < n; ++j) CHECK(sc.product[i][j] == sc.product[j][i]);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    std::vector<Rational> left(n), right(n);
                    for (const auto& [k, u] : sc.product[a][b])
                        for (const auto& [t, v] : sc.product[k][c]) left[t] += u * v;
                    for (const auto& [k, u] : sc.product[b][c])
                        for (const auto& [t, v] : sc.product[a][k]) right[t] += u * v;
                    CHECK(left == right);
                }
    }
}

TEST_CASE("Hilbert series value type") {
    const HilbertSeries h({1, 2, 0, 1, 0, 0});
    CHECK(h.coefficients == std::vector<long>{1, 2, 0, 1});
    CHECK(h.total() == 4);
    CHECK(h.evaluate(1) == 4);
    CHECK(h.evaluate(2) == 1 + 2 * 4 + 64);
    CHECK(h.to_string() == "1 + 2q^2 + q^6");
    CHECK(HilbertSeries().to_string() == "0");
    CHECK(HilbertSeries({0, 0}) == HilbertSeries());
}

TEST_CASE("anti-invariant transfer examples") {
    const TransferReport r = anti_invariant_transfer({2}, {2});
    CHECK(r.passed);
    CHECK(r.shift == 1);
    REQUIRE(r.degrees.size() >= 2);
    CHECK(r.degrees[0].anti_invariant_dim == 0);
    CHECK(r.degrees[1].anti_invariant_dim == 1);
    CHECK(r.degrees[1].quotient_dim == 1);
    CHECK(r.degrees[1].image_rank == 1);

    const TransferReport reg = anti_invariant_transfer({2, 1}, {1, 1, 1});
    CHECK(reg.passed);
    CHECK(reg.shift == 0);
    for (const auto& td : reg.degrees) CHECK(td.anti_invariant_dim == td.quotient_dim);

    const auto q = GradedQuotient::build({2}, {2}, Family::H);
    CHECK_THROWS_AS(anti_invariant_transfer(*q, *regular_quotient({1, 1}, 2)), InvalidArgument);
    CHECK_THROWS_AS(anti_invariant_transfer(*q, *q), InvalidArgument);
}

TEST_CASE("anti-invariant transfer, d <= 4") {
    for (const auto& [l, m] : oracle::all_pairs(4)) {
        const TransferReport r = anti_invariant_transfer(l, m);
        CHECK(r.passed);
        CHECK(r.witness.empty());
        long total = 0;
        for (const auto& td : r.degrees) total += td.anti_invariant_dim;
        CHECK(total == static_cast<long>(column_strict_tableaux(l, m).size()));
    }
}
