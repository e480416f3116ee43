#include <doctest.h>

#include <limits>

#include "support.hpp"

using namespace toric;

TEST_CASE("det2 on small matrices") {
    CHECK(det2({1, 0}, {0, 1}) == 1);
    CHECK(det2({1, 2}, {1, 0}) == -2);
    CHECK(det2({3, -5}, {3, -5}) == 0);
    CHECK(det2({-7, 2}, {-7, 2}) == 0);
}

TEST_CASE("det2 reports overflow instead of wrapping") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(det2({big, 1}, {1, big}), std::overflow_error);
}

TEST_CASE("det_table fills the upper triangle") {
    SUBCASE("cp2 triangle") {
        const DeterminantTable t = det_table(fixtures::cp2());
        CHECK(t.at(1, 2) == 1);
        CHECK(t.at(1, 3) == -1);
        CHECK(t.at(2, 3) == 1);
        CHECK(t.d(3, 1) == 1); // signed lookup negates
    }
    SUBCASE("torsion triangle") {
        const DeterminantTable t = det_table(fixtures::torsion_triangle());
        CHECK(t.at(1, 2) == -2);
        CHECK(t.at(1, 3) == -4);
        CHECK(t.at(2, 3) == -2);
    }
    SUBCASE("square with parallel opposite edges") {
        const DeterminantTable t = det_table({{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}});
        CHECK(t.at(1, 3) == 0);
        CHECK(t.at(2, 4) == 0);
        for (std::size_t v = 1; v <= 4; ++v)
            CHECK(uabs(t.vertex_det(v)) == 1);
    }
}

TEST_CASE("torsion_order is a zero-neutral gcd") {
    CHECK(torsion_order(det_table(fixtures::cp2())) == 1);
    CHECK(torsion_order(det_table(fixtures::torsion_triangle())) == 2);
    CHECK(torsion_order(det_table({{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}})) == 1);
    CHECK_THROWS_AS(torsion_order(DeterminantTable{3, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("p_valuation") {
    CHECK(p_valuation(12, 2) == 2);
    CHECK(p_valuation(-7, 2) == 0);
    CHECK(p_valuation(54, 3) == 3);
    CHECK(p_valuation(-48, 2) == 4);
    CHECK_THROWS_AS(p_valuation(0, 2), std::domain_error);
}

TEST_CASE("det2 is antisymmetric and bilinear") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<Int> entry(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const CharVector u{entry(rng), entry(rng)};
        const CharVector v{entry(rng), entry(rng)};
        const CharVector w{entry(rng), entry(rng)};
        CHECK(det2(u, v) == -det2(v, u));
        CHECK(det2(u, u) == 0);
        const CharVector uw{u.a + w.a, u.b + w.b};
        CHECK(det2(uw, v) == det2(u, v) + det2(w, v));
    }
}

TEST_CASE("valuations add under multiplication") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<Int> entry(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        Int a = entry(rng), b = entry(rng);
        if (a == 0 || b == 0)
            continue;
        for (Int p : {2, 3, 5})
            CHECK(p_valuation(a * b, p) == p_valuation(a, p) + p_valuation(b, p));
    }
}

TEST_CASE("torsion order is invariant under transform and divides every entry") {
    std::mt19937_64 rng(23);
    SymmetrySampler sampler(24);
    for (int trial = 0; trial < 100; ++trial) {
        const CharacteristicPair pair = fixtures::random_pair(rng);
        const DeterminantTable table = det_table(pair);
        const Int g = torsion_order(table);
        for (Int e : table.entries)
            CHECK(e % g == 0);
        const CharacteristicPair moved =
            transform(pair, sampler.unimodular(), sampler.signs(pair.edge_count()));
        CHECK(torsion_order(det_table(moved)) == g);
    }
}

TEST_CASE("exact_det on small matrices") {
    CHECK(exact_det({}) == 1);
    CHECK(exact_det({{7}}) == 7);
    CHECK(exact_det({{1, 1}, {1, 0}}) == -1);
    CHECK(exact_det({{0, 1}, {1, 0}}) == -1);
    CHECK(exact_det({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
    // cofactor expansion along the first row gives -2*(2-3) + 1*(0-3) = -1
    CHECK(exact_det({{0, 2, 1}, {1, 1, 1}, {3, 0, 2}}) == -1);
    CHECK(exact_det({{1, 2}, {2, 4}}) == 0);
}
