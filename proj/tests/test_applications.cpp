#include <doctest.h>

#include "support.hpp"

using namespace toric;

TEST_CASE("stable splitting descriptors") {
    SUBCASE("cp2 suspends to Sigma CP^2 alone") {
        const SplittingDescriptor s = stable_splitting(fixtures::cp2());
        REQUIRE(s.summands.size() == 1);
        CHECK(s.summands[0].kind == SummandKind::SuspendedCP2);
    }
    SUBCASE("torsion triangle") {
        const SplittingDescriptor s = stable_splitting(fixtures::torsion_triangle());
        CHECK(s == splitting_from_invariants(1, 2, false));
        REQUIRE(s.summands.size() == 3);
        CHECK(s.summands[0] == Summand{SummandKind::Sphere, 3, 0});
        CHECK(s.summands[1] == Summand{SummandKind::Sphere, 5, 0});
        CHECK(s.summands[2] == Summand{SummandKind::Moore, 4, 2});
    }
    SUBCASE("F2 square gives two 3-spheres and a 5-sphere") {
        const SplittingDescriptor s = stable_splitting(fixtures::hirzebruch(2));
        CHECK(s == splitting_from_invariants(2, 1, false));
        REQUIRE(s.summands.size() == 3);
        CHECK(s.summands[0] == Summand{SummandKind::Sphere, 3, 0});
        CHECK(s.summands[1] == Summand{SummandKind::Sphere, 3, 0});
        CHECK(s.summands[2] == Summand{SummandKind::Sphere, 5, 0});
    }
    SUBCASE("equal invariant triples give literally equal descriptors") {
        CHECK(stable_splitting(fixtures::hirzebruch(2)) ==
              stable_splitting(fixtures::hirzebruch(4)));
        CHECK(stable_splitting(fixtures::hirzebruch(1)) ==
              stable_splitting(fixtures::hirzebruch(3)));
    }
}

TEST_CASE("spin reports") {
    SUBCASE("F2 is spin") {
        const SpinReport r = spin_report(fixtures::hirzebruch(2));
        CHECK(r.is_quasi_toric);
        CHECK(r.w2_vanishes == true);
        CHECK(r.product_criterion == true);
        CHECK(r.parity_criterion == true);
    }
    SUBCASE("F1 is not spin") {
        const SpinReport r = spin_report(fixtures::hirzebruch(1));
        CHECK(r.is_quasi_toric);
        CHECK(r.w2_vanishes == false);
    }
    SUBCASE("cp2 is not spin") {
        const SpinReport r = spin_report(fixtures::cp2());
        CHECK(r.is_quasi_toric);
        CHECK(r.w2_vanishes == false);
    }
    SUBCASE("torsion triangle has no spin verdict") {
        const SpinReport r = spin_report(fixtures::torsion_triangle());
        CHECK_FALSE(r.is_quasi_toric);
        CHECK_FALSE(r.w2_vanishes.has_value());
        CHECK_FALSE(r.product_criterion.has_value());
        CHECK_FALSE(r.parity_criterion.has_value());
    }
    SUBCASE("spin alternates with k") {
        for (Int k = 0; k <= 6; ++k)
            CHECK(spin_report(fixtures::hirzebruch(k)).w2_vanishes == (k % 2 == 0));
    }
}

TEST_CASE("spin criteria agree and negate Sq^2 on random quasi-toric pairs") {
    std::mt19937_64 rng(61);
    int seen = 0;
    while (seen < 100) {
        const CharacteristicPair pair = fixtures::random_pair(rng);
        const SpinReport r = spin_report(pair); // asserts product == parity internally
        if (!r.is_quasi_toric)
            continue;
        ++seen;
        CHECK(r.product_criterion == r.parity_criterion);
        CHECK(*r.w2_vanishes == !sq2_nontrivial(pair));
    }
}

TEST_CASE("gauge descriptors") {
    SUBCASE("F2 with SU(2)") {
        const GaugeDescriptor d = gauge_descriptor(fixtures::hirzebruch(2), "SU(2)");
        CHECK(d.base_case == GaugeBase::S4Based);
        CHECK(d.loop_factors == 2);
        CHECK_FALSE(d.torsion_factor_order.has_value());
        CHECK(d.group_tag == "SU(2)");
    }
    SUBCASE("pentagon with non-trivial Sq^2 and n = 3") {
        REQUIRE(sq2_nontrivial(fixtures::pentagon_sq2()));
        const GaugeDescriptor d = gauge_descriptor(fixtures::pentagon_sq2(), "SU(2)");
        CHECK(d.base_case == GaugeBase::CP2Based);
        CHECK(d.loop_factors == 2);
    }
    SUBCASE("cp2 falls outside the decomposition") {
        const GaugeDescriptor d = gauge_descriptor(fixtures::cp2(), "SU(2)");
        CHECK(d.base_case == GaugeBase::NotCovered);
    }
    SUBCASE("torsion factor is kept when g > 1") {
        const GaugeDescriptor d = gauge_descriptor(fixtures::torsion_triangle(), "SU(2)");
        CHECK(d.base_case == GaugeBase::S4Based);
        CHECK(d.torsion_factor_order == 2);
    }
}

TEST_CASE("SU(2) gauge equivalence") {
    const CharacteristicPair f2 = fixtures::hirzebruch(2);
    CHECK(su2_gauge_equivalent(f2, 1, 5));
    CHECK_FALSE(su2_gauge_equivalent(f2, 2, 4));
    const CharacteristicPair f1 = fixtures::hirzebruch(1);
    CHECK(su2_gauge_equivalent(f1, 1, 5));
    // gcd(2,6) = 2 = gcd(4,6): equivalent under the mod-6 rule only
    CHECK(su2_gauge_equivalent(f1, 2, 4));
}

TEST_CASE("ring_iso_search") {
    const CupForm one{1, {{1}}, 0};
    SUBCASE("identity witness") {
        const auto witness = ring_iso_search(one, one, 1);
        REQUIRE(witness.has_value());
        CHECK(witness->matrix == std::vector<std::vector<Int>>{{1}});
        CHECK(witness->epsilon == 1);
    }
    SUBCASE("rank 1 with different absolute values has no witness") {
        const CupForm six{1, {{6}}, 0};
        CHECK_FALSE(ring_iso_search(one, six, 1).has_value());
        CHECK_FALSE(ring_iso_search(one, six, 10).has_value());
    }
    SUBCASE("odd indefinite rank-2 forms are congruent") {
        const CupForm a{2, {{1, 1}, {1, 0}}, 0};
        const CupForm b{2, {{1, 0}, {0, -1}}, 0};
        const auto witness = ring_iso_search(a, b, 2);
        REQUIRE(witness.has_value());
        // verify S^T A S = eps B by hand
        const auto& S = witness->matrix;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Int acc = 0;
                for (std::size_t k = 0; k < 2; ++k)
                    for (std::size_t l = 0; l < 2; ++l)
                        acc += S[k][i] * a.entries[k][l] * S[l][j];
                CHECK(acc == witness->epsilon * b.entries[i][j]);
            }
    }
    SUBCASE("a found witness inverts to a witness the other way") {
        const CupForm a{2, {{1, 1}, {1, 0}}, 0};
        const CupForm b{2, {{1, 0}, {0, -1}}, 0};
        const auto forward = ring_iso_search(a, b, 2);
        REQUIRE(forward.has_value());
        // T = S^-1 satisfies T^T B T = eps A
        const auto& S = forward->matrix;
        const Int det = S[0][0] * S[1][1] - S[0][1] * S[1][0];
        REQUIRE(uabs(det) == 1);
        const std::vector<std::vector<Int>> T{{det * S[1][1], -det * S[0][1]},
                                              {-det * S[1][0], det * S[0][0]}};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Int acc = 0;
                for (std::size_t k = 0; k < 2; ++k)
                    for (std::size_t l = 0; l < 2; ++l)
                        acc += T[k][i] * b.entries[k][l] * T[l][j];
                CHECK(acc == forward->epsilon * a.entries[i][j]);
            }
        CHECK(ring_iso_search(b, a, 2).has_value());
    }
}

TEST_CASE("compare_rigidity tiers") {
    SUBCASE("even torsion stops at stable equivalence") {
        const RigidityVerdict v =
            compare_rigidity(fixtures::torsion_triangle(), fixtures::torsion_triangle());
        CHECK(v.tier == RigidityTier::StablyEquivalent);
    }
    SUBCASE("different Betti numbers") {
        const RigidityVerdict v = compare_rigidity(fixtures::cp2(), fixtures::hirzebruch(1));
        CHECK(v.tier == RigidityTier::GradedGroupsDiffer);
    }
    SUBCASE("Sq^2 distinguishes two triangles with g = 1") {
        const CharacteristicPair self_cup_six{{{1, 0}, {0, 1}, {-2, -3}}};
        const RigidityVerdict v = compare_rigidity(fixtures::cp2(), self_cup_six);
        CHECK(v.tier == RigidityTier::StablyInequivalent);
    }
    SUBCASE("identical smooth input is homotopy equivalent") {
        const RigidityVerdict v = compare_rigidity(fixtures::cp2(), fixtures::cp2());
        CHECK(v.tier == RigidityTier::HomotopyEquivalent);
        REQUIRE(v.witness.has_value());
    }
    SUBCASE("rank-1 forms of different absolute value stay inconclusive with exact evidence") {
        // both triangles have trivial Sq^2 and odd g = 1 with smooth vertices
        const CharacteristicPair a{{{1, 0}, {0, 1}, {-2, -1}}};
        const CharacteristicPair b{{{1, 0}, {0, 1}, {-4, -1}}};
        REQUIRE_FALSE(sq2_nontrivial(a));
        REQUIRE_FALSE(sq2_nontrivial(b));
        const RigidityVerdict v = compare_rigidity(a, b);
        CHECK(v.tier == RigidityTier::HomotopyInconclusive);
        CHECK(v.evidence.find("rank 1") != std::string::npos);
    }
    SUBCASE("odd torsion above 1 stays inconclusive: no computable ring") {
        // all three determinants are divisible by 3, so g = 3 and the cup
        // form is unavailable; the self-cup is 3, so Sq^2 is non-trivial
        const CharacteristicPair g3{{{1, 0}, {1, 3}, {-2, -3}}};
        REQUIRE(cohomology_profile(g3) == CohomologyProfile{1, 3});
        REQUIRE(triangle_self_cup(g3) == 3);
        CHECK(sq2_nontrivial(g3));
        CHECK(stable_splitting(g3) == splitting_from_invariants(1, 3, true));
        CHECK(gauge_descriptor(g3, "SU(2)").base_case == GaugeBase::NotCovered);
        const RigidityVerdict v = compare_rigidity(g3, g3);
        CHECK(v.tier == RigidityTier::HomotopyInconclusive);
        CHECK(v.evidence.find("unavailable") != std::string::npos);
    }
    SUBCASE("no negative tier against a symmetric copy") {
        std::mt19937_64 rng(62);
        SymmetrySampler sampler(63);
        for (int trial = 0; trial < 30; ++trial) {
            const CharacteristicPair pair = fixtures::random_pair(rng);
            const RigidityVerdict v = compare_rigidity(pair, sampler.act(pair));
            CHECK(v.tier != RigidityTier::GradedGroupsDiffer);
            CHECK(v.tier != RigidityTier::StablyInequivalent);
        }
    }
}
