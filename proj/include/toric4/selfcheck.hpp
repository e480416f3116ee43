#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "toric4/census.hpp"

namespace toric {

/// Deterministic generator for the three symmetry actions, used by the
/// property suite and the tests. The same seed always yields the same
/// stream.
class SymmetrySampler {
public:
    explicit SymmetrySampler(std::uint64_t seed) : rng_(seed) {}

    long rotation(std::size_t m) {
        return std::uniform_int_distribution<long>(0, static_cast<long>(m) - 1)(rng_);
    }

    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

    std::vector<int> signs(std::size_t m) {
        std::vector<int> out(m);
        for (auto& s : out)
            s = coin() ? 1 : -1;
        return out;
    }

    /// Rejection-sampled unimodular matrix with entries in [-3, 3].
    Unimodular2 unimodular() {
        std::uniform_int_distribution<Int> entry(-3, 3);
        while (true) {
            Unimodular2 M{entry(rng_), entry(rng_), entry(rng_), entry(rng_)};
            if (M.is_unimodular())
                return M;
        }
    }

    /// A pair in the same symmetry class: relabel then transform.
    CharacteristicPair act(const CharacteristicPair& pair) {
        const CharacteristicPair relabeled = relabel(pair, rotation(pair.edge_count()), coin());
        return transform(relabeled, unimodular(), signs(pair.edge_count()));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::string detail;

    explicit PropertyResult(std::string n) : name(std::move(n)) {}

    void fail(const std::string& message) {
        if (passed) {
            passed = false;
            detail = message;
        }
    }
};

namespace detail {

inline std::string describe(const CharacteristicPair& pair) {
    std::string out = "[";
    for (std::size_t i = 0; i < pair.edge_count(); ++i) {
        if (i)
            out += ",";
        out += "(" + std::to_string(pair.vectors[i].a) + "," + std::to_string(pair.vectors[i].b) +
               ")";
    }
    return out + "]";
}

} // namespace detail

/// Runs every census-level property over the deduplicated census with m
/// edges and entry bound B. Each property yields one PropertyResult; a
/// failed property keeps the first offending datum in its detail string.
inline std::vector<PropertyResult> run_property_suite(std::size_t m, Int bound) {
    const std::vector<CensusRecord> records = census_run(m, bound);
    SymmetrySampler sampler(0x70CA1u);

    PropertyResult smooth_exists{"p-local smooth vertices exist for p in {2,3,5,7}"};
    PropertyResult torsion_kills_sq2{"even torsion forces trivial Sq^2"};
    PropertyResult vertex_choice{"Sq^2 verdict independent of the 2-local smooth vertex"};
    PropertyResult reduction{"edge contractions witness the Sq^2 verdict"};
    PropertyResult contraction_torsion{"contractions preserve the 2-part of the torsion order"};
    PropertyResult cup_square{"Sq^2 equals the parity of some diagonal cup square (g=1, smooth)"};
    PropertyResult unimodular_cup{"quasi-toric cup forms are unimodular"};
    PropertyResult spin_agreement{"spin product and parity criteria agree and negate Sq^2"};
    PropertyResult key_invariance{"canonical keys absorb relabel and transform"};
    PropertyResult table_function{"analysis factors through the determinant table"};
    PropertyResult splitting_shape{"splitting depends only on (n, g, Sq^2)"};
    PropertyResult rigidity_reflexive{"rigidity of symmetric copies is never negative"};

    for (const CensusRecord& record : records) {
        const CharacteristicPair& pair = record.representative;
        const DeterminantTable table = det_table(pair);
        const Int g = record.profile.torsion_order;

        for (Int p : {2, 3, 5, 7}) {
            ++smooth_exists.checks;
            try {
                if (p_local_smooth_vertices(table, p).indices.empty())
                    smooth_exists.fail("empty vertex set at " + detail::describe(pair));
            } catch (const std::exception& e) {
                smooth_exists.fail(std::string(e.what()) + " at " + detail::describe(pair));
            }
        }

        ++torsion_kills_sq2.checks;
        if (g % 2 == 0 && record.steenrod.sq2_nontrivial)
            torsion_kills_sq2.fail("even g with non-trivial Sq^2 at " + detail::describe(pair));

        ++vertex_choice.checks;
        if (!sq2_vertex_choice_consistent(pair))
            vertex_choice.fail("vertex-dependent Sq^2 at " + detail::describe(pair));

        // contraction checks run in the labeling that puts the witness last
        {
            const std::size_t witness = record.steenrod.witness_vertex;
            const CharacteristicPair normalized =
                relabel(pair, detail::rotation_sending_vertex_last(witness, m), false);
            ++reduction.checks;
            if (any_contraction_sq2(normalized) != record.steenrod.sq2_nontrivial)
                reduction.fail("contraction mismatch at " + detail::describe(pair));
            for (std::size_t i = 1; i + 2 <= m; ++i) {
                ++contraction_torsion.checks;
                const Int gi = degenerate_g(edge_contract(normalized, i));
                if (p_valuation(gi, 2) != p_valuation(g, 2))
                    contraction_torsion.fail("nu_2 mismatch at " + detail::describe(pair));
            }
        }

        const CupFormResult form = cup_form(pair);
        if (std::holds_alternative<CupForm>(form)) {
            const CupForm& cf = std::get<CupForm>(form);
            ++cup_square.checks;
            bool odd_diagonal = false;
            for (std::size_t i = 1; i <= cf.n; ++i)
                if (uabs(cf.entry(i, i)) % 2 == 1)
                    odd_diagonal = true;
            if (odd_diagonal != record.steenrod.sq2_nontrivial)
                cup_square.fail("cup square parity mismatch at " + detail::describe(pair));
            if (record.spin.is_quasi_toric) {
                ++unimodular_cup.checks;
                if (uabs(cf.det()) != 1)
                    unimodular_cup.fail("non-unimodular cup form at " + detail::describe(pair));
            }
        }

        if (record.spin.is_quasi_toric) {
            ++spin_agreement.checks;
            const bool product = record.spin.product_criterion.value();
            const bool parity = record.spin.parity_criterion.value();
            if (product != parity || product != !record.steenrod.sq2_nontrivial)
                spin_agreement.fail("spin criteria mismatch at " + detail::describe(pair));
        }

        for (int trial = 0; trial < 3; ++trial) {
            const CharacteristicPair moved = sampler.act(pair);

            ++key_invariance.checks;
            if (canonical_key(moved) != record.key)
                key_invariance.fail("key changed under symmetry at " + detail::describe(pair));

            ++table_function.checks;
            const SteenrodProfile steenrod = steenrod_profile(moved);
            const SpinReport spin = spin_report(moved);
            const bool same = cohomology_profile(moved) == record.profile &&
                              steenrod.sq1_h2_nontrivial == record.steenrod.sq1_h2_nontrivial &&
                              steenrod.sq2_nontrivial == record.steenrod.sq2_nontrivial &&
                              stable_splitting(moved) == record.splitting &&
                              spin.is_quasi_toric == record.spin.is_quasi_toric &&
                              spin.w2_vanishes == record.spin.w2_vanishes;
            if (!same)
                table_function.fail("analysis changed under symmetry at " + detail::describe(pair));

            ++rigidity_reflexive.checks;
            const RigidityVerdict verdict = compare_rigidity(pair, moved);
            if (verdict.tier == RigidityTier::GradedGroupsDiffer ||
                verdict.tier == RigidityTier::StablyInequivalent)
                rigidity_reflexive.fail("negative self-comparison at " + detail::describe(pair));
        }

        ++splitting_shape.checks;
        if (splitting_from_invariants(record.profile.betti2, g, record.steenrod.sq2_nontrivial) !=
            record.splitting)
            splitting_shape.fail("splitting not a function of (n,g,Sq^2) at " +
                                 detail::describe(pair));
    }

    return {smooth_exists,   torsion_kills_sq2, vertex_choice,   reduction,
            contraction_torsion, cup_square,    unimodular_cup,  spin_agreement,
            key_invariance,  table_function,    splitting_shape, rigidity_reflexive};
}

} // namespace toric
