#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric4/contraction.hpp"
#include "toric4/steenrod.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Stable splitting of the suspension
// ---------------------------------------------------------------------------

enum class SummandKind { Sphere, Moore, SuspendedCP2 };

/// One wedge summand. dim/order are meaningful for spheres and Moore
/// spaces; the suspended CP^2 carries no parameters.
struct Summand {
    SummandKind kind = SummandKind::Sphere;
    int dim = 0;
    Int order = 0;

    friend bool operator==(const Summand&, const Summand&) = default;
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Canonical multiset of wedge summands of the suspension, sorted by
/// (kind, dim, order) so equality of descriptors is literal equality.
/// The mod-1 Moore space is a point and is never listed.
struct SplittingDescriptor {
    std::vector<Summand> summands;

    friend bool operator==(const SplittingDescriptor&, const SplittingDescriptor&) = default;
};

inline SplittingDescriptor splitting_from_invariants(std::size_t n, Int g, bool sq2) {
    SplittingDescriptor out;
    if (sq2) {
        out.summands.push_back({SummandKind::SuspendedCP2, 5, 0});
        for (std::size_t i = 1; i < n; ++i)
            out.summands.push_back({SummandKind::Sphere, 3, 0});
    } else {
        out.summands.push_back({SummandKind::Sphere, 5, 0});
        for (std::size_t i = 0; i < n; ++i)
            out.summands.push_back({SummandKind::Sphere, 3, 0});
    }
    if (g > 1)
        out.summands.push_back({SummandKind::Moore, 4, g});
    std::sort(out.summands.begin(), out.summands.end());
    return out;
}

inline SplittingDescriptor stable_splitting(const CharacteristicPair& pair) {
    const CohomologyProfile profile = cohomology_profile(pair);
    return splitting_from_invariants(profile.betti2, profile.torsion_order,
                                     sq2_nontrivial(pair));
}

// ---------------------------------------------------------------------------
// Spin criterion for the quasi-toric (smooth) case
// ---------------------------------------------------------------------------

/// Spin verdict for quasi-toric pairs, with both routes computed
/// independently: the parity of prod(1 - d_{i,m-1} d_{i,m}) and the
/// one-even-one-odd test on the vectors after the basis is changed so the
/// last two become (1,0) and (0,1). The two must agree; their shared value
/// is the vanishing of the second Stiefel-Whitney class, which is also the
/// negation of the Sq^2 verdict. Non-quasi-toric input leaves all three
/// verdicts absent.
struct SpinReport {
    bool is_quasi_toric = false;
    std::optional<bool> w2_vanishes;
    std::optional<bool> product_criterion;
    std::optional<bool> parity_criterion;
};

inline bool is_quasi_toric(const DeterminantTable& table) {
    for (std::size_t i = 1; i <= table.m; ++i)
        if (abs_checked(table.vertex_det(i)) != 1)
            return false;
    return true;
}

inline bool is_quasi_toric(const CharacteristicPair& pair) {
    require_strict(pair);
    return is_quasi_toric(det_table(pair));
}

inline SpinReport spin_report(const CharacteristicPair& pair) {
    require_strict(pair);
    const std::size_t m = pair.edge_count();
    const DeterminantTable table = det_table(pair);
    SpinReport report;
    report.is_quasi_toric = is_quasi_toric(table);
    if (!report.is_quasi_toric)
        return report;

    // product parity only: 1 - d_{i,m-1} d_{i,m} is odd iff the product of
    // the two determinants is even
    bool product_odd = true;
    for (std::size_t i = 1; i + 2 <= m; ++i) {
        const bool factor_even = table.at(i, m - 1) % 2 != 0 && table.at(i, m) % 2 != 0;
        if (factor_even)
            product_odd = false;
    }
    report.product_criterion = product_odd;

    // basis change sending lambda_{m-1}, lambda_m to (1,0), (0,1); its
    // matrix is the inverse of the column matrix of those two vectors,
    // integral because their determinant is +-1
    const CharVector& u = pair.edge(m - 1);
    const CharVector& v = pair.edge(m);
    const Unimodular2 columns{u.a, v.a, u.b, v.b};
    const Unimodular2 M = columns.inverse();
    bool all_mixed_parity = true;
    for (std::size_t i = 1; i <= m; ++i) {
        const CharVector w = M.apply(pair.edge(i));
        if ((uabs(w.a) + uabs(w.b)) % 2 == 0)
            all_mixed_parity = false;
    }
    report.parity_criterion = all_mixed_parity;

    if (report.product_criterion != report.parity_criterion)
        throw std::logic_error("spin criteria disagree; determinant data is inconsistent");
    report.w2_vanishes = report.product_criterion;
    return report;
}

// ---------------------------------------------------------------------------
// Gauge group decomposition shape
// ---------------------------------------------------------------------------

enum class GaugeBase { S4Based, CP2Based, NotCovered };

/// Decomposition shape of the gauge group of a principal G-bundle over the
/// orbifold: a gauge group over S^4 or CP^2 times loop-space factors, with
/// an extra mapping-space factor for the mod-g Moore space when g > 1.
/// The rank-1 case with non-trivial Sq^2 falls outside the decomposition
/// and is surfaced as NotCovered rather than extrapolated.
struct GaugeDescriptor {
    GaugeBase base_case = GaugeBase::S4Based;
    std::size_t loop_factors = 0;
    std::optional<Int> torsion_factor_order;
    std::string group_tag;
};

inline GaugeDescriptor gauge_descriptor(const CharacteristicPair& pair, std::string group_tag) {
    const CohomologyProfile profile = cohomology_profile(pair);
    const bool sq2 = sq2_nontrivial(pair);
    GaugeDescriptor out;
    out.group_tag = std::move(group_tag);
    if (profile.torsion_order > 1)
        out.torsion_factor_order = profile.torsion_order;
    if (!sq2) {
        out.base_case = GaugeBase::S4Based;
        out.loop_factors = profile.betti2;
    } else if (profile.betti2 > 1) {
        out.base_case = GaugeBase::CP2Based;
        out.loop_factors = profile.betti2 - 1;
    } else {
        out.base_case = GaugeBase::NotCovered;
        out.loop_factors = 0;
    }
    return out;
}

/// SU(2) gauge groups over the orbifold for Chern classes k and k' are
/// homotopy equivalent iff gcd(k,12) = gcd(k',12) when Sq^2 is trivial,
/// and iff gcd(k,6) = gcd(k',6) when it is not.
inline bool su2_gauge_equivalent(const CharacteristicPair& pair, Int k, Int kprime) {
    const Int modulus = sq2_nontrivial(pair) ? 6 : 12;
    return gcd_zero_neutral(k, modulus) == gcd_zero_neutral(kprime, modulus);
}

// ---------------------------------------------------------------------------
// Integral congruence search and rigidity comparison
// ---------------------------------------------------------------------------

/// A unimodular S and sign eps with S^T A S = eps * B.
struct RingIsoWitness {
    std::vector<std::vector<Int>> matrix;
    int epsilon = 1;
};

namespace detail {

inline Int bilinear(const std::vector<std::vector<Int>>& A, const std::vector<Int>& x,
                    const std::vector<Int>& y) {
    Int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            acc = checked_add(acc, checked_mul(x[i], checked_mul(A[i][j], y[j])));
    return acc;
}

struct CongruenceSearch {
    const std::vector<std::vector<Int>>& A;
    const std::vector<std::vector<Int>>& B;
    std::size_t n;
    std::vector<Int> values; // 0, 1, -1, 2, -2, ... so simple witnesses come first
    std::vector<std::vector<std::size_t>> indices;
    std::vector<std::vector<Int>> columns;

    CongruenceSearch(const std::vector<std::vector<Int>>& a,
                     const std::vector<std::vector<Int>>& b, std::size_t rank, Int bound)
        : A(a), B(b), n(rank) {
        values.push_back(0);
        for (Int v = 1; v <= bound; ++v) {
            values.push_back(v);
            values.push_back(-v);
        }
    }

    // Columns are filled left to right. Each column runs through the value
    // order entry by entry, so the first hit is the minimal matrix in
    // column-major order with 0 < 1 < -1 < 2 < ... per entry. eps = +1 is
    // preferred when both signs work.
    std::optional<RingIsoWitness> run() {
        indices.assign(n, std::vector<std::size_t>(n, 0));
        columns.assign(n, std::vector<Int>(n, 0));
        return place(0, true, true);
    }

    std::optional<RingIsoWitness> place(std::size_t j, bool plus_ok, bool minus_ok) {
        if (!plus_ok && !minus_ok)
            return std::nullopt;
        if (j == n) {
            std::vector<std::vector<Int>> S(n, std::vector<Int>(n));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    S[r][c] = columns[c][r];
            const Int det = exact_det(S);
            if (det != 1 && det != -1)
                return std::nullopt;
            return RingIsoWitness{S, plus_ok ? 1 : -1};
        }
        std::vector<std::size_t>& idx = indices[j];
        std::vector<Int>& col = columns[j];
        idx.assign(n, 0);
        col.assign(n, 0);
        while (true) {
            const Int qjj = bilinear(A, col, col);
            bool p = plus_ok && qjj == B[j][j];
            bool m = minus_ok && qjj == checked_neg(B[j][j]);
            for (std::size_t i = 0; i < j && (p || m); ++i) {
                const Int qij = bilinear(A, columns[i], col);
                p = p && qij == B[i][j];
                m = m && qij == checked_neg(B[i][j]);
            }
            if (p || m) {
                if (auto found = place(j + 1, p, m))
                    return found;
            }
            // odometer increment over the value order, last entry fastest
            std::size_t pos = n;
            while (pos > 0) {
                if (idx[pos - 1] + 1 < values.size()) {
                    ++idx[pos - 1];
                    col[pos - 1] = values[idx[pos - 1]];
                    break;
                }
                idx[pos - 1] = 0;
                col[pos - 1] = 0;
                --pos;
            }
            if (pos == 0)
                return std::nullopt;
        }
    }
};

} // namespace detail

/// Bounded search for a unimodular congruence S^T A S = eps B with entries
/// of S in [-bound, bound]. Absence of a witness only means none exists
/// within the bound; it is a semi-decision except in rank 1, where
/// unimodularity forces S = (+-1) and any bound >= 1 settles the question.
inline std::optional<RingIsoWitness> ring_iso_search(const CupForm& formA, const CupForm& formB,
                                                     Int bound) {
    if (formA.n != formB.n)
        throw std::invalid_argument("congruence search requires equal ranks");
    if (bound < 1)
        throw std::invalid_argument("search bound must be positive");
    detail::CongruenceSearch search(formA.entries, formB.entries, formA.n, bound);
    return search.run();
}

// ---------------------------------------------------------------------------
// Rigidity comparison
// ---------------------------------------------------------------------------

enum class RigidityTier {
    GradedGroupsDiffer,
    StablyInequivalent,
    StablyEquivalent,
    HomotopyEquivalent,
    HomotopyInconclusive
};

inline const char* to_string(RigidityTier tier) {
    switch (tier) {
    case RigidityTier::GradedGroupsDiffer: return "GradedGroupsDiffer";
    case RigidityTier::StablyInequivalent: return "StablyInequivalent";
    case RigidityTier::StablyEquivalent: return "StablyEquivalent";
    case RigidityTier::HomotopyEquivalent: return "HomotopyEquivalent";
    case RigidityTier::HomotopyInconclusive: return "HomotopyInconclusive";
    }
    return "?";
}

struct RigidityVerdict {
    RigidityTier tier = RigidityTier::HomotopyInconclusive;
    std::string evidence;
    std::optional<RingIsoWitness> witness;
};

/// Decision ladder for comparing two pairs:
///  - different (n, g): the graded groups differ;
///  - equal (n, g), g even: stably equivalent (both Sq^2 verdicts are
///    forced trivial, so the splittings agree);
///  - equal (n, g), g odd: differing Sq^2 bits give distinct splittings,
///    hence stable inequivalence; equal bits give stable equivalence, and
///    a found cup-form congruence upgrades to homotopy equivalence.
///    An exhausted search or unavailable forms stays inconclusive at the
///    homotopy level, with the stable conclusion recorded as evidence.
inline RigidityVerdict compare_rigidity(const CharacteristicPair& pairA,
                                        const CharacteristicPair& pairB, Int search_bound = 2) {
    const CohomologyProfile a = cohomology_profile(pairA);
    const CohomologyProfile b = cohomology_profile(pairB);
    RigidityVerdict verdict;
    if (a != b) {
        verdict.tier = RigidityTier::GradedGroupsDiffer;
        verdict.evidence = "(n,g) = (" + std::to_string(a.betti2) + "," +
                           std::to_string(a.torsion_order) + ") vs (" + std::to_string(b.betti2) +
                           "," + std::to_string(b.torsion_order) + ")";
        return verdict;
    }
    if (a.torsion_order % 2 == 0) {
        verdict.tier = RigidityTier::StablyEquivalent;
        verdict.evidence = "shared (n,g) with g even forces trivial Sq^2 on both sides; "
                           "splittings coincide (ring isomorphism not verified)";
        return verdict;
    }
    const bool sq2A = sq2_nontrivial(pairA);
    const bool sq2B = sq2_nontrivial(pairB);
    if (sq2A != sq2B) {
        verdict.tier = RigidityTier::StablyInequivalent;
        verdict.evidence = std::string("Sq^2 verdicts differ (") + (sq2A ? "true" : "false") +
                           " vs " + (sq2B ? "true" : "false") + "); splittings are distinct";
        return verdict;
    }
    const CupFormResult formA = cup_form(pairA);
    const CupFormResult formB = cup_form(pairB);
    if (std::holds_alternative<CupForm>(formA) && std::holds_alternative<CupForm>(formB)) {
        auto witness =
            ring_iso_search(std::get<CupForm>(formA), std::get<CupForm>(formB), search_bound);
        if (witness) {
            verdict.tier = RigidityTier::HomotopyEquivalent;
            verdict.evidence = "cup forms congruent over Z (g odd rigidity applies)";
            verdict.witness = std::move(witness);
            return verdict;
        }
        verdict.tier = RigidityTier::HomotopyInconclusive;
        verdict.evidence = "stably equivalent (matching (n,g,Sq^2)); no unimodular congruence "
                           "within bound " +
                           std::to_string(search_bound);
        if (a.betti2 == 1)
            verdict.evidence += "; rank 1 is decided exactly, so the rings are not isomorphic";
        return verdict;
    }
    verdict.tier = RigidityTier::HomotopyInconclusive;
    verdict.evidence = "stably equivalent (matching (n,g,Sq^2)); cup forms unavailable for a "
                       "ring-level comparison";
    return verdict;
}

} // namespace toric
