#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "toric4/arith.hpp"

namespace toric {

/// Cohomology of the orbifold attached to an m-gon pair:
/// H^0 = H^4 = Z and H^1 = 0 always, H^2 is free of rank n = m-2, and
/// H^3 is cyclic of order g (Z/1 = 0). Only the two varying values are
/// stored.
struct CohomologyProfile {
    std::size_t betti2 = 0;
    Int torsion_order = 1;

    friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

inline void require_strict(const CharacteristicPair& pair) {
    if (!is_strict_valid(pair))
        throw std::invalid_argument("pair is not strict-valid");
}

inline CohomologyProfile cohomology_profile(const CharacteristicPair& pair) {
    require_strict(pair);
    return {pair.edge_count() - 2, torsion_order(det_table(pair))};
}

/// Vertices whose adjacent determinant has the same p-adic valuation as g.
/// Nonempty for every prime p on strict-valid input; emptiness would
/// contradict the structure theory, so it raises a logic error.
struct VertexSet {
    Int prime = 2;
    std::vector<std::size_t> indices; // sorted, 1-based

    bool contains(std::size_t i) const {
        return std::find(indices.begin(), indices.end(), i) != indices.end();
    }
};

inline VertexSet p_local_smooth_vertices(const DeterminantTable& table, Int p) {
    const Int g = torsion_order(table);
    const Int vg = p_valuation(g, p);
    VertexSet out{p, {}};
    for (std::size_t i = 1; i <= table.m; ++i)
        if (p_valuation(table.vertex_det(i), p) == vg)
            out.indices.push_back(i);
    if (out.indices.empty())
        throw std::logic_error("no p-local smooth vertex found; input table is inconsistent");
    return out;
}

inline VertexSet p_local_smooth_vertices(const CharacteristicPair& pair, Int p) {
    require_strict(pair);
    return p_local_smooth_vertices(det_table(pair), p);
}

namespace detail {

/// Rotation that relabels so vertex v_k becomes v_m. With relabel()'s
/// convention new v_i = old v_{i+r}, this is r = k mod m.
inline long rotation_sending_vertex_last(std::size_t k, std::size_t m) {
    return static_cast<long>(k % m);
}

/// Picks the admissible vertex requiring the least rotation, i.e. scans
/// v_m, v_1, v_2, ... and returns the first member of the set. Determinism
/// plus agreement with the m-gon labeling convention, where v_m is the
/// preferred corner.
inline std::size_t least_rotation_vertex(const VertexSet& set, std::size_t m) {
    for (long r = 0; r < static_cast<long>(m); ++r) {
        const std::size_t k = r == 0 ? m : static_cast<std::size_t>(r);
        if (set.contains(k))
            return k;
    }
    throw std::logic_error("vertex set is empty");
}

} // namespace detail

/// The cup-product matrix on the rank-n degree-2 basis, expressed against
/// the degree-4 generator fixed by the cellular basis. Defined only when
/// g = 1 and some vertex is smooth (adjacent determinant ±1); the labels
/// are rotated so that vertex sits at position m before the bilinear
/// formula entries[i][j] = -d_{i,m} * d_{j,m-1} (i <= j) applies, and the
/// lower triangle is filled by symmetry.
struct CupForm {
    std::size_t n = 0;
    std::vector<std::vector<Int>> entries;
    std::size_t basis_vertex = 0; // original 1-based index used as v_m

    Int entry(std::size_t i, std::size_t j) const { return entries.at(i - 1).at(j - 1); }

    Int det() const { return exact_det(entries); }

    friend bool operator==(const CupForm&, const CupForm&) = default;
};

enum class CupUnavailable { TorsionPresent, NoSmoothVertex };

using CupFormResult = std::variant<CupForm, CupUnavailable>;

inline CupFormResult cup_form(const CharacteristicPair& pair) {
    require_strict(pair);
    const std::size_t m = pair.edge_count();
    const DeterminantTable table = det_table(pair);
    if (torsion_order(table) != 1)
        return CupUnavailable::TorsionPresent;

    VertexSet smooth{0, {}};
    for (std::size_t i = 1; i <= m; ++i)
        if (abs_checked(table.vertex_det(i)) == 1)
            smooth.indices.push_back(i);
    if (smooth.indices.empty())
        return CupUnavailable::NoSmoothVertex;

    const std::size_t k = detail::least_rotation_vertex(smooth, m);
    const CharacteristicPair rotated =
        relabel(pair, detail::rotation_sending_vertex_last(k, m), false);
    const DeterminantTable t = det_table(rotated);

    const std::size_t n = m - 2;
    CupForm form{n, std::vector<std::vector<Int>>(n, std::vector<Int>(n, 0)), k};
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            const Int value = checked_neg(checked_mul(t.at(i, m), t.at(j, m - 1)));
            form.entries[i - 1][j - 1] = value;
            form.entries[j - 1][i - 1] = value;
        }
    return form;
}

/// Self-cup coefficient of the degree-2 generator for a triangle:
/// -d_12 * d_23 * d_13 / g^2, always an exact integer.
inline Int triangle_self_cup(const CharacteristicPair& pair) {
    require_strict(pair);
    if (pair.edge_count() != 3)
        throw std::invalid_argument("NotATriangle: self-cup coefficient needs a 3-gon");
    const DeterminantTable t = det_table(pair);
    const Int g = torsion_order(t);
    const Int product = checked_mul(checked_mul(t.at(1, 2), t.at(2, 3)), t.at(1, 3));
    return checked_neg(exact_div(product, checked_mul(g, g)));
}

} // namespace toric
