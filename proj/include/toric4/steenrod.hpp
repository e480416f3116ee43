#pragma once

#include <cstddef>
#include <vector>

#include "toric4/cohomology.hpp"

namespace toric {

/// Verdicts for the three possible mod-2 Steenrod actions on a
/// 4-dimensional toric orbifold, plus the data behind the degree-2 square:
/// the vertex used as v_m (2-local smooth, original 1-based index) and the
/// n criterion terms t_i = 1 - d_{i,m-1} * d_{i,m} / g computed after
/// rotating that vertex into the last position. Sq^2 acts non-trivially
/// exactly when some term is even.
struct SteenrodProfile {
    bool sq1_h2_nontrivial = false;
    bool sq1_h3_nontrivial = false; // constant: this action is always trivial
    bool sq2_nontrivial = false;
    std::size_t witness_vertex = 0;
    std::vector<Int> criterion_terms;
};

/// Sq^1 on H^2 is non-trivial iff the degree-3 torsion order is even.
/// No vertex normalization enters.
inline bool sq1_on_h2(const CharacteristicPair& pair) {
    require_strict(pair);
    return torsion_order(det_table(pair)) % 2 == 0;
}

/// Sq^1 on H^3 is trivial for every pair; kept so reports can enumerate
/// all three actions.
inline bool sq1_on_h3(const CharacteristicPair& pair) {
    require_strict(pair);
    return false;
}

namespace detail {

/// Criterion terms with the given vertex rotated into position m.
/// The vertex must be 2-local smooth; each product d_{i,m-1}*d_{i,m} is
/// exactly divisible by g because g divides every table entry.
inline std::vector<Int> criterion_terms_at(const CharacteristicPair& pair, std::size_t vertex) {
    const std::size_t m = pair.edge_count();
    const CharacteristicPair rotated =
        relabel(pair, rotation_sending_vertex_last(vertex, m), false);
    const DeterminantTable t = det_table(rotated);
    const Int g = torsion_order(t);
    std::vector<Int> terms;
    terms.reserve(m - 2);
    for (std::size_t i = 1; i + 2 <= m; ++i) {
        const Int product = checked_mul(t.at(i, m - 1), t.at(i, m));
        terms.push_back(checked_sub(1, exact_div(product, g)));
    }
    return terms;
}

inline bool some_term_even(const std::vector<Int>& terms) {
    for (Int t : terms)
        if (t % 2 == 0)
            return true;
    return false;
}

} // namespace detail

/// Sq^2 verdict evaluated at one chosen 2-local smooth vertex. All
/// admissible choices give the same verdict; sq2_vertex_choice_consistent
/// checks that exhaustively.
inline SteenrodProfile steenrod_profile_at(const CharacteristicPair& pair, std::size_t vertex) {
    require_strict(pair);
    const DeterminantTable table = det_table(pair);
    if (!p_local_smooth_vertices(table, 2).contains(vertex))
        throw std::invalid_argument("witness vertex is not 2-local smooth");
    SteenrodProfile profile;
    profile.sq1_h2_nontrivial = torsion_order(table) % 2 == 0;
    profile.sq1_h3_nontrivial = false;
    profile.witness_vertex = vertex;
    profile.criterion_terms = detail::criterion_terms_at(pair, vertex);
    profile.sq2_nontrivial = detail::some_term_even(profile.criterion_terms);
    return profile;
}

inline SteenrodProfile steenrod_profile(const CharacteristicPair& pair) {
    require_strict(pair);
    const VertexSet smooth2 = p_local_smooth_vertices(det_table(pair), 2);
    const std::size_t k = detail::least_rotation_vertex(smooth2, pair.edge_count());
    return steenrod_profile_at(pair, k);
}

inline bool sq2_nontrivial(const CharacteristicPair& pair) {
    return steenrod_profile(pair).sq2_nontrivial;
}

/// Recomputes the Sq^2 verdict at every 2-local smooth vertex and reports
/// whether all agree (they must).
inline bool sq2_vertex_choice_consistent(const CharacteristicPair& pair) {
    const VertexSet smooth2 = p_local_smooth_vertices(pair, 2);
    const bool expected = steenrod_profile(pair).sq2_nontrivial;
    for (std::size_t k : smooth2.indices)
        if (steenrod_profile_at(pair, k).sq2_nontrivial != expected)
            return false;
    return true;
}

} // namespace toric
