#pragma once

#include <random>

#include "toric4/toric4.hpp"

// Shared fixtures. The three triangles and the Hirzebruch squares are the
// standard small examples; every frozen value asserted against them was
// recomputed by hand from the determinant tables.
namespace fixtures {

inline toric::CharacteristicPair cp2() {
    return {{{1, 0}, {0, 1}, {-1, -1}}};
}

// d12 = -2, d13 = -4, d23 = -2, so g = 2
inline toric::CharacteristicPair torsion_triangle() {
    return {{{1, 2}, {1, 0}, {1, -2}}};
}

// the k-th Hirzebruch surface as a square pair
inline toric::CharacteristicPair hirzebruch(toric::Int k) {
    return {{{1, 0}, {0, 1}, {-1, k}, {0, -1}}};
}

// adjacent determinants 2, -5, 3: g = 1 but no vertex determinant is +-1
inline toric::CharacteristicPair no_smooth_vertex_triangle() {
    return {{{1, 0}, {1, 2}, {4, 3}}};
}

// 5-gon with n = 3 and non-trivial Sq^2
inline toric::CharacteristicPair pentagon_sq2() {
    return {{{1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}}};
}

/// Random strict-valid pair with m edges and entries in [-3, 3].
inline toric::CharacteristicPair random_pair(std::mt19937_64& rng, std::size_t m) {
    const std::vector<toric::CharVector> alphabet = toric::primitive_vectors(3);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    while (true) {
        toric::CharacteristicPair pair;
        for (std::size_t i = 0; i < m; ++i)
            pair.vectors.push_back(alphabet[pick(rng)]);
        if (toric::is_strict_valid(pair))
            return pair;
    }
}

inline toric::CharacteristicPair random_pair(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> edges(3, 5);
    return random_pair(rng, edges(rng));
}

} // namespace fixtures
