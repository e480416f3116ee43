#pragma once

#include <array>
#include <cstddef>

#include "toric4/steenrod.hpp"

namespace toric {

/// Combinatorial datum of the degenerate triangle produced by contracting
/// every edge except E_i, E_{m-1}, E_m: the three surviving vectors in
/// order (lambda_i, lambda_{m-1}, lambda_m) and their pairwise
/// determinants. d23 is an adjacent determinant of the source pair and is
/// never zero; d12 and d13 cannot both vanish because the last two
/// vectors are independent.
struct DegenerateTriple {
    std::array<CharVector, 3> vectors{};
    std::size_t source_edge = 0;
    Int d12 = 0;
    Int d13 = 0;
    Int d23 = 0;
};

enum class DegenerateKind { ToricOrbifoldTriangle, WedgeSuspLensAndSphere };

/// Homotopy classification of a degenerate triangle datum: either it is a
/// genuine orbifold triangle, or (when the first vector is parallel to one
/// of the others) a wedge of a suspended lens space and a 2-sphere, the
/// lens space quotient being cyclic of order |d23|.
struct DegenerateClassification {
    DegenerateKind kind = DegenerateKind::ToricOrbifoldTriangle;
    Int lens_order = 1; // |d23|, meaningful for the wedge case
    Int g = 1;          // order of H^3 of the degenerate space
};

/// Order of H^3 of the degenerate triangle: gcd of the three determinants
/// when all of d12, d13 are nonzero, |d23| in the wedge case.
inline Int degenerate_g(Int d12, Int d13, Int d23) {
    if (d23 == 0)
        throw std::invalid_argument("degenerate triple requires d23 != 0");
    if (d12 != 0 && d13 != 0)
        return gcd_zero_neutral(gcd_zero_neutral(d12, d13), d23);
    return abs_checked(d23);
}

inline Int degenerate_g(const DegenerateTriple& triple) {
    return degenerate_g(triple.d12, triple.d13, triple.d23);
}

inline DegenerateClassification classify_degenerate_triangle(Int d12, Int d13, Int d23) {
    DegenerateClassification out;
    out.g = degenerate_g(d12, d13, d23);
    if (d12 == 0 || d13 == 0) {
        out.kind = DegenerateKind::WedgeSuspLensAndSphere;
        out.lens_order = abs_checked(d23);
    } else {
        out.kind = DegenerateKind::ToricOrbifoldTriangle;
        out.lens_order = abs_checked(d23);
    }
    return out;
}

inline DegenerateClassification classify_degenerate_triangle(const DegenerateTriple& triple) {
    return classify_degenerate_triangle(triple.d12, triple.d13, triple.d23);
}

/// Sq^2 acts non-trivially on the degenerate triangle iff
/// d12 * d13 * d23 / g^2 is odd. The wedge case has zero product, hence a
/// trivial action.
inline bool degenerate_sq2(Int d12, Int d13, Int d23) {
    const Int g = degenerate_g(d12, d13, d23);
    const Int product = checked_mul(checked_mul(d12, d13), d23);
    const Int quotient = exact_div(product, checked_mul(g, g));
    return quotient % 2 != 0;
}

inline bool degenerate_sq2(const DegenerateTriple& triple) {
    return degenerate_sq2(triple.d12, triple.d13, triple.d23);
}

/// Edge contraction in the labeling of the source pair, which must already
/// be rotated so that v_m is 2-local smooth (this operation never relabels
/// on its own). Valid source edges are 1..n = m-2.
inline DegenerateTriple edge_contract(const CharacteristicPair& pair, std::size_t i) {
    require_strict(pair);
    const std::size_t m = pair.edge_count();
    if (i < 1 || i > m - 2)
        throw std::invalid_argument("contractible edge index must lie in 1..m-2");
    const DeterminantTable table = det_table(pair);
    if (!p_local_smooth_vertices(table, 2).contains(m))
        throw std::invalid_argument("edge contraction requires v_m to be 2-local smooth");
    DegenerateTriple triple;
    triple.vectors = {pair.edge(i), pair.edge(m - 1), pair.edge(m)};
    triple.source_edge = i;
    triple.d12 = table.at(i, m - 1);
    triple.d13 = table.at(i, m);
    triple.d23 = table.at(m - 1, m);
    return triple;
}

/// The n contractions of a normalized pair witness the degree-2 square:
/// the source has non-trivial Sq^2 iff some contraction does.
inline bool any_contraction_sq2(const CharacteristicPair& pair) {
    const std::size_t n = pair.edge_count() - 2;
    for (std::size_t i = 1; i <= n; ++i)
        if (degenerate_sq2(edge_contract(pair, i)))
            return true;
    return false;
}

} // namespace toric
