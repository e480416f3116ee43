#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <vector>

#include "toric4/checked.hpp"

namespace toric {

/// A characteristic vector: a primitive integer vector attached to one
/// polygon edge. Primitive means gcd(|a|,|b|) = 1, so (0,0) is never
/// primitive while (0,±1) and (±1,0) are.
struct CharVector {
    Int a = 0;
    Int b = 0;

    bool is_primitive() const {
        return std::gcd(uabs(a), uabs(b)) == 1;
    }

    friend bool operator==(const CharVector&, const CharVector&) = default;
    friend auto operator<=>(const CharVector&, const CharVector&) = default;
};

/// The input datum: a cyclically ordered list of characteristic vectors,
/// one per edge of an m-gon (m >= 3). Edge indices are 1-based everywhere
/// in the public interface; vertex v_i is the corner shared by edges
/// E_{i-1} and E_i, with v_1 shared by E_m and E_1.
///
/// Values are immutable in practice: every operation returns a fresh pair.
struct CharacteristicPair {
    std::vector<CharVector> vectors;

    std::size_t edge_count() const { return vectors.size(); }

    /// 1-based edge access.
    const CharVector& edge(std::size_t i) const { return vectors.at(i - 1); }

    /// Edge indices adjacent at vertex v_i, as an (i-1, i) pair with the
    /// cyclic wrap (m, 1) for v_1.
    std::array<std::size_t, 2> vertex_edges(std::size_t i) const {
        const std::size_t m = edge_count();
        return {i == 1 ? m : i - 1, i};
    }

    friend bool operator==(const CharacteristicPair&, const CharacteristicPair&) = default;
};

enum class ValidationMode { Strict, Degenerate };

enum class ViolationKind { NonPrimitive, AdjacentDependent, TooFewEdges };

/// One failed admissibility condition. The index is the 1-based edge for
/// NonPrimitive, the 1-based vertex whose two edges carry dependent vectors
/// for AdjacentDependent, and the observed edge count for TooFewEdges.
struct Violation {
    ViolationKind kind;
    std::size_t index;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    ValidationMode mode = ValidationMode::Strict;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// A 2x2 integer matrix with determinant ±1, acting on characteristic
/// vectors as a lattice basis change.
struct Unimodular2 {
    // row-major entries
    Int e00 = 1, e01 = 0, e10 = 0, e11 = 1;

    static Unimodular2 identity() { return {}; }

    Int det() const {
        return checked_sub(checked_mul(e00, e11), checked_mul(e01, e10));
    }

    bool is_unimodular() const {
        const Int d = det();
        return d == 1 || d == -1;
    }

    CharVector apply(const CharVector& v) const {
        return {checked_add(checked_mul(e00, v.a), checked_mul(e01, v.b)),
                checked_add(checked_mul(e10, v.a), checked_mul(e11, v.b))};
    }

    /// Matrix product this * rhs.
    Unimodular2 compose(const Unimodular2& rhs) const {
        return {checked_add(checked_mul(e00, rhs.e00), checked_mul(e01, rhs.e10)),
                checked_add(checked_mul(e00, rhs.e01), checked_mul(e01, rhs.e11)),
                checked_add(checked_mul(e10, rhs.e00), checked_mul(e11, rhs.e10)),
                checked_add(checked_mul(e10, rhs.e01), checked_mul(e11, rhs.e11))};
    }

    /// Exact inverse; requires det = ±1.
    Unimodular2 inverse() const {
        const Int d = det();
        if (d != 1 && d != -1)
            throw std::invalid_argument("matrix is not unimodular");
        // adjugate divided by det; with det = ±1 this stays integral
        return {checked_mul(d, e11), checked_mul(d, checked_neg(e01)),
                checked_mul(d, checked_neg(e10)), checked_mul(d, e00)};
    }

    friend bool operator==(const Unimodular2&, const Unimodular2&) = default;
};

namespace detail {
inline Int raw_det2(const CharVector& u, const CharVector& v) {
    return checked_sub(checked_mul(u.a, v.b), checked_mul(u.b, v.a));
}
} // namespace detail

/// Checks admissibility. Degenerate mode demands only m >= 3 and
/// primitivity of every vector; Strict mode additionally demands that
/// every cyclically adjacent pair of vectors is linearly independent.
/// Violations carry their offending index; an empty list means admissible.
inline ValidationReport validate(const CharacteristicPair& pair, ValidationMode mode) {
    ValidationReport report{mode, {}};
    const std::size_t m = pair.edge_count();
    if (m < 3)
        report.violations.push_back({ViolationKind::TooFewEdges, m});
    for (std::size_t i = 1; i <= m; ++i)
        if (!pair.edge(i).is_primitive())
            report.violations.push_back({ViolationKind::NonPrimitive, i});
    if (mode == ValidationMode::Strict && m >= 3) {
        for (std::size_t v = 1; v <= m; ++v) {
            const auto [prev, cur] = pair.vertex_edges(v);
            if (detail::raw_det2(pair.edge(prev), pair.edge(cur)) == 0)
                report.violations.push_back({ViolationKind::AdjacentDependent, v});
        }
    }
    return report;
}

inline bool is_strict_valid(const CharacteristicPair& pair) {
    return validate(pair, ValidationMode::Strict).ok();
}

/// Dihedral re-indexing of the edges. With reflect = false, new edge i
/// carries old edge i+r (cyclically); reflect = true reverses the cyclic
/// order first. The multiset of vectors is unchanged.
inline CharacteristicPair relabel(const CharacteristicPair& pair, long rotation, bool reflect) {
    const std::size_t m = pair.edge_count();
    if (m == 0)
        return pair;
    CharacteristicPair out;
    out.vectors.reserve(m);
    std::vector<CharVector> base = pair.vectors;
    if (reflect)
        std::reverse(base.begin(), base.end());
    const long mm = static_cast<long>(m);
    long r = rotation % mm;
    if (r < 0)
        r += mm;
    for (std::size_t i = 0; i < m; ++i)
        out.vectors.push_back(base[(i + static_cast<std::size_t>(r)) % m]);
    return out;
}

/// Simultaneous basis change and per-edge sign flip:
/// vectors[i] -> signs[i] * (M * vectors[i]). Both leave the underlying
/// torus data unchanged, so every invariant must be stable under this.
inline CharacteristicPair transform(const CharacteristicPair& pair, const Unimodular2& M,
                                    const std::vector<int>& signs) {
    if (!M.is_unimodular())
        throw std::invalid_argument("basis change must have determinant +1 or -1");
    if (signs.size() != pair.edge_count())
        throw std::invalid_argument("sign vector length must equal the edge count");
    CharacteristicPair out;
    out.vectors.reserve(pair.edge_count());
    for (std::size_t i = 0; i < pair.edge_count(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw std::invalid_argument("signs must be +1 or -1");
        CharVector w = M.apply(pair.vectors[i]);
        if (signs[i] == -1)
            w = {checked_neg(w.a), checked_neg(w.b)};
        out.vectors.push_back(w);
    }
    return out;
}

} // namespace toric
