#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "toric4/charpair.hpp"

namespace toric {

/// det of the 2x2 matrix whose columns are u and v: u.a*v.b - u.b*v.a.
/// Bilinear and antisymmetric; overflow throws.
inline Int det2(const CharVector& u, const CharVector& v) {
    return detail::raw_det2(u, v);
}

/// All pairwise determinants d_ij = det2(lambda_i, lambda_j) for
/// 1 <= i < j <= m, stored upper-triangular in row-major order
/// (1,2), (1,3), ..., (1,m), (2,3), ... Consumers needing d_ji for
/// j > i negate.
struct DeterminantTable {
    std::size_t m = 0;
    std::vector<Int> entries;

    static std::size_t size_for(std::size_t m) { return m * (m - 1) / 2; }

    std::size_t index(std::size_t i, std::size_t j) const {
        // 1-based, i < j
        return (i - 1) * m - (i - 1) * i / 2 + (j - i - 1);
    }

    Int at(std::size_t i, std::size_t j) const { return entries.at(index(i, j)); }

    /// Signed lookup for any i != j; d(i,i) = 0.
    Int d(std::size_t i, std::size_t j) const {
        if (i == j)
            return 0;
        return i < j ? at(i, j) : checked_neg(at(j, i));
    }

    /// Determinant at vertex v_i, i.e. of the two edges meeting there:
    /// d_{i-1,i}, reading d_{0,1} as d_{1,m}.
    Int vertex_det(std::size_t i) const {
        return i == 1 ? at(1, m) : at(i - 1, i);
    }

    friend bool operator==(const DeterminantTable&, const DeterminantTable&) = default;
};

inline DeterminantTable det_table(const CharacteristicPair& pair) {
    const std::size_t m = pair.edge_count();
    DeterminantTable table{m, {}};
    table.entries.reserve(DeterminantTable::size_for(m));
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
            table.entries.push_back(det2(pair.edge(i), pair.edge(j)));
    return table;
}

/// gcd with the zero-neutral convention gcd(0, x) = |x|.
inline Int gcd_zero_neutral(Int a, Int b) {
    return static_cast<Int>(std::gcd(uabs(a), uabs(b)));
}

/// g = gcd of all table entries, ignoring zeros; this is the order of the
/// torsion in degree 3, with g = 1 meaning none. Strict pairs always have
/// a nonzero adjacent entry, so the all-zero error is unreachable there.
inline Int torsion_order(const DeterminantTable& table) {
    Int g = 0;
    for (Int e : table.entries)
        g = gcd_zero_neutral(g, e);
    if (g == 0)
        throw std::invalid_argument("AllDependent: every pairwise determinant is zero");
    return g;
}

/// Largest r with p^r | a. Undefined (and an error) at a = 0.
inline Int p_valuation(Int a, Int p) {
    if (a == 0)
        throw std::domain_error("p-adic valuation of zero is undefined");
    std::uint64_t u = uabs(a);
    const std::uint64_t q = uabs(p);
    Int r = 0;
    while (u % q == 0) {
        u /= q;
        ++r;
    }
    return r;
}

/// Trial-division primality check; inputs here are tiny.
inline bool is_prime(Int p) {
    if (p < 2)
        return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Exact determinant of a square integer matrix by fraction-free
/// (Bareiss) elimination with row pivoting.
inline Int exact_det(std::vector<std::vector<Int>> a);

/// Exact quotient a / b; throws if b does not divide a.
inline Int exact_div(Int a, Int b) {
    if (b == 0)
        throw std::logic_error("inexact integer division");
    if (b == -1)
        return checked_neg(a); // INT64_MIN / -1 would overflow
    if (a % b != 0)
        throw std::logic_error("inexact integer division");
    return a / b;
}

inline Int exact_det(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(checked_sub(checked_mul(a[i][j], a[k][k]),
                                                checked_mul(a[i][k], a[k][j])),
                                    prev);
        prev = a[k][k];
    }
    return checked_mul(static_cast<Int>(sign), a[n - 1][n - 1]);
}

} // namespace toric
