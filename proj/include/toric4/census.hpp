#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <thread>
#include <vector>

#include "toric4/applications.hpp"

namespace toric {

/// Canonical form of a determinant table: the lexicographically least
/// flattened upper triangle over the full symmetry action on tables, i.e.
/// the 2m dihedral relabelings (which permute indices and flip the sign of
/// every entry whose index order reverses), the per-edge sign flips
/// (entry (i,j) picks up s_i * s_j), and the global sign flip coming from
/// orientation-reversing basis changes. Pairs related by relabel or
/// transform therefore share a key, and every implemented invariant
/// factors through it.
struct CanonicalKey {
    std::size_t m = 0;
    std::vector<Int> table;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline CanonicalKey canonical_key(const DeterminantTable& table) {
    const std::size_t m = table.m;
    const std::size_t len = DeterminantTable::size_for(m);

    // 0-based permutations: rotations and reflection-then-rotation
    std::vector<std::vector<std::size_t>> perms;
    perms.reserve(2 * m);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<std::size_t> rot(m), refl(m);
        for (std::size_t i = 0; i < m; ++i) {
            rot[i] = (i + r) % m;
            refl[i] = m - 1 - (i + r) % m;
        }
        perms.push_back(std::move(rot));
        perms.push_back(std::move(refl));
    }

    std::vector<Int> best;
    std::vector<Int> base(len), candidate(len);
    for (const auto& p : perms) {
        std::size_t e = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                base[e++] = table.d(p[i] + 1, p[j] + 1);
        const std::size_t sign_patterns = std::size_t{1} << (m - 1); // s and -s act alike
        for (std::size_t mask = 0; mask < sign_patterns; ++mask) {
            for (int eps : {1, -1}) {
                std::size_t k = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    const int si = i == 0 ? 1 : ((mask >> (i - 1)) & 1 ? -1 : 1);
                    for (std::size_t j = i + 1; j < m; ++j) {
                        const int sj = j == 0 ? 1 : ((mask >> (j - 1)) & 1 ? -1 : 1);
                        const int factor = eps * si * sj;
                        candidate[k] = factor == 1 ? base[k] : checked_neg(base[k]);
                        ++k;
                    }
                }
                if (best.empty() || candidate < best)
                    best = candidate;
            }
        }
    }
    return {m, std::move(best)};
}

inline CanonicalKey canonical_key(const CharacteristicPair& pair) {
    require_strict(pair);
    return canonical_key(det_table(pair));
}

/// One census entry: a canonical key, the lexicographically least
/// enumerated pair realizing it, and everything the engine computes from
/// that representative.
struct CensusRecord {
    CanonicalKey key;
    CharacteristicPair representative;
    CohomologyProfile profile;
    SteenrodProfile steenrod;
    SplittingDescriptor splitting;
    SpinReport spin;
};

using RecordFilter = std::function<bool(const CensusRecord&)>;

/// All primitive vectors with both entries in [-bound, bound], in
/// lexicographic order.
inline std::vector<CharVector> primitive_vectors(Int bound) {
    std::vector<CharVector> out;
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b)
            if (CharVector{a, b}.is_primitive())
                out.push_back({a, b});
    return out;
}

namespace detail {

inline CharVector negated(const CharVector& v) {
    return {checked_neg(v.a), checked_neg(v.b)};
}

using PartitionMap = std::map<CanonicalKey, CharacteristicPair>;

/// Depth-first enumeration of all strict-valid pairs whose first vector is
/// fixed, pruning on vanishing adjacent determinants. Visits pairs in
/// lexicographic order, so the first pair stored per key is the least one.
inline void enumerate_partition(const CharVector& first, std::size_t m,
                                const std::vector<CharVector>& alphabet, PartitionMap& out) {
    std::vector<CharVector> stack{first};
    stack.reserve(m);
    auto dfs = [&](auto&& self) -> void {
        if (stack.size() == m) {
            if (det2(stack.back(), first) == 0)
                return;
            CharacteristicPair pair{stack};
            out.emplace(canonical_key(det_table(pair)), std::move(pair));
            return;
        }
        for (const CharVector& v : alphabet) {
            if (det2(stack.back(), v) == 0)
                continue;
            stack.push_back(v);
            self(self);
            stack.pop_back();
        }
    };
    dfs(dfs);
}

} // namespace detail

/// Enumerates every strict-valid pair with m edges and entries bounded by
/// B, one record per canonical key, sorted by key. The first vector is
/// normalized to the lexicographically least element of its +- class
/// (a sign flip reaches the other half, and keys absorb sign flips).
/// Partitions by first vector run on `workers` threads; the result is
/// byte-for-byte identical for any worker count. The filter, if any, is
/// applied after analysis.
inline std::vector<CensusRecord> census_run(std::size_t m, Int bound,
                                            const RecordFilter& filter = {},
                                            unsigned workers = 1) {
    if (m < 3)
        throw std::invalid_argument("census needs at least 3 edges");
    if (bound < 1)
        throw std::invalid_argument("census bound must be positive");
    const std::vector<CharVector> alphabet = primitive_vectors(bound);
    std::vector<CharVector> firsts;
    for (const CharVector& v : alphabet)
        if (v <= detail::negated(v))
            firsts.push_back(v);

    std::vector<detail::PartitionMap> partials(firsts.size());
    if (workers == 0)
        workers = 1;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < firsts.size(); i += workers)
                    detail::enumerate_partition(firsts[i], m, alphabet, partials[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (const auto& err : errors)
        if (err)
            std::rethrow_exception(err);

    // partitions are in lexicographic first-vector order, so keeping the
    // first representative per key keeps the globally least one
    detail::PartitionMap merged;
    for (auto& partial : partials)
        for (auto& [key, pair] : partial)
            merged.try_emplace(key, std::move(pair));

    std::vector<CensusRecord> records;
    records.reserve(merged.size());
    for (auto& [key, pair] : merged) {
        CensusRecord record{key, pair, cohomology_profile(pair), steenrod_profile(pair),
                            stable_splitting(pair), spin_report(pair)};
        if (!filter || filter(record))
            records.push_back(std::move(record));
    }
    return records;
}

/// Filters accepted by the census command line. Unknown names throw.
inline RecordFilter named_filter(const std::string& name) {
    if (name.empty())
        return {};
    if (name == "g-even")
        return [](const CensusRecord& r) { return r.profile.torsion_order % 2 == 0; };
    if (name == "g-odd")
        return [](const CensusRecord& r) { return r.profile.torsion_order % 2 != 0; };
    if (name == "sq2")
        return [](const CensusRecord& r) { return r.steenrod.sq2_nontrivial; };
    if (name == "sq2-trivial")
        return [](const CensusRecord& r) { return !r.steenrod.sq2_nontrivial; };
    if (name == "quasi-toric")
        return [](const CensusRecord& r) { return r.spin.is_quasi_toric; };
    if (name == "spin")
        return [](const CensusRecord& r) {
            return r.spin.is_quasi_toric && r.spin.w2_vanishes.value_or(false);
        };
    throw std::invalid_argument("unknown census filter: " + name);
}

} // namespace toric
