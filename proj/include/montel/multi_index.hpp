#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "montel/errors.hpp"

namespace montel {

/// Exponent vector alpha in N^d.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {
        for (int v : entries) {
            if (v < 0) throw input_error("multi-index entries must be non-negative");
        }
    }

    int dim() const { return static_cast<int>(entries.size()); }
    int degree() const { return std::accumulate(entries.begin(), entries.end(), 0); }

    bool operator==(const MultiIndex&) const = default;
};

/// Step / sample point h in Z^d; entries may be negative.
struct LatticeVector {
    std::vector<long long> entries;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<long long> e) : entries(std::move(e)) {}

    int dim() const { return static_cast<int>(entries.size()); }
    bool is_zero() const {
        for (long long v : entries)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const LatticeVector&) const = default;
};

/// Graded lexicographic order: total degree first; ties are broken by the
/// entry at the LARGEST index where the two differ (the smaller entry there
/// makes the smaller monomial). Note this differs from the more common
/// smallest-index convention; either variant is a valid monomial order.
std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b);

struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return grlex_compare(a, b) == std::strong_ordering::less;
    }
};

/// All alpha in N^d with |alpha| <= maxDegree, sorted by grlex_compare.
std::vector<MultiIndex> enumerate_multi_indices(int dim, int maxDegree);

} // namespace montel
