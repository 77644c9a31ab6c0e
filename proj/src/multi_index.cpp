#include "montel/multi_index.hpp"

#include <algorithm>

namespace montel {

std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) throw input_error("grlex_compare: dimension mismatch");
    if (int da = a.degree(), db = b.degree(); da != db) return da <=> db;
    for (int k = a.dim() - 1; k >= 0; --k) {
        if (a.entries[k] != b.entries[k]) return a.entries[k] <=> b.entries[k];
    }
    return std::strong_ordering::equal;
}

namespace {

void enumerate_rec(int dim, int budget, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == dim) {
        out.push_back(MultiIndex(cur));
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        cur.push_back(v);
        enumerate_rec(dim, budget - v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> enumerate_multi_indices(int dim, int maxDegree) {
    if (dim < 1) throw input_error("dimension must be positive");
    if (maxDegree < 0) throw input_error("maxDegree must be non-negative");
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    enumerate_rec(dim, maxDegree, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

} // namespace montel
