#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace kneserlab {

// Vertex subsets of a ground set [n], n <= 64.  Bit i-1 encodes vertex i.
using VertexSet = std::uint64_t;

constexpr int kMaxGroundVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << (v - 1); }  // v is 1-based

constexpr VertexSet full_set(int n) {
    return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> (v - 1)) & 1; }

/// Canonical total order on subsets of [n]: by cardinality, ties broken
/// colexicographically (numeric value of the characteristic vector).
/// Refines the partial order by size, which is all downstream code relies on.
inline bool set_order_less(VertexSet a, VertexSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

struct SetOrder {
    bool operator()(VertexSet a, VertexSet b) const { return set_order_less(a, b); }
};

/// Next k-subset mask in colex order (Gosper's hack).  Returns 0 on wrap.
inline VertexSet next_k_subset(VertexSet v) {
    VertexSet c = v & (~v + 1);
    VertexSet r = v + c;
    if (r == 0) return 0;
    return (((r ^ v) >> 2) / c) | r;
}

/// All k-subsets of [n] in canonical order.
inline std::vector<VertexSet> all_k_subsets(int n, int k) {
    std::vector<VertexSet> out;
    if (k == 0 || k > n) return out;
    VertexSet v = full_set(k);
    VertexSet limit = full_set(n);
    while (v != 0 && v <= limit) {
        out.push_back(v);
        v = next_k_subset(v);
    }
    return out;
}

/// Elements of a mask as 1-based vertices, ascending.
inline std::vector<int> set_elements(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

inline VertexSet set_from_elements(const std::vector<int>& elems) {
    VertexSet s = 0;
    for (int v : elems) s |= vbit(v);
    return s;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

}  // namespace kneserlab
