#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kneserlab/hypergraph.hpp"

namespace kneserlab {

/// Hypergraph whose vertex count may exceed the 64-bit ground limit; edges are
/// sorted tuples of 1-based vertex ids.  This is the representation used for
/// Kneser powers, their random subhypergraphs, and the coloring solver.
struct PowerHypergraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::optional<int> uniformity() const;
};

/// KG^r(H): vertex i corresponds to the i-th edge of H in canonical order;
/// edges are r-sets of pairwise disjoint base edges.
struct KneserPower {
    Hypergraph base;
    int r = 0;
    PowerHypergraph power;

    VertexSet base_edge_of(int power_vertex) const { return base.edge(power_vertex - 1); }
};

/// K_n^k: all k-subsets of [n].
Hypergraph complete_k_subsets(int n, int k);

/// ([n], stable k-subsets): sets whose elements are pairwise at circular
/// distance >= 2, i.e. 2 <= |i-j| <= n-2 for all pairs.
Hypergraph stable_subsets_hypergraph(int n, int k);

/// Materializes KG^r(H).  Refuses instances with more than `edge_cap` edges.
KneserPower kneser_power(const Hypergraph& h, int r, std::uint64_t edge_cap = 10'000'000);

struct KttWitness {
    int color = 0;
    std::vector<std::vector<int>> parts;  // r groups of t power-vertex ids
};

/// Searches for a monochromatic complete r-partite subhypergraph with t
/// vertices per part: r groups of t same-colored power vertices whose base
/// edges are disjoint across groups.  Exhaustive with pruning.
std::optional<KttWitness> find_monochromatic_ktt(const KneserPower& k, const Coloring& c, int t);

PowerHypergraph to_power(const Hypergraph& h);

}  // namespace kneserlab
