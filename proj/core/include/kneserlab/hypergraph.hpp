#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kneserlab/bits.hpp"
#include "kneserlab/errors.hpp"

namespace kneserlab {

/// A finite hypergraph on vertex set [n], edges stored as bitsets kept in
/// canonical order (size, then colex).  Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<VertexSet> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    VertexSet edge(int i) const { return edges_[i]; }
    VertexSet vertex_set() const { return full_set(n_); }

    /// r if every edge has cardinality exactly r (and there is at least one
    /// edge), otherwise nullopt.
    std::optional<int> uniformity() const;

    /// Number of edges contained in the vertex subset `s`.
    int induced_edge_count(VertexSet s) const;

    /// Indices (into edges()) of edges contained in `s`, in canonical order.
    std::vector<int> induced_edges(VertexSet s) const;

    /// Edge indices containing vertex v.
    const std::vector<int>& edges_containing(int v) const { return incident_[v - 1]; }

    bool has_edge(VertexSet e) const;

    /// FNV-1a hash over n and the canonical edge list.
    std::uint64_t canonical_hash() const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
    std::vector<std::vector<int>> incident_;
};

/// A bijection sigma: [n] -> [n]; perm[j] is the 1-based vertex at position j+1.
struct VertexOrdering {
    std::vector<int> perm;

    static VertexOrdering identity(int n);
    int size() const { return static_cast<int>(perm.size()); }
    int operator()(int position) const { return perm[position - 1]; }
    VertexOrdering reversed() const;
    bool is_valid() const;
};

/// A map from a ground set [N] to colors 1..num_colors.
struct Coloring {
    int num_colors = 0;
    std::vector<int> values;  // values[i] is the color of element i+1

    int size() const { return static_cast<int>(values.size()); }
    int color_of(int element) const { return values[element - 1]; }
    bool is_valid() const;
};

struct InducedSubhypergraph {
    Hypergraph sub;
    /// original_vertex[i] = 1-based vertex of the parent identified with
    /// sub-vertex i+1 (ascending original order).
    std::vector<int> original_vertex;
};

/// H[S]: vertices of S relabeled 1..|S|, edges of H contained in S.
InducedSubhypergraph induced_sub(const Hypergraph& h, VertexSet s);

/// H[V_1,...,V_r]: edges contained in the union that meet every part exactly
/// once.  Vertex set is kept as [n]; parts must be pairwise disjoint.
Hypergraph cross_partite_sub(const Hypergraph& h, std::span<const VertexSet> parts);

/// True iff no edge of h is monochromatic under c.  Edges of cardinality 1
/// defeat every coloring.
bool is_proper(const Hypergraph& h, const Coloring& c);

/// Exact decision by backtracking with canonical-color symmetry breaking.
bool is_r_colorable(const Hypergraph& h, int r);

/// cd_r(H): minimum number of vertices to delete so the rest is r-colorable.
int colorability_defect(const Hypergraph& h, int r);

/// Same decision as is_r_colorable but restricted to the induced subhypergraph
/// on `s` without materializing it.
bool is_r_colorable_on(const Hypergraph& h, VertexSet s, int r);

}  // namespace kneserlab
