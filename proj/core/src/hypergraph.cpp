#include "kneserlab/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace kneserlab {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxGroundVertices)
        throw std::invalid_argument("hypergraph vertex count out of range");
    VertexSet ground = full_set(n_);
    for (VertexSet e : edges_) {
        if (e == 0) throw std::invalid_argument("empty edge");
        if ((e & ~ground) != 0) throw std::invalid_argument("edge uses vertex outside [n]");
    }
    std::sort(edges_.begin(), edges_.end(), SetOrder{});
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("duplicate edge");
    incident_.resize(n_);
    for (int i = 0; i < edge_count(); ++i)
        for (int v : set_elements(edges_[i])) incident_[v - 1].push_back(i);
}

std::optional<int> Hypergraph::uniformity() const {
    if (edges_.empty()) return std::nullopt;
    int r = set_size(edges_.front());
    for (VertexSet e : edges_)
        if (set_size(e) != r) return std::nullopt;
    return r;
}

int Hypergraph::induced_edge_count(VertexSet s) const {
    int c = 0;
    for (VertexSet e : edges_)
        if ((e & ~s) == 0) ++c;
    return c;
}

std::vector<int> Hypergraph::induced_edges(VertexSet s) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
        if ((edges_[i] & ~s) == 0) out.push_back(i);
    return out;
}

bool Hypergraph::has_edge(VertexSet e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e, SetOrder{});
}

std::uint64_t Hypergraph::canonical_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (VertexSet e : edges_) mix(e);
    return h;
}

VertexOrdering VertexOrdering::identity(int n) {
    VertexOrdering s;
    s.perm.resize(n);
    std::iota(s.perm.begin(), s.perm.end(), 1);
    return s;
}

VertexOrdering VertexOrdering::reversed() const {
    VertexOrdering s = *this;
    std::reverse(s.perm.begin(), s.perm.end());
    return s;
}

bool VertexOrdering::is_valid() const {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 1 || v > static_cast<int>(perm.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

bool Coloring::is_valid() const {
    for (int c : values)
        if (c < 1 || c > num_colors) return false;
    return true;
}

InducedSubhypergraph induced_sub(const Hypergraph& h, VertexSet s) {
    std::vector<int> verts = set_elements(s);
    std::vector<int> new_id(kMaxGroundVertices + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i) + 1;

    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        if ((e & ~s) != 0) continue;
        VertexSet mapped = 0;
        for (int v : set_elements(e)) mapped |= vbit(new_id[v]);
        edges.push_back(mapped);
    }
    return {Hypergraph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts)};
}

Hypergraph cross_partite_sub(const Hypergraph& h, std::span<const VertexSet> parts) {
    VertexSet seen = 0;
    for (VertexSet p : parts) {
        if ((p & seen) != 0) throw std::invalid_argument("cross_partite_sub: overlapping parts");
        seen |= p;
    }
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        if ((e & ~seen) != 0) continue;
        bool ok = true;
        for (VertexSet p : parts)
            if (set_size(e & p) != 1) { ok = false; break; }
        if (ok) edges.push_back(e);
    }
    return Hypergraph(h.vertex_count(), std::move(edges));
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
    if (c.size() != h.vertex_count()) throw std::invalid_argument("coloring size mismatch");
    for (VertexSet e : h.edges()) {
        std::vector<int> vs = set_elements(e);
        int first = c.color_of(vs[0]);
        bool mono = true;
        for (int v : vs)
            if (c.color_of(v) != first) { mono = false; break; }
        if (mono) return false;
    }
    return true;
}

namespace {

// Backtracking r-colorability restricted to the vertex subset `s`.  Vertices
// are taken in descending incident-edge count; a vertex may only open one new
// color beyond those already in use.
struct RColorSearch {
    const Hypergraph& h;
    VertexSet s;
    int r;
    std::vector<int> order;   // 1-based vertices inside s
    std::vector<int> color;   // per 1-based vertex, 0 = unassigned

    bool run() {
        for (VertexSet e : h.edges())
            if ((e & ~s) == 0 && set_size(e) == 1) return false;  // singleton edge
        color.assign(h.vertex_count() + 1, 0);
        return extend(0, 0);
    }

    bool extend(std::size_t idx, int used) {
        if (idx == order.size()) return true;
        int v = order[idx];
        int limit = std::min(r, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (completes_mono_edge(v, c)) continue;
            color[v] = c;
            if (extend(idx + 1, std::max(used, c))) return true;
            color[v] = 0;
        }
        return false;
    }

    bool completes_mono_edge(int v, int c) const {
        for (int ei : h.edges_containing(v)) {
            VertexSet e = h.edge(ei);
            if ((e & ~s) != 0) continue;
            bool mono = true;
            for (int u : set_elements(e)) {
                if (u == v) continue;
                if (color[u] != c) { mono = false; break; }
            }
            if (mono) return true;  // every other vertex of e already has color c
        }
        return false;
    }
};

}  // namespace

bool is_r_colorable_on(const Hypergraph& h, VertexSet s, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    RColorSearch search{h, s, r, {}, {}};
    std::vector<int> verts = set_elements(s);
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
        return h.edges_containing(a).size() > h.edges_containing(b).size();
    });
    search.order = std::move(verts);
    return search.run();
}

bool is_r_colorable(const Hypergraph& h, int r) {
    return is_r_colorable_on(h, h.vertex_set(), r);
}

int colorability_defect(const Hypergraph& h, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    int n = h.vertex_count();
    for (int w = 0; w <= n; ++w) {
        if (w == 0) {
            if (is_r_colorable_on(h, h.vertex_set(), r)) return 0;
            continue;
        }
        for (VertexSet del : all_k_subsets(n, w))
            if (is_r_colorable_on(h, h.vertex_set() & ~del, r)) return w;
    }
    return n;  // unreachable: deleting everything always leaves an r-colorable hypergraph
}

}  // namespace kneserlab
