#include "kneserlab/kneser.hpp"

#include <algorithm>
#include <cstdlib>

namespace kneserlab {

std::optional<int> PowerHypergraph::uniformity() const {
    if (edges.empty()) return std::nullopt;
    std::size_t r = edges.front().size();
    for (const auto& e : edges)
        if (e.size() != r) return std::nullopt;
    return static_cast<int>(r);
}

Hypergraph complete_k_subsets(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("complete_k_subsets requires 1 <= k <= n");
    return Hypergraph(n, all_k_subsets(n, k));
}

Hypergraph stable_subsets_hypergraph(int n, int k) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("stable subsets require n >= 2k >= 2");
    std::vector<VertexSet> edges;
    for (VertexSet s : all_k_subsets(n, k)) {
        std::vector<int> vs = set_elements(s);
        bool stable = true;
        for (std::size_t i = 0; i < vs.size() && stable; ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                int d = std::abs(vs[i] - vs[j]);
                if (d < 2 || d > n - 2) { stable = false; break; }
            }
        if (stable) edges.push_back(s);
    }
    return Hypergraph(n, std::move(edges));
}

namespace {

// Ordered backtracking over strictly increasing base-edge indices with a
// running union mask; emits edges in canonical (lexicographic on sorted
// index tuples) order.
void extend_power_edges(const Hypergraph& h, int r, int first, VertexSet used,
                        std::vector<int>& cur, std::vector<std::vector<int>>& out,
                        std::uint64_t edge_cap) {
    if (static_cast<int>(cur.size()) == r) {
        if (out.size() >= edge_cap) throw CapExceeded("kneser power edge cap exceeded");
        out.push_back(cur);
        return;
    }
    for (int i = first; i < h.edge_count(); ++i) {
        VertexSet e = h.edge(i);
        if ((e & used) != 0) continue;
        cur.push_back(i + 1);
        extend_power_edges(h, r, i + 1, used | e, cur, out, edge_cap);
        cur.pop_back();
    }
}

}  // namespace

KneserPower kneser_power(const Hypergraph& h, int r, std::uint64_t edge_cap) {
    if (r < 2) throw std::invalid_argument("kneser_power requires r >= 2");
    KneserPower k;
    k.base = h;
    k.r = r;
    k.power.num_vertices = h.edge_count();
    std::vector<int> cur;
    extend_power_edges(h, r, 0, 0, cur, k.power.edges, edge_cap);
    return k;
}

PowerHypergraph to_power(const Hypergraph& h) {
    PowerHypergraph p;
    p.num_vertices = h.vertex_count();
    p.edges.reserve(h.edge_count());
    for (VertexSet e : h.edges()) p.edges.push_back(set_elements(e));
    return p;
}

namespace {

struct KttSearch {
    const KneserPower& k;
    int t = 0;
    int r = 0;
    std::vector<int> cls;                  // power vertices of the current color
    std::vector<std::vector<int>> groups;  // chosen groups so far

    // Candidates for group j must have base edges disjoint from every base
    // edge already chosen.  Within a group there is no disjointness demand.
    bool pick_group(std::size_t group_idx, const std::vector<int>& cand, int min_leader) {
        if (group_idx == static_cast<std::size_t>(r)) return true;
        if (static_cast<int>(cand.size()) < t * (r - static_cast<int>(group_idx))) return false;
        std::vector<int> members;
        return pick_member(group_idx, cand, min_leader, members, 0);
    }

    bool pick_member(std::size_t group_idx, const std::vector<int>& cand, int min_leader,
                     std::vector<int>& members, std::size_t from) {
        if (static_cast<int>(members.size()) == t) {
            VertexSet grp_union = 0;
            for (int v : members) grp_union |= k.base_edge_of(v);
            std::vector<int> next_cand;
            for (int v : cand)
                if ((k.base_edge_of(v) & grp_union) == 0) next_cand.push_back(v);
            groups.push_back(members);
            // group leaders increase, so unordered part collections are seen once
            if (pick_group(group_idx + 1, next_cand, members.front() + 1)) return true;
            groups.pop_back();
            return false;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
            int v = cand[i];
            if (members.empty() && v < min_leader) continue;
            if (static_cast<int>(cand.size() - i) < t - static_cast<int>(members.size())) break;
            members.push_back(v);
            if (pick_member(group_idx, cand, min_leader, members, i + 1)) return true;
            members.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<KttWitness> find_monochromatic_ktt(const KneserPower& k, const Coloring& c, int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (c.size() != k.power.num_vertices) throw std::invalid_argument("coloring size mismatch");
    for (int color = 1; color <= c.num_colors; ++color) {
        std::vector<int> cls;
        for (int v = 1; v <= k.power.num_vertices; ++v)
            if (c.color_of(v) == color) cls.push_back(v);
        if (static_cast<int>(cls.size()) < t * k.r) continue;
        KttSearch search{k, t, k.r, cls, {}};
        if (search.pick_group(0, cls, 0)) {
            KttWitness w;
            w.color = color;
            w.parts = search.groups;
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace kneserlab
