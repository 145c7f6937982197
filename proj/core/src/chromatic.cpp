#include "kneserlab/chromatic.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

namespace kneserlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool expired() const { return Clock::now() >= end; }
};

enum class Decision { sat, unsat, timeout };

constexpr int kMaxColors = 64;

// ---------------------------------------------------------------------------
// Graph decision engine: DSATUR-ordered backtracking with a precolored clique
// and the one-new-color canonical rule.
// ---------------------------------------------------------------------------

struct GraphInstance {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> adj;  // n rows of `words` words
    std::vector<int> degree;

    const std::uint64_t* row(int v) const { return adj.data() + static_cast<std::size_t>(v) * words; }

    bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }
};

GraphInstance build_graph(int n, const std::vector<std::vector<int>>& edges) {
    GraphInstance g;
    g.n = n;
    g.words = (n + 63) / 64;
    g.adj.assign(static_cast<std::size_t>(n) * g.words, 0);
    g.degree.assign(n, 0);
    auto set_bit = [&](int u, int v) {
        g.adj[static_cast<std::size_t>(u) * g.words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    };
    for (const auto& e : edges) {
        int u = e[0] - 1, v = e[1] - 1;
        if (u == v) continue;
        if (!g.adjacent(u, v)) {
            set_bit(u, v);
            set_bit(v, u);
            ++g.degree[u];
            ++g.degree[v];
        }
    }
    return g;
}

std::vector<int> greedy_clique(const GraphInstance& g) {
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree[a] > g.degree[b]; });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    return clique;
}

struct DsaturSearch {
    const GraphInstance& g;
    int colors = 0;
    Deadline deadline;
    std::int64_t node_cap = 0;

    std::vector<int> color;               // 0 = unassigned
    std::vector<std::uint64_t> satmask;   // colors used by neighbors (bit c-1)
    std::int64_t nodes = 0;
    bool out_of_budget = false;

    Decision decide(const std::vector<int>& clique) {
        color.assign(g.n, 0);
        satmask.assign(g.n, 0);
        nodes = 0;
        out_of_budget = false;
        int used = 0;
        int precolored = 0;
        for (int v : clique) {
            if (used == colors) return Decision::unsat;  // clique larger than palette
            assign(v, ++used);
            ++precolored;
        }
        bool sat = search(precolored, used);
        if (out_of_budget) return Decision::timeout;
        return sat ? Decision::sat : Decision::unsat;
    }

    void assign(int v, int c) {
        color[v] = c;
        const std::uint64_t* r = g.row(v);
        for (int w = 0; w < g.words; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int u = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                satmask[u] |= std::uint64_t{1} << (c - 1);
            }
        }
    }

    void unassign(int v, int c) {
        color[v] = 0;
        const std::uint64_t* r = g.row(v);
        for (int w = 0; w < g.words; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int u = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                // recompute: another neighbor of u may still carry c
                bool still = false;
                const std::uint64_t* ru = g.row(u);
                for (int w2 = 0; w2 < g.words && !still; ++w2) {
                    std::uint64_t nb = ru[w2];
                    while (nb) {
                        int x = (w2 << 6) + std::countr_zero(nb);
                        nb &= nb - 1;
                        if (color[x] == c) { still = true; break; }
                    }
                }
                if (!still) satmask[u] &= ~(std::uint64_t{1} << (c - 1));
            }
        }
    }

    bool search(int num_colored, int used) {
        if (num_colored == g.n) return true;
        if (((++nodes) & 0xfff) == 0 && (deadline.expired() || nodes > node_cap)) {
            out_of_budget = true;
            return false;
        }
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] != 0) continue;
            int s = std::popcount(satmask[v]);
            if (s > best_sat || (s == best_sat && g.degree[v] > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = g.degree[v];
            }
        }
        int v = best;
        int limit = std::min(colors, used + 1);
        std::uint64_t banned = satmask[v];
        for (int c = 1; c <= limit; ++c) {
            if ((banned >> (c - 1)) & 1) continue;
            assign(v, c);
            if (search(num_colored + 1, std::max(used, c))) return true;
            unassign(v, c);
            if (out_of_budget) return false;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Cover decision engine: partition the vertex set into C independent sets by
// branching over maximal independent sets through a pivot vertex.  Strong on
// refutations where DSATUR stalls; caches refuted (mask, level) states.
// ---------------------------------------------------------------------------

struct Mask {
    std::array<std::uint64_t, 3> w{};  // up to 192 vertices

    bool operator==(const Mask&) const = default;
    bool empty() const { return !(w[0] | w[1] | w[2]); }
    int count() const { return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    Mask operator&(const Mask& o) const { return {{w[0] & o.w[0], w[1] & o.w[1], w[2] & o.w[2]}}; }
    Mask operator|(const Mask& o) const { return {{w[0] | o.w[0], w[1] | o.w[1], w[2] | o.w[2]}}; }
    Mask minus(const Mask& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1], w[2] & ~o.w[2]}}; }
    int first() const {
        for (int i = 0; i < 3; ++i)
            if (w[i]) return (i << 6) + std::countr_zero(w[i]);
        return -1;
    }
};

struct MaskHash {
    std::size_t operator()(const Mask& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t x : m.w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct CoverSearch {
    const GraphInstance& g;
    Deadline deadline;
    std::vector<Mask> adj;   // adjacency as Mask rows
    std::vector<Mask> nadj;  // complement rows (within [n], no self-loop)
    std::int64_t nodes = 0;
    std::int64_t node_cap = 0;
    bool out_of_budget = false;
    std::unordered_set<Mask, MaskHash> refuted[kMaxColors + 1];

    explicit CoverSearch(const GraphInstance& graph) : g(graph) {
        adj.resize(g.n);
        nadj.resize(g.n);
        Mask all{};
        for (int v = 0; v < g.n; ++v) all.set(v);
        for (int v = 0; v < g.n; ++v) {
            for (int u = 0; u < g.n; ++u)
                if (g.adjacent(v, u)) adj[v].set(u);
            nadj[v] = all.minus(adj[v]);
            nadj[v].reset(v);
        }
    }

    Decision decide(int colors) {
        Mask all{};
        for (int v = 0; v < g.n; ++v) all.set(v);
        nodes = 0;
        out_of_budget = false;
        bool sat = cover(all, colors);
        if (out_of_budget) return Decision::timeout;
        return sat ? Decision::sat : Decision::unsat;
    }

    bool independent(const Mask& rem) const {
        Mask m = rem;
        int v;
        while ((v = m.first()) >= 0) {
            m.reset(v);
            if (!(adj[v] & rem).empty()) return false;
        }
        return true;
    }

    bool cover(const Mask& rem, int colors) {
        if (rem.empty()) return true;
        if (colors <= 0) return false;
        if (((++nodes) & 0x3ff) == 0 && (deadline.expired() || nodes > node_cap)) {
            out_of_budget = true;
            return false;
        }
        if (colors == 1) return independent(rem);
        if (refuted[colors].contains(rem)) return false;

        // pivot: max degree inside rem
        int pivot = -1, best_deg = -1;
        Mask m = rem;
        int v;
        while ((v = m.first()) >= 0) {
            m.reset(v);
            int d = (adj[v] & rem).count();
            if (d > best_deg) { best_deg = d; pivot = v; }
        }

        // enumerate maximal independent sets (inside rem) containing pivot
        Mask start{};
        start.set(pivot);
        bool sat = enumerate_mis(rem, start, (nadj[pivot] & rem), colors);
        if (!sat && !out_of_budget && refuted[colors].size() < (1u << 22))
            refuted[colors].insert(rem);
        return sat;
    }

    // cur: chosen so far; cand: vertices of rem non-adjacent to all of cur.
    bool enumerate_mis(const Mask& rem, Mask cur, Mask cand, int colors) {
        if (out_of_budget) return false;
        if (cand.empty()) {
            return cover(rem.minus(cur), colors - 1);
        }
        // pivot on the candidate covering most of cand (fewest branches)
        int p = -1, best_cover = -1;
        Mask m = cand;
        int v;
        while ((v = m.first()) >= 0) {
            m.reset(v);
            int c = (adj[v] & cand).count();
            if (c > best_cover) { best_cover = c; p = v; }
        }
        // Branch on p and on each candidate adjacent to p (candidates
        // non-adjacent to p never need separate branches before p is decided).
        Mask branch = adj[p] & cand;
        branch.set(p);
        Mask bm = branch;
        while ((v = bm.first()) >= 0) {
            bm.reset(v);
            Mask nxt = cur;
            nxt.set(v);
            if (enumerate_mis(rem, nxt, cand & nadj[v], colors)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Hypergraph decision engine: most-constrained-vertex backtracking with
// monochromatic-edge forward checking.
// ---------------------------------------------------------------------------

struct HyperSearch {
    int n = 0;
    int colors = 0;
    Deadline deadline;
    std::int64_t node_cap = 0;
    const std::vector<std::vector<int>>& edges;  // 0-based
    std::vector<std::vector<int>> incident;      // per vertex, edge indices
    std::vector<int> degree;

    std::vector<int> color;
    std::vector<int> unassigned;      // per edge
    std::vector<int> uniform;         // per edge: 0 none, -1 mixed, c>0 uniform
    std::vector<std::vector<int>> ban_count;  // [v][c]
    std::vector<std::uint64_t> ban_mask;
    std::int64_t nodes = 0;
    bool out_of_budget = false;

    HyperSearch(int nv, const std::vector<std::vector<int>>& es) : n(nv), edges(es) {
        incident.resize(n);
        degree.assign(n, 0);
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            for (int v : edges[i]) {
                incident[v].push_back(i);
                ++degree[v];
            }
    }

    Decision decide(int c) {
        colors = c;
        color.assign(n, 0);
        unassigned.assign(edges.size(), 0);
        uniform.assign(edges.size(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) unassigned[i] = static_cast<int>(edges[i].size());
        ban_count.assign(n, std::vector<int>(colors + 1, 0));
        ban_mask.assign(n, 0);
        nodes = 0;
        out_of_budget = false;
        bool sat = search(0, 0);
        if (out_of_budget) return Decision::timeout;
        return sat ? Decision::sat : Decision::unsat;
    }

    void add_ban(int v, int c) {
        if (++ban_count[v][c] == 1) ban_mask[v] |= std::uint64_t{1} << (c - 1);
    }
    void remove_ban(int v, int c) {
        if (--ban_count[v][c] == 0) ban_mask[v] &= ~(std::uint64_t{1} << (c - 1));
    }

    int lone_uncolored(int ei) const {
        for (int v : edges[ei])
            if (color[v] == 0) return v;
        return -1;
    }

    struct Undo {
        std::vector<std::pair<int, int>> bans;     // (vertex, color)
        std::vector<std::pair<int, int>> uniforms;  // (edge, previous uniform)
    };

    void apply(int v, int c, Undo& undo) {
        color[v] = c;
        for (int ei : incident[v]) {
            --unassigned[ei];
            int u = uniform[ei];
            if (u == -1) continue;
            if (u == 0) {
                uniform[ei] = c;
                undo.uniforms.push_back({ei, 0});
            } else if (u != c) {
                uniform[ei] = -1;
                undo.uniforms.push_back({ei, u});
                continue;
            }
            if (uniform[ei] == c && unassigned[ei] == 1) {
                int w = lone_uncolored(ei);
                add_ban(w, c);
                undo.bans.push_back({w, c});
            }
        }
    }

    void revert(int v, const Undo& undo) {
        for (auto it = undo.bans.rbegin(); it != undo.bans.rend(); ++it)
            remove_ban(it->first, it->second);
        for (auto it = undo.uniforms.rbegin(); it != undo.uniforms.rend(); ++it)
            uniform[it->first] = it->second;
        for (int ei : incident[v]) ++unassigned[ei];
        color[v] = 0;
    }

    bool search(int num_colored, int used) {
        if (num_colored == n) return true;
        if (((++nodes) & 0xfff) == 0 && (deadline.expired() || nodes > node_cap)) {
            out_of_budget = true;
            return false;
        }
        int best = -1, best_banned = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != 0) continue;
            int b = std::popcount(ban_mask[v]);
            if (b > best_banned || (b == best_banned && degree[v] > best_deg)) {
                best = v;
                best_banned = b;
                best_deg = degree[v];
            }
        }
        int v = best;
        int limit = std::min(colors, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if ((ban_mask[v] >> (c - 1)) & 1) continue;
            Undo undo;
            apply(v, c, undo);
            if (search(num_colored + 1, std::max(used, c))) return true;
            revert(v, undo);
            if (out_of_budget) return false;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------

struct Greedy {
    // sequential smallest-feasible-color; works for any uniformity
    static int run(int n, const std::vector<std::vector<int>>& edges) {
        std::vector<std::vector<int>> incident(n);
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            for (int v : edges[i]) incident[v].push_back(i);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return incident[a].size() > incident[b].size();
        });
        std::vector<int> color(n, 0);
        int used = 0;
        for (int v : order) {
            int c = 1;
            for (;; ++c) {
                bool bad = false;
                for (int ei : incident[v]) {
                    bool mono = true;
                    for (int u : edges[ei]) {
                        if (u == v) continue;
                        if (color[u] != c) { mono = false; break; }
                    }
                    if (mono) { bad = true; break; }
                }
                if (!bad) break;
            }
            color[v] = c;
            used = std::max(used, c);
        }
        return std::max(used, 1);
    }
};

ChiResult solve(int n, std::vector<std::vector<int>> edges, const ChiOptions& opts) {
    ChiResult res;
    if (n == 0) {
        res = {0, 0, true, false};
        return res;
    }
    if (n > opts.max_vertices) throw CapExceeded("chromatic solver vertex cap exceeded");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int& v : e) --v;  // to 0-based
        if (e.empty()) throw std::invalid_argument("empty edge");
        if (e.front() < 0 || e.back() >= n) throw std::invalid_argument("edge vertex out of range");
        if (e.size() == 1) {
            res.infeasible = true;
            return res;
        }
    }
    if (edges.empty()) {
        res = {1, 1, true, false};
        return res;
    }

    res.lo = 2;
    res.hi = Greedy::run(n, edges);
    Deadline deadline{Clock::now() + std::chrono::milliseconds(opts.budget_ms)};

    bool graph = true;
    for (const auto& e : edges)
        if (e.size() != 2) { graph = false; break; }

    if (graph) {
        GraphInstance g = build_graph(n, [&] {
            std::vector<std::vector<int>> one_based(edges.size());
            for (std::size_t i = 0; i < edges.size(); ++i)
                one_based[i] = {edges[i][0] + 1, edges[i][1] + 1};
            return one_based;
        }());
        std::vector<int> clique = greedy_clique(g);
        res.lo = std::max<int>(res.lo, static_cast<int>(clique.size()));
        if (res.hi > kMaxColors) throw CapExceeded("palette wider than 64 colors");
        CoverSearch cover(g);
        while (res.lo < res.hi) {
            int mid = (res.lo + res.hi) / 2;
            DsaturSearch s{g, mid, deadline, 400'000, {}, {}, 0, false};
            Decision d = s.decide(clique);
            if (d == Decision::timeout) {
                // DSATUR stalled inside its node cap; retry with the cover
                // engine, which refutes far better on sparse instances.
                cover.deadline = deadline;
                cover.node_cap = 2'000'000'000;
                d = cover.decide(mid);
            }
            if (d == Decision::sat)
                res.hi = mid;
            else if (d == Decision::unsat)
                res.lo = mid + 1;
            else
                return res;  // interval, not exact
        }
        res.exact = true;
        return res;
    }

    if (res.hi > kMaxColors) throw CapExceeded("palette wider than 64 colors");
    HyperSearch hs(n, edges);
    hs.deadline = deadline;
    hs.node_cap = 2'000'000'000;
    while (res.lo < res.hi) {
        int mid = (res.lo + res.hi) / 2;
        Decision d = hs.decide(mid);
        if (d == Decision::sat)
            res.hi = mid;
        else if (d == Decision::unsat)
            res.lo = mid + 1;
        else
            return res;
    }
    res.exact = true;
    return res;
}

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

BoundReport make_report(std::string name, int raw, bool has_edges) {
    BoundReport rep;
    rep.name = std::move(name);
    rep.raw = raw;
    rep.value = has_edges ? std::max(raw, 1) : raw;
    return rep;
}

}  // namespace

ChiResult chromatic_number(const PowerHypergraph& g, const ChiOptions& opts) {
    return solve(g.num_vertices, g.edges, opts);
}

ChiResult chromatic_number(const Hypergraph& h, const ChiOptions& opts) {
    return solve(h.vertex_count(), to_power(h).edges, opts);
}

int afl_formula(int n, int k, int r) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (k < 1 || n < r * k) throw std::invalid_argument("requires n >= r*k");
    return ceil_div(n - r * (k - 1), r - 1);
}

BoundReport dolnikov_kriz_bound(const Hypergraph& h, int r) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    int cd = colorability_defect(h, r);
    BoundReport rep = make_report("dolnikov-kriz", ceil_div(cd, r - 1), h.edge_count() > 0);
    rep.params["r"] = r;
    rep.params["cd"] = cd;
    return rep;
}

BoundReport alt_bound(const Hypergraph& h, int r, SigmaMode mode, const AltCaps& caps,
                      std::uint64_t seed) {
    SigmaSearchResult s = alt_r_q(h, r, 1, mode, caps, seed);
    BoundReport rep =
        make_report("alternation", ceil_div(h.vertex_count() - s.value, r - 1), h.edge_count() > 0);
    rep.exact = s.exact;
    rep.sigma = s.sigma;
    rep.params["r"] = r;
    rep.params["alt"] = s.value;
    return rep;
}

BoundReport salt_bound(const Hypergraph& h, SigmaMode mode, const AltCaps& caps,
                       std::uint64_t seed) {
    SigmaSearchResult s = salt_q(h, 1, mode, caps, seed);
    BoundReport rep = make_report("signed-alternation", h.vertex_count() - s.value + 1,
                                  h.edge_count() > 0);
    rep.exact = s.exact;
    rep.sigma = s.sigma;
    rep.params["salt"] = s.value;
    return rep;
}

BoundReport ktt_free_bound(const Hypergraph& h, int r, const VertexOrdering& sigma, int q, int t,
                           int d, const AltCaps& caps) {
    if (q < (d - 1) * (t - 1) + 1)
        throw std::invalid_argument("requires q >= (d-1)(t-1)+1");
    int a = alt_r_sigma_q(h, sigma, r, q, caps);
    int raw = std::min(ceil_div(h.vertex_count() - a, r - 1), d);
    BoundReport rep = make_report("ktt-free", raw, h.edge_count() > 0);
    rep.sigma = sigma;
    rep.params["r"] = r;
    rep.params["q"] = q;
    rep.params["t"] = t;
    rep.params["d"] = d;
    rep.params["alt"] = a;
    return rep;
}

namespace {

// Canonical-coloring enumeration for the ktt-free exact value.  After each
// assignment only the class of the new vertex can have completed a witness.
struct KttExact {
    const KneserPower& k;
    int t;
    Deadline deadline;
    std::int64_t nodes = 0;
    bool out_of_budget = false;

    bool colorable_with(int colors) {
        Coloring c;
        c.num_colors = colors;
        c.values.assign(k.power.num_vertices, 0);
        return extend(c, 0, 0, colors);
    }

    bool extend(Coloring& c, int idx, int used, int colors) {
        if (idx == k.power.num_vertices) return true;
        if (((++nodes) & 0xff) == 0 && deadline.expired()) {
            out_of_budget = true;
            return false;
        }
        int limit = std::min(colors, used + 1);
        for (int col = 1; col <= limit; ++col) {
            c.values[idx] = col;
            if (!class_has_witness(c, idx + 1, col)) {
                if (extend(c, idx + 1, std::max(used, col), colors)) return true;
                if (out_of_budget) { c.values[idx] = 0; return false; }
            }
            c.values[idx] = 0;
        }
        return false;
    }

    bool class_has_witness(const Coloring& c, int prefix, int col) const {
        // restrict to the assigned prefix and the single color class
        std::vector<int> members;
        for (int v = 1; v <= prefix; ++v)
            if (c.values[v - 1] == col) members.push_back(v);
        if (static_cast<int>(members.size()) < t * k.r) return false;
        Coloring mono;
        mono.num_colors = 2;
        mono.values.assign(k.power.num_vertices, 2);
        for (int v : members) mono.values[v - 1] = 1;
        auto w = find_monochromatic_ktt(k, mono, t);
        return w.has_value() && w->color == 1;
    }
};

}  // namespace

ChiResult ktt_free_chromatic_exact(const KneserPower& k, int t, const KttChiOptions& opts) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (k.power.num_vertices > opts.max_vertices)
        throw CapExceeded("ktt-free exact search vertex cap exceeded");
    ChiResult res;
    if (k.power.num_vertices == 0) {
        res = {0, 0, true, false};
        return res;
    }
    KttExact search{k, t, {Clock::now() + std::chrono::milliseconds(opts.budget_ms)}, 0, false};
    for (int colors = 1; colors <= k.power.num_vertices; ++colors) {
        if (search.colorable_with(colors)) {
            res.lo = res.hi = colors;
            res.exact = true;
            return res;
        }
        if (search.out_of_budget) {
            res.lo = colors;  // everything below `colors` is refuted
            res.hi = k.power.num_vertices;
            return res;
        }
        res.lo = colors + 1;
    }
    res.hi = k.power.num_vertices;
    res.exact = true;
    return res;
}

}  // namespace kneserlab
