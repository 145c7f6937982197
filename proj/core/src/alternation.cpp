#include "kneserlab/alternation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kneserlab {

std::uint64_t SignedVector::part(int symbol) const {
    std::uint64_t mask = 0;
    for (int j = 0; j < size(); ++j)
        if (entries[j] == symbol) mask |= std::uint64_t{1} << j;
    return mask;
}

VertexSet SignedVector::support() const {
    VertexSet mask = 0;
    for (int j = 0; j < size(); ++j)
        if (entries[j] != 0) mask |= std::uint64_t{1} << j;
    return mask;
}

int alt_value(std::span<const std::uint8_t> entries) {
    int alt = 0;
    std::uint8_t last = 0;
    for (std::uint8_t e : entries) {
        if (e == 0) continue;
        if (e != last) {
            ++alt;
            last = e;
        }
    }
    return alt;
}

int AltCaps::max_positions(int alphabet) const {
    double budget = max_positions_base * std::log(3.0);
    return static_cast<int>(budget / std::log(static_cast<double>(alphabet) + 1.0));
}

void AltCaps::require_positions(int alphabet, int positions) const {
    if (positions > max_positions(alphabet))
        throw CapExceeded("signed-vector search space too large for exhaustive scan");
}

namespace {

struct AltEngine {
    const Hypergraph& h;
    std::span<const int> pos_vertex;
    int alphabet;
    int q;
    bool min_part;  // salt-style constraint (alphabet == 2)
    int stop_at;    // -1 = run to completion

    int m = 0;
    int best = 0;
    std::vector<VertexSet> part_mask = {};
    std::vector<int> part_edges = {};

    int run() {
        m = static_cast<int>(pos_vertex.size());
        best = 0;
        part_mask.assign(alphabet + 1, 0);
        part_edges.assign(alphabet + 1, 0);
        dfs(0, 0, 0);
        return best;
    }

    bool feasible_now() const {
        if (!min_part) return true;  // all-part violations are pruned at assignment
        return part_edges[1] <= q - 1 || part_edges[2] <= q - 1;
    }

    // Returns true to request full unwind (stop_at reached).
    bool dfs(int j, int cur_alt, int last) {
        if (feasible_now() && cur_alt > best) {
            best = cur_alt;
            if (stop_at >= 0 && best >= stop_at) return true;
        }
        if (j == m) return false;
        if (cur_alt + (m - j) <= best) return false;  // cannot beat best
        int v = pos_vertex[j];

        // Nonzero symbols first, those extending the alternation before the
        // repeat of the previous symbol; zero last.
        for (int pass = 0; pass < 2; ++pass) {
            for (int s = 1; s <= alphabet; ++s) {
                bool extends = (s != last);
                if (pass == 0 && !extends) continue;
                if (pass == 1 && extends) continue;
                int delta = added_edges(part_mask[s], v);
                int ne = part_edges[s] + delta;
                if (!min_part && ne > q - 1) continue;
                if (min_part) {
                    int other = (s == 1) ? 2 : 1;
                    if (ne > q - 1 && part_edges[other] > q - 1) continue;
                }
                part_mask[s] |= vbit(v);
                part_edges[s] = ne;
                bool stop = dfs(j + 1, cur_alt + (extends ? 1 : 0), extends ? s : last);
                part_mask[s] &= ~vbit(v);
                part_edges[s] = ne - delta;
                if (stop) return true;
            }
        }
        return dfs(j + 1, cur_alt, last);
    }

    int added_edges(VertexSet mask, int v) const {
        VertexSet grown = mask | vbit(v);
        int c = 0;
        for (int ei : h.edges_containing(v))
            if ((h.edge(ei) & ~grown) == 0) ++c;
        return c;
    }
};

std::vector<int> sigma_positions(const VertexOrdering& sigma) {
    return sigma.perm;
}

// Restriction sigma_M: vertices of M in sigma-position order.
std::vector<int> sigma_restriction(const VertexOrdering& sigma, VertexSet m) {
    std::vector<int> out;
    for (int v : sigma.perm)
        if (contains(m, v)) out.push_back(v);
    return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

int max_alt_search(const Hypergraph& h, std::span<const int> position_vertex, int alphabet,
                   int q, bool min_part_constraint, int stop_at) {
    AltEngine engine{h, position_vertex, alphabet, q, min_part_constraint, stop_at};
    return engine.run();
}

int alt_r_sigma_q(const Hypergraph& h, const VertexOrdering& sigma, int r, int q,
                  const AltCaps& caps) {
    if (r < 2) throw std::invalid_argument("alt_r_sigma_q requires r >= 2");
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (!sigma.is_valid() || sigma.size() != h.vertex_count())
        throw std::invalid_argument("sigma is not a bijection on [n]");
    caps.require_positions(r, h.vertex_count());
    std::vector<int> pos = sigma_positions(sigma);
    return max_alt_search(h, pos, r, q, false);
}

int salt_sigma_q(const Hypergraph& h, const VertexOrdering& sigma, int q, const AltCaps& caps) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (!sigma.is_valid() || sigma.size() != h.vertex_count())
        throw std::invalid_argument("sigma is not a bijection on [n]");
    caps.require_positions(2, h.vertex_count());
    std::vector<int> pos = sigma_positions(sigma);
    return max_alt_search(h, pos, 2, q, true);
}

namespace {

SigmaSearchResult sigma_min_search(const Hypergraph& h, int alphabet, int q, bool min_part,
                                   SigmaMode mode, const AltCaps& caps, std::uint64_t seed,
                                   int restarts) {
    int n = h.vertex_count();
    caps.require_positions(alphabet, n);
    auto value_of = [&](const std::vector<int>& perm, int stop_at) {
        return max_alt_search(h, perm, alphabet, q, min_part, stop_at);
    };

    if (mode == SigmaMode::exact) {
        if (n > caps.max_exact_sigma_n)
            throw CapExceeded("exact ordering search limited to small n");
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        SigmaSearchResult best;
        best.value = n + 1;
        best.exact = true;
        do {
            // alt is invariant under reversing the position sequence, so only
            // the lexicographically smaller of (perm, reverse) is evaluated.
            bool canonical = true;
            for (int i = 0, j = n - 1; i < j; ++i, --j) {
                if (perm[i] != perm[j]) { canonical = perm[i] < perm[j]; break; }
            }
            if (!canonical) continue;
            int v = value_of(perm, best.value);
            if (v < best.value) {
                best.value = v;
                best.sigma.perm = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    SigmaSearchResult best;
    best.value = n + 1;
    best.exact = false;
    std::uint64_t state = seed;
    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        if (restart > 0) {
            for (int i = n - 1; i > 0; --i) {
                int j = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(i + 1));
                std::swap(perm[i], perm[j]);
            }
        }
        int cur = value_of(perm, -1);
        bool improved = true;
        while (improved) {
            improved = false;
            int best_i = -1, best_v = cur;
            for (int i = 0; i + 1 < n; ++i) {
                std::swap(perm[i], perm[i + 1]);
                int v = value_of(perm, best_v);
                std::swap(perm[i], perm[i + 1]);
                if (v < best_v) { best_v = v; best_i = i; }
            }
            if (best_i >= 0) {
                std::swap(perm[best_i], perm[best_i + 1]);
                cur = best_v;
                improved = true;
            }
        }
        if (cur < best.value) {
            best.value = cur;
            best.sigma.perm = perm;
        }
    }
    return best;
}

}  // namespace

SigmaSearchResult alt_r_q(const Hypergraph& h, int r, int q, SigmaMode mode, const AltCaps& caps,
                          std::uint64_t seed, int restarts) {
    if (r < 2) throw std::invalid_argument("alt_r_q requires r >= 2");
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    return sigma_min_search(h, r, q, false, mode, caps, seed, restarts);
}

SigmaSearchResult salt_q(const Hypergraph& h, int q, SigmaMode mode, const AltCaps& caps,
                         std::uint64_t seed, int restarts) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    return sigma_min_search(h, 2, q, true, mode, caps, seed, restarts);
}

Hypergraph alt_surplus_hypergraph(const Hypergraph& h, int c_colors, int s,
                                  const VertexOrdering& sigma, int q, const BuildTCaps& caps,
                                  const AltCaps& alt_caps) {
    if (c_colors < 1) throw std::invalid_argument("C must be >= 1");
    if (s < 2) throw std::invalid_argument("s must be >= 2");
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    int n = h.vertex_count();
    if (n > caps.max_n) throw CapExceeded("surplus hypergraph enumerates 2^n subsets");
    alt_caps.require_positions(s, n);

    std::vector<VertexSet> edges;
    for (VertexSet m = 1; m <= full_set(n); ++m) {
        std::vector<int> pos = sigma_restriction(sigma, m);
        int a = max_alt_search(h, pos, s, q, false);
        if (set_size(m) - a > (s - 1) * c_colors) edges.push_back(m);
    }
    return Hypergraph(n, std::move(edges));
}

AltSurplusBoundReport verify_alt_surplus_bound(const Hypergraph& h, const VertexOrdering& sigma,
                                               int r, int s, int c_colors, int q,
                                               const BuildTCaps& caps, const AltCaps& alt_caps) {
    Hypergraph t = alt_surplus_hypergraph(h, c_colors, s, sigma, q, caps, alt_caps);
    AltSurplusBoundReport rep;
    rep.lhs = alt_r_sigma_q(t, sigma, r, 1, alt_caps);
    alt_caps.require_positions(r * s, h.vertex_count());
    int rs_alt = max_alt_search(h, sigma.perm, r * s, q, false);
    rep.rhs = r * (s - 1) * c_colors + rs_alt;
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

}  // namespace kneserlab
