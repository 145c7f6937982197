#include "kneserlab/tucker.hpp"

#include <algorithm>
#include <string>

namespace kneserlab {

namespace {

std::vector<std::uint64_t> powers(int base, int n) {
    std::vector<std::uint64_t> pw(n + 1, 1);
    for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * static_cast<std::uint64_t>(base);
    return pw;
}

std::uint64_t domain_size_checked(int p, int n, const TuckerCaps& caps) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (p > caps.max_p) throw CapExceeded("p exceeds cap");
    std::uint64_t d = 1;
    for (int i = 0; i < n; ++i) {
        d *= static_cast<std::uint64_t>(p) + 1;
        if (d > caps.max_domain) throw CapExceeded("signed-vector table exceeds domain cap");
    }
    return d;
}

// Odometer over base-(p+1) digit strings; digits[j] is position j+1.
struct CodeIter {
    int n, base;
    std::vector<std::uint8_t> digits;
    std::uint64_t code = 0;

    CodeIter(int n_, int p) : n(n_), base(p + 1), digits(n_, 0) {}

    bool next() {
        for (int j = 0; j < n; ++j) {
            if (digits[j] + 1 < base) {
                ++digits[j];
                ++code;
                return true;
            }
            digits[j] = 0;
        }
        return false;
    }
};

int rotate_symbol(int s, int eps, int p) {
    return s == 0 ? 0 : ((s - 1 + eps) % p) + 1;
}

int first_nonzero(std::span<const std::uint8_t> digits) {
    for (std::uint8_t d : digits)
        if (d != 0) return d;
    return 0;
}

}  // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t TuckerMap::code_of(int p, std::span<const std::uint8_t> entries) {
    std::uint64_t code = 0;
    std::uint64_t mul = 1;
    for (std::uint8_t e : entries) {
        code += mul * e;
        mul *= static_cast<std::uint64_t>(p) + 1;
    }
    return code;
}

std::vector<std::uint8_t> TuckerMap::decode(int p, int n, std::uint64_t code) {
    std::vector<std::uint8_t> out(n, 0);
    for (int j = 0; j < n; ++j) {
        out[j] = static_cast<std::uint8_t>(code % (p + 1));
        code /= (p + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Property checks and chain search
// ---------------------------------------------------------------------------

TuckerCheckReport check_properties(const TuckerMap& map, const TuckerCaps& caps) {
    domain_size_checked(map.p, map.n, caps);
    TuckerCheckReport rep;
    const int p = map.p, n = map.n;
    auto pw = powers(p + 1, n);

    rep.equivariant = true;
    {
        CodeIter it(n, p);
        while (it.next() && rep.equivariant) {
            for (int eps = 1; eps < p; ++eps) {
                std::uint64_t acted = 0;
                for (int j = 0; j < n; ++j)
                    acted += pw[j] * static_cast<std::uint64_t>(rotate_symbol(it.digits[j], eps, p));
                if (map.lambda1(acted) != rotate_symbol(map.lambda1(it.code), eps, p) ||
                    map.lambda2(acted) != map.lambda2(it.code)) {
                    rep.equivariant = false;
                    break;
                }
            }
        }
    }

    rep.monotone_low = true;
    {
        CodeIter it(n, p);
        while (it.next() && rep.monotone_low) {
            if (map.lambda2(it.code) > map.alpha) continue;
            // enumerate proper sub-vectors: per support position keep or drop
            std::vector<int> sup;
            for (int j = 0; j < n; ++j)
                if (it.digits[j]) sup.push_back(j);
            int s = static_cast<int>(sup.size());
            for (std::uint32_t drop = 1; drop < (1u << s); ++drop) {
                std::uint64_t sub = it.code;
                for (int b = 0; b < s; ++b)
                    if ((drop >> b) & 1) sub -= pw[sup[b]] * it.digits[sup[b]];
                if (sub == 0) continue;
                if (map.lambda2(sub) == map.lambda2(it.code) &&
                    map.lambda1(sub) != map.lambda1(it.code)) {
                    rep.monotone_low = false;
                    break;
                }
            }
        }
    }

    rep.chain = find_violating_chain(map);
    return rep;
}

bool conclusion_holds(const TuckerMap& map) {
    return map.alpha + (map.m - map.alpha) * (map.p - 1) >= map.n;
}

namespace {

struct ChainSearch {
    const TuckerMap& map;
    std::vector<std::uint64_t> pw;
    int level = 0;

    // Walks down from `code`, collecting sub-vectors at the same level with
    // pairwise distinct lambda_1 values.
    bool descend(std::uint64_t code, int remaining, std::uint32_t used,
                 std::vector<std::uint64_t>& stack) {
        if (remaining == 0) return true;
        auto digits = TuckerMap::decode(map.p, map.n, code);
        std::vector<int> sup;
        for (int j = 0; j < map.n; ++j)
            if (digits[j]) sup.push_back(j);
        int s = static_cast<int>(sup.size());
        if (s - 1 < remaining) return false;  // each step strictly shrinks support
        for (std::uint32_t drop = 1; drop < (1u << s); ++drop) {
            std::uint64_t sub = code;
            for (int b = 0; b < s; ++b)
                if ((drop >> b) & 1) sub -= pw[sup[b]] * digits[sup[b]];
            if (sub == 0) continue;
            if (map.lambda2(sub) != level) continue;
            int l1 = map.lambda1(sub);
            if ((used >> l1) & 1) continue;
            stack.push_back(sub);
            if (descend(sub, remaining - 1, used | (1u << l1), stack)) return true;
            stack.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<ZpChain> find_violating_chain(const TuckerMap& map) {
    const int p = map.p, n = map.n;
    auto pw = powers(p + 1, n);
    std::vector<std::vector<std::uint64_t>> by_level(map.m + 1);
    {
        CodeIter it(n, p);
        while (it.next()) {
            int l2 = map.lambda2(it.code);
            if (l2 > map.alpha) by_level[l2].push_back(it.code);
        }
    }
    for (int level = map.alpha + 1; level <= map.m; ++level) {
        auto& bucket = by_level[level];
        if (static_cast<int>(bucket.size()) < p) continue;
        // wide vectors first: chains hang off large supports
        std::stable_sort(bucket.begin(), bucket.end(), [&](std::uint64_t a, std::uint64_t b) {
            int sa = 0, sb = 0;
            for (std::uint64_t x = a; x; x /= (p + 1)) sa += (x % (p + 1)) != 0;
            for (std::uint64_t x = b; x; x /= (p + 1)) sb += (x % (p + 1)) != 0;
            return sa > sb;
        });
        ChainSearch search{map, pw, level};
        for (std::uint64_t top : bucket) {
            std::vector<std::uint64_t> stack{top};
            if (search.descend(top, p - 1, 1u << map.lambda1(top), stack)) {
                std::reverse(stack.begin(), stack.end());
                return ZpChain{std::move(stack), level};
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Popular-color map scaffold and construction
// ---------------------------------------------------------------------------

PopularMapScaffold::PopularMapScaffold(const Hypergraph& h, const VertexOrdering& sigma, int p,
                                       int q, const TuckerCaps& caps, const AltCaps& alt_caps) {
    n_ = h.vertex_count();
    p_ = p;
    q_ = q;
    std::uint64_t dom = domain_size_checked(p, n_, caps);
    if (!sigma.is_valid() || sigma.size() != n_)
        throw std::invalid_argument("sigma is not a bijection on [n]");
    alpha_ = alt_r_sigma_q(h, sigma, p, q, alt_caps);

    high_.assign(dom, 0);
    lam1_.assign(dom, 0);
    low_lam2_.assign(dom, 0);
    edge_off_.assign(dom, 0);
    last_edges_.clear();

    std::vector<VertexSet> pos_bit(n_);
    for (int j = 0; j < n_; ++j) pos_bit[j] = vbit(sigma.perm[j]);

    CodeIter it(n_, p);
    while (it.next()) {
        int alt = alt_value(std::span<const std::uint8_t>(it.digits));
        if (alt <= alpha_) {
            lam1_[it.code] = static_cast<std::uint8_t>(first_nonzero(it.digits));
            low_lam2_[it.code] = static_cast<std::uint16_t>(alt);
            continue;
        }
        high_[it.code] = 1;
        // choose the part with >= q induced edges whose vertex set is largest
        // in the canonical order
        int chosen = 0;
        VertexSet chosen_mask = 0;
        for (int i = 1; i <= p; ++i) {
            VertexSet mask = 0;
            for (int j = 0; j < n_; ++j)
                if (it.digits[j] == i) mask |= pos_bit[j];
            if (mask == 0) continue;
            if (h.induced_edge_count(mask) < q) continue;
            if (chosen == 0 || set_order_less(chosen_mask, mask)) {
                chosen = i;
                chosen_mask = mask;
            }
        }
        if (chosen == 0)
            throw VerificationFailure("vector above the alternation level has no part with q edges");
        lam1_[it.code] = static_cast<std::uint8_t>(chosen);
        std::vector<int> induced = h.induced_edges(chosen_mask);
        edge_off_[it.code] = static_cast<std::uint32_t>(last_edges_.size());
        for (std::size_t i = induced.size() - q_; i < induced.size(); ++i)
            last_edges_.push_back(induced[i]);
    }
}

TuckerMap PopularMapScaffold::instantiate(const Coloring& edge_colors, int d) const {
    const int c_colors = edge_colors.num_colors;
    if (c_colors < 1) throw std::invalid_argument("coloring must use at least one color");
    if (static_cast<long long>(c_colors) * (p_ - 1) >= n_ - alpha_ || c_colors >= d)
        throw std::invalid_argument("C must satisfy C < min((n - alt)/(p-1), d)");

    TuckerMap map;
    map.n = n_;
    map.p = p_;
    map.alpha = alpha_;
    map.m = alpha_ + c_colors;
    map.table.assign(high_.size(), {0, 0});

    std::vector<int> tally(c_colors + 1, 0);
    for (std::uint64_t code = 1; code < high_.size(); ++code) {
        if (!high_[code]) {
            map.table[code] = {lam1_[code], low_lam2_[code]};
            continue;
        }
        std::fill(tally.begin(), tally.end(), 0);
        for (int i = 0; i < q_; ++i)
            ++tally[edge_colors.values[last_edges_[edge_off_[code] + i]]];
        int best = 1;
        for (int c = 2; c <= c_colors; ++c)
            if (tally[c] >= tally[best]) best = c;  // ties to the larger color
        map.table[code] = {lam1_[code], static_cast<std::uint16_t>(alpha_ + best)};
    }
    return map;
}

TuckerMap build_popular_color_map(const Hypergraph& h, const VertexOrdering& sigma,
                                  const Coloring& edge_colors, int p, int q, int d, int t,
                                  const TuckerCaps& caps, const AltCaps& alt_caps) {
    if (q < (d - 1) * (t - 1) + 1) throw std::invalid_argument("requires q >= (d-1)(t-1)+1");
    if (edge_colors.size() != h.edge_count() || !edge_colors.is_valid())
        throw std::invalid_argument("edge coloring does not cover E(H)");
    PopularMapScaffold scaffold(h, sigma, p, q, caps, alt_caps);
    return scaffold.instantiate(edge_colors, d);
}

// ---------------------------------------------------------------------------
// Witness extraction and validation
// ---------------------------------------------------------------------------

void validate_witness(const Hypergraph& h, const Coloring& edge_colors, const TupleWitness& w) {
    if (w.r < 1 || static_cast<int>(w.parts.size()) != w.r ||
        static_cast<int>(w.part_edges.size()) != w.r)
        throw VerificationFailure("witness arity mismatch");
    if (w.color < 1 || w.color > edge_colors.num_colors)
        throw VerificationFailure("witness color out of range");
    VertexSet seen = 0;
    for (VertexSet part : w.parts) {
        if ((part & seen) != 0) throw VerificationFailure("witness parts overlap");
        seen |= part;
    }
    for (int j = 0; j < w.r; ++j) {
        std::vector<int> induced = h.induced_edges(w.parts[j]);
        if (static_cast<int>(induced.size()) < w.q)
            throw VerificationFailure("witness part induces fewer than q edges");
        std::vector<VertexSet> lastq;
        for (std::size_t i = induced.size() - w.q; i < induced.size(); ++i)
            lastq.push_back(h.edge(induced[i]));
        if (static_cast<int>(w.part_edges[j].size()) != w.t)
            throw VerificationFailure("witness part does not list t edges");
        std::vector<VertexSet> es = w.part_edges[j];
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(es.begin(), es.end()) != es.end())
            throw VerificationFailure("witness edges not distinct");
        for (VertexSet e : w.part_edges[j]) {
            if ((e & ~w.parts[j]) != 0) throw VerificationFailure("witness edge leaves its part");
            if (std::find(lastq.begin(), lastq.end(), e) == lastq.end())
                throw VerificationFailure("witness edge not among the last q induced edges");
            if (!h.has_edge(e)) throw VerificationFailure("witness edge not an edge of H");
            int idx = static_cast<int>(
                std::lower_bound(h.edges().begin(), h.edges().end(), e, SetOrder{}) -
                h.edges().begin());
            if (edge_colors.values[idx] != w.color)
                throw VerificationFailure("witness edge has the wrong color");
        }
    }
}

TupleWitness extract_tuple(const TuckerMap& map, const Hypergraph& h, const VertexOrdering& sigma,
                           const Coloring& edge_colors, const ZpChain& chain, int q, int t) {
    const int p = map.p, n = map.n;
    if (static_cast<int>(chain.codes.size()) != p)
        throw VerificationFailure("chain length differs from p");
    if (chain.level <= map.alpha) throw VerificationFailure("chain below level alpha+1");
    std::uint32_t seen = 0;
    for (std::uint64_t code : chain.codes) {
        if (map.lambda2(code) != chain.level)
            throw VerificationFailure("chain is not level-constant");
        int l1 = map.lambda1(code);
        if ((seen >> l1) & 1) throw VerificationFailure("chain lambda_1 values not distinct");
        seen |= 1u << l1;
    }

    TupleWitness w;
    w.r = p;
    w.q = q;
    w.t = t;
    w.color = chain.level - map.alpha;

    for (std::uint64_t code : chain.codes) {
        int part_symbol = map.lambda1(code);
        auto digits = TuckerMap::decode(p, n, code);
        VertexSet part = 0;
        for (int j = 0; j < n; ++j)
            if (digits[j] == part_symbol) part |= vbit(sigma.perm[j]);
        std::vector<int> induced = h.induced_edges(part);
        if (static_cast<int>(induced.size()) < q)
            throw VerificationFailure("extracted part induces fewer than q edges");
        std::vector<VertexSet> chosen;
        for (std::size_t i = induced.size() - q; i < induced.size(); ++i)
            if (edge_colors.values[induced[i]] == w.color) chosen.push_back(h.edge(induced[i]));
        if (static_cast<int>(chosen.size()) < t)
            throw VerificationFailure("extracted part lacks t same-colored edges");
        w.parts.push_back(part);
        w.part_edges.emplace_back(chosen.end() - t, chosen.end());
    }
    validate_witness(h, edge_colors, w);
    return w;
}

// ---------------------------------------------------------------------------
// End-to-end solving
// ---------------------------------------------------------------------------

namespace {

int smallest_prime_factor(int r) {
    for (int d = 2; d * d <= r; ++d)
        if (r % d == 0) return d;
    return r;
}

Coloring restrict_coloring(const Hypergraph& parent, const Coloring& colors,
                           const InducedSubhypergraph& sub) {
    Coloring out;
    out.num_colors = colors.num_colors;
    out.values.reserve(sub.sub.edge_count());
    for (VertexSet e : sub.sub.edges()) {
        VertexSet orig = 0;
        for (int v : set_elements(e)) orig |= vbit(sub.original_vertex[v - 1]);
        int idx = static_cast<int>(
            std::lower_bound(parent.edges().begin(), parent.edges().end(), orig, SetOrder{}) -
            parent.edges().begin());
        out.values.push_back(colors.values[idx]);
    }
    return out;
}

VertexSet lift_mask(VertexSet sub_mask, const std::vector<int>& original_vertex) {
    VertexSet out = 0;
    for (int v : set_elements(sub_mask)) out |= vbit(original_vertex[v - 1]);
    return out;
}

}  // namespace

TupleWitness solve_tuple(const Hypergraph& h, const VertexOrdering& sigma,
                         const Coloring& edge_colors, int r, int q, int d, int t,
                         const TuckerCaps& caps, const AltCaps& alt_caps) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (is_prime(r)) {
        TuckerMap map = build_popular_color_map(h, sigma, edge_colors, r, q, d, t, caps, alt_caps);
        auto chain = find_violating_chain(map);
        if (!chain)
            throw VerificationFailure("no violating chain although the conclusion fails");
        return extract_tuple(map, h, sigma, edge_colors, *chain, q, t);
    }
    int r1 = smallest_prime_factor(r);
    return reduce_composite(h, sigma, edge_colors, r1, r / r1, q, d, t, caps, alt_caps);
}

TupleWitness reduce_composite(const Hypergraph& h, const VertexOrdering& sigma,
                              const Coloring& edge_colors, int r1, int r2, int q, int d, int t,
                              const TuckerCaps& caps, const AltCaps& alt_caps) {
    if (r1 < 2 || r2 < 2) throw std::invalid_argument("composite factors must be >= 2");
    if (edge_colors.size() != h.edge_count() || !edge_colors.is_valid())
        throw std::invalid_argument("edge coloring does not cover E(H)");
    const int r = r1 * r2;
    const int n = h.vertex_count();
    const int c_colors = edge_colors.num_colors;
    alt_caps.require_positions(r, n);
    int alt_full = max_alt_search(h, sigma.perm, r, q, false);
    if (static_cast<long long>(c_colors) * (r - 1) >= n - alt_full || c_colors >= d)
        throw std::invalid_argument("C must satisfy C < min((n - alt)/(r-1), d)");

    Hypergraph surplus = alt_surplus_hypergraph(h, c_colors, r2, sigma, q, {}, alt_caps);

    // solve the r2 case inside every surplus edge; its witness color becomes
    // the derived coloring of that edge
    std::vector<TupleWitness> inner(surplus.edge_count());
    Coloring derived;
    derived.num_colors = c_colors;
    derived.values.resize(surplus.edge_count());
    for (int i = 0; i < surplus.edge_count(); ++i) {
        VertexSet m = surplus.edge(i);
        InducedSubhypergraph sub = induced_sub(h, m);
        // sigma restricted to M, relabeled to sub-vertex ids
        std::vector<int> sub_id(kMaxGroundVertices + 1, 0);
        for (std::size_t v = 0; v < sub.original_vertex.size(); ++v)
            sub_id[sub.original_vertex[v]] = static_cast<int>(v) + 1;
        VertexOrdering sub_sigma;
        for (int v : sigma.perm)
            if (contains(m, v)) sub_sigma.perm.push_back(sub_id[v]);
        Coloring sub_colors = restrict_coloring(h, edge_colors, sub);
        TupleWitness w = solve_tuple(sub.sub, sub_sigma, sub_colors, r2, q, d, t, caps, alt_caps);
        // lift back to the parent vertex labels
        TupleWitness lifted;
        lifted.r = w.r;
        lifted.q = w.q;
        lifted.t = w.t;
        lifted.color = w.color;
        for (VertexSet part : w.parts) lifted.parts.push_back(lift_mask(part, sub.original_vertex));
        for (const auto& es : w.part_edges) {
            std::vector<VertexSet> le;
            for (VertexSet e : es) le.push_back(lift_mask(e, sub.original_vertex));
            lifted.part_edges.push_back(std::move(le));
        }
        inner[i] = std::move(lifted);
        derived.values[i] = inner[i].color;
    }

    TupleWitness top = solve_tuple(surplus, sigma, derived, r1, 1, d, 1, caps, alt_caps);

    TupleWitness out;
    out.r = r;
    out.q = q;
    out.t = t;
    out.color = top.color;
    for (int j = 0; j < r1; ++j) {
        VertexSet m = top.part_edges[j][0];
        int idx = static_cast<int>(
            std::lower_bound(surplus.edges().begin(), surplus.edges().end(), m, SetOrder{}) -
            surplus.edges().begin());
        const TupleWitness& w = inner[idx];
        if (w.color != top.color)
            throw VerificationFailure("derived coloring mismatch in composite assembly");
        out.parts.insert(out.parts.end(), w.parts.begin(), w.parts.end());
        out.part_edges.insert(out.part_edges.end(), w.part_edges.begin(), w.part_edges.end());
    }
    validate_witness(h, edge_colors, out);
    return out;
}

// ---------------------------------------------------------------------------
// Two-signed variant
// ---------------------------------------------------------------------------

namespace {

struct SidePopular {
    int color = 0;  // most popular color among the last q induced edges
    int count = 0;
    std::vector<VertexSet> edges_of_color;  // canonical order
};

SidePopular side_popular(const Hypergraph& h, VertexSet side, int q, const Coloring& colors) {
    std::vector<int> induced = h.induced_edges(side);
    SidePopular out;
    if (static_cast<int>(induced.size()) < q) return out;  // color 0 marks failure
    std::vector<int> tally(colors.num_colors + 1, 0);
    for (std::size_t i = induced.size() - q; i < induced.size(); ++i)
        ++tally[colors.values[induced[i]]];
    int best = 1;
    for (int c = 2; c <= colors.num_colors; ++c)
        if (tally[c] >= tally[best]) best = c;
    out.color = best;
    out.count = tally[best];
    for (std::size_t i = induced.size() - q; i < induced.size(); ++i)
        if (colors.values[induced[i]] == best) out.edges_of_color.push_back(h.edge(induced[i]));
    return out;
}

}  // namespace

std::variant<TupleWitness, TuckerMap> build_signed_popular_map(
    const Hypergraph& h, const VertexOrdering& sigma, const Coloring& edge_colors, int q, int d,
    int t, const TuckerCaps& caps, const AltCaps& alt_caps) {
    if (q < (d - 1) * (t - 1) + 1) throw std::invalid_argument("requires q >= (d-1)(t-1)+1");
    if (edge_colors.size() != h.edge_count() || !edge_colors.is_valid())
        throw std::invalid_argument("edge coloring does not cover E(H)");
    const int n = h.vertex_count();
    const int p = 2;
    const int c_colors = edge_colors.num_colors;
    std::uint64_t dom = domain_size_checked(p, n, caps);
    int alpha = salt_sigma_q(h, sigma, q, alt_caps);
    if (c_colors >= n - alpha + 1 || c_colors >= d)
        throw std::invalid_argument("C must satisfy C < min(n - salt + 1, d)");

    TuckerMap map;
    map.n = n;
    map.p = p;
    map.alpha = alpha;
    map.m = alpha + c_colors - 1;
    map.table.assign(dom, {0, 0});

    CodeIter it(n, p);
    while (it.next()) {
        int alt = alt_value(std::span<const std::uint8_t>(it.digits));
        if (alt <= alpha) {
            map.table[it.code] = {static_cast<std::uint8_t>(first_nonzero(it.digits)),
                                  static_cast<std::uint16_t>(alt)};
            continue;
        }
        VertexSet plus = 0, minus = 0;
        for (int j = 0; j < n; ++j) {
            if (it.digits[j] == 1) plus |= vbit(sigma.perm[j]);
            if (it.digits[j] == 2) minus |= vbit(sigma.perm[j]);
        }
        SidePopular gp = side_popular(h, plus, q, edge_colors);
        SidePopular gm = side_popular(h, minus, q, edge_colors);
        if (gp.color == 0 || gm.color == 0)
            throw VerificationFailure("high-alternation vector has a side below q edges");
        if (gp.color == gm.color) {
            // both sides share a popular color: the pair is immediate
            TupleWitness w;
            w.r = 2;
            w.q = q;
            w.t = t;
            w.color = gp.color;
            w.parts = {plus, minus};
            if (gp.count < t || gm.count < t)
                throw VerificationFailure("immediate pair lacks t same-colored edges");
            w.part_edges = {
                std::vector<VertexSet>(gp.edges_of_color.end() - t, gp.edges_of_color.end()),
                std::vector<VertexSet>(gm.edges_of_color.end() - t, gm.edges_of_color.end())};
            validate_witness(h, edge_colors, w);
            return w;
        }
        int g = std::max(gp.color, gm.color);
        std::uint8_t eps = gp.color > gm.color ? 1 : 2;
        map.table[it.code] = {eps, static_cast<std::uint16_t>(alpha + g - 1)};
    }
    return map;
}

TupleWitness solve_pair_signed(const Hypergraph& h, const VertexOrdering& sigma,
                               const Coloring& edge_colors, int q, int d, int t,
                               const TuckerCaps& caps, const AltCaps& alt_caps) {
    auto built = build_signed_popular_map(h, sigma, edge_colors, q, d, t, caps, alt_caps);
    if (std::holds_alternative<TupleWitness>(built)) return std::get<TupleWitness>(built);
    const TuckerMap& map = std::get<TuckerMap>(built);
    auto chain = find_violating_chain(map);
    if (!chain) throw VerificationFailure("no violating chain although the conclusion fails");

    TupleWitness w;
    w.r = 2;
    w.q = q;
    w.t = t;
    w.color = chain->level - map.alpha + 1;  // levels store alpha + g - 1
    for (std::uint64_t code : chain->codes) {
        int eps = map.lambda1(code);
        auto digits = TuckerMap::decode(map.p, map.n, code);
        VertexSet part = 0;
        for (int j = 0; j < map.n; ++j)
            if (digits[j] == eps) part |= vbit(sigma.perm[j]);
        SidePopular sp = side_popular(h, part, q, edge_colors);
        if (sp.color != w.color || sp.count < t)
            throw VerificationFailure("chain side does not carry the common popular color");
        w.parts.push_back(part);
        w.part_edges.emplace_back(sp.edges_of_color.end() - t, sp.edges_of_color.end());
    }
    validate_witness(h, edge_colors, w);
    return w;
}

}  // namespace kneserlab
