#include "kneserlab/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "kneserlab/parallel.hpp"
#include "kneserlab/randmc.hpp"

namespace kneserlab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct FailureLog {
    std::atomic<std::uint64_t> failures{0};
    std::mutex mu;
    std::string first;

    void record(const std::string& what) {
        failures.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(mu);
        if (first.empty()) first = what;
    }
};

}  // namespace

void enumerate_hypergraphs(int n, int max_edges,
                           const std::function<bool(const Hypergraph&)>& fn) {
    std::uint64_t num_masks = full_set(n);  // masks 1..2^n-1
    int cap = static_cast<int>(std::min<std::uint64_t>(max_edges, num_masks));
    std::vector<VertexSet> chosen;
    // edge subsets by size; combinations run over mask values directly
    std::function<bool(VertexSet)> extend = [&](VertexSet from) {
        if (!fn(Hypergraph(n, chosen))) return false;
        if (static_cast<int>(chosen.size()) == cap) return true;
        for (VertexSet m = from; m <= num_masks; ++m) {
            chosen.push_back(m);
            bool keep = extend(m + 1);
            chosen.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    extend(1);
}

Hypergraph random_hypergraph(int n, int max_edges, std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ull + index + 1;
    splitmix64(state);
    std::uint64_t num_masks = full_set(n);
    int edges = 1 + static_cast<int>(splitmix64(state) %
                                     std::min<std::uint64_t>(max_edges, num_masks));
    std::vector<VertexSet> out;
    while (static_cast<int>(out.size()) < edges) {
        VertexSet m = 1 + splitmix64(state) % num_masks;
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    return Hypergraph(n, std::move(out));
}

bool enumerate_canonical_colorings(int items, int max_classes,
                                   const std::function<bool(const Coloring&)>& fn) {
    if (items == 0) {
        Coloring c;
        c.num_colors = 1;
        return fn(c);
    }
    Coloring c;
    c.values.assign(items, 1);
    std::vector<int> prefix_max(items, 1);
    // odometer over restricted growth strings
    while (true) {
        c.num_colors = prefix_max[items - 1];
        if (!fn(c)) return false;
        int i = items - 1;
        while (i > 0) {
            int allowed = std::min(prefix_max[i - 1] + 1, max_classes);
            if (c.values[i] < allowed) break;
            c.values[i] = 1;
            --i;
        }
        if (i == 0) return true;  // first item is pinned to color 1
        ++c.values[i];
        for (int j = i; j < items; ++j)
            prefix_max[j] = std::max(prefix_max[j - 1], c.values[j]);
        // ripple reset: positions after i are already 1
        for (int j = i + 1; j < items; ++j) prefix_max[j] = prefix_max[i];
    }
}

std::uint64_t count_canonical_colorings(int items, int max_classes) {
    std::uint64_t count = 0;
    enumerate_canonical_colorings(items, max_classes, [&](const Coloring&) {
        ++count;
        return true;
    });
    return count;
}

SweepReport sweep_bound_ordering(int n, int max_edges, const std::vector<int>& r_values,
                                 int random_count, std::uint64_t seed, int threads,
                                 const ChiOptions& chi_opts) {
    SweepReport rep;
    rep.target = "bound-ordering";
    std::atomic<std::uint64_t> instances{0}, checked{0};
    FailureLog log;

    auto inspect = [&](const Hypergraph& h) {
        instances.fetch_add(1, std::memory_order_relaxed);
        for (int r : r_values) {
            KneserPower kp = kneser_power(h, r);
            ChiResult chi = chromatic_number(kp.power, chi_opts);
            if (!chi.exact) {
                log.record("chromatic number unresolved on a family member");
                continue;
            }
            SigmaSearchResult alt = alt_r_q(h, r, 1, SigmaMode::exact);
            int raw = (h.vertex_count() - alt.value + r - 2) / (r - 1);
            int bound = h.edge_count() > 0 ? std::max(raw, 1) : raw;
            int cd = colorability_defect(h, r);
            checked.fetch_add(1, std::memory_order_relaxed);
            if (chi.value() < bound)
                log.record("chi(KG^" + std::to_string(r) + ") below the alternation bound, hash " +
                           std::to_string(h.canonical_hash()));
            if (h.vertex_count() - alt.value < cd)
                log.record("n - alt_r below cd_r, hash " + std::to_string(h.canonical_hash()));
        }
        return true;
    };

    parallel_for(static_cast<std::uint64_t>(threads), threads, [&](std::uint64_t tid) {
        std::uint64_t counter = 0;
        for (int nn = 1; nn <= n; ++nn) {
            enumerate_hypergraphs(nn, max_edges, [&](const Hypergraph& h) {
                if (counter++ % threads == tid) inspect(h);
                return true;
            });
        }
        for (int i = 0; i < random_count; ++i) {
            if ((counter++ % threads) != tid) continue;
            inspect(random_hypergraph(n + 1, max_edges + 2, seed, i));
        }
    });

    rep.instances = instances.load();
    rep.checked = checked.load();
    rep.failures = log.failures.load();
    rep.first_failure = log.first;
    return rep;
}

SweepReport sweep_alt_surplus_bound(int n, int max_edges, int r, int s,
                                    const std::vector<int>& c_values,
                                    const std::vector<int>& q_values, int threads) {
    SweepReport rep;
    rep.target = "alt-surplus-bound";
    std::atomic<std::uint64_t> instances{0}, checked{0};
    FailureLog log;

    parallel_for(static_cast<std::uint64_t>(threads), threads, [&](std::uint64_t tid) {
        std::uint64_t counter = 0;
        for (int nn = 1; nn <= n; ++nn) {
            enumerate_hypergraphs(nn, max_edges, [&](const Hypergraph& h) {
                if (counter++ % threads != tid) return true;
                instances.fetch_add(1, std::memory_order_relaxed);
                VertexOrdering id = VertexOrdering::identity(h.vertex_count());
                for (int c : c_values)
                    for (int q : q_values) {
                        AltSurplusBoundReport b = verify_alt_surplus_bound(h, id, r, s, c, q);
                        checked.fetch_add(1, std::memory_order_relaxed);
                        if (!b.holds)
                            log.record("surplus bound failed at hash " +
                                       std::to_string(h.canonical_hash()) + " C=" +
                                       std::to_string(c) + " q=" + std::to_string(q));
                    }
                return true;
            });
        }
    });

    rep.instances = instances.load();
    rep.checked = checked.load();
    rep.failures = log.failures.load();
    rep.first_failure = log.first;
    return rep;
}

// ---------------------------------------------------------------------------
// Lemma sweeps
// ---------------------------------------------------------------------------

namespace {

Coloring random_coloring(int items, int max_classes, std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0xabcdef1234567890ull + index * 0x9e3779b97f4a7c15ull);
    splitmix64(state);
    Coloring c;
    c.num_colors = 1 + static_cast<int>(splitmix64(state) % max_classes);
    c.values.resize(items);
    for (int& v : c.values) v = 1 + static_cast<int>(splitmix64(state) % c.num_colors);
    return c;
}

template <typename PerColoring>
void run_coloring_sweep(int items, int max_classes, const LemmaSweepOptions& opts,
                        std::atomic<std::uint64_t>& colorings, const PerColoring& per) {
    if (opts.exhaustive) {
        parallel_for(static_cast<std::uint64_t>(opts.threads), opts.threads,
                     [&](std::uint64_t tid) {
                         std::uint64_t counter = 0;
                         enumerate_canonical_colorings(items, max_classes,
                                                       [&](const Coloring& c) {
                                                           if (counter++ %
                                                                   opts.threads ==
                                                               tid) {
                                                               colorings.fetch_add(
                                                                   1, std::memory_order_relaxed);
                                                               per(c);
                                                           }
                                                           return true;
                                                       });
                     });
    } else {
        parallel_for(opts.samples, opts.threads, [&](std::uint64_t i) {
            Coloring c = random_coloring(items, max_classes, opts.seed, i);
            colorings.fetch_add(1, std::memory_order_relaxed);
            per(c);
        });
    }
}

}  // namespace

LemmaSweepReport sweep_tuple_lemma(const Hypergraph& h, const VertexOrdering& sigma, int r, int q,
                                   int d, int t, const LemmaSweepOptions& opts) {
    LemmaSweepReport rep;
    rep.target = "tuple-lemma";
    const int n = h.vertex_count();
    AltCaps alt_caps;
    alt_caps.require_positions(r, n);
    int alpha = max_alt_search(h, sigma.perm, r, q, false);
    int c_max = std::min((n - alpha - 1) / (r - 1), d - 1);
    if (n - alpha - 1 < 0) c_max = 0;
    if (c_max < 1) return rep;

    std::atomic<std::uint64_t> colorings{0}, witnesses{0}, map_checks{0}, map_failures{0};
    FailureLog log;

    std::optional<PopularMapScaffold> scaffold;
    if (is_prime(r)) scaffold.emplace(h, sigma, r, q);

    run_coloring_sweep(h.edge_count(), c_max, opts, colorings, [&](const Coloring& c) {
        try {
            if (scaffold) {
                TuckerMap map = scaffold->instantiate(c, d);
                if (opts.check_maps) {
                    map_checks.fetch_add(1, std::memory_order_relaxed);
                    TuckerCheckReport check = check_properties(map);
                    bool chain_needed =
                        static_cast<long long>(c.num_colors) * (r - 1) < n - map.alpha;
                    if (!check.equivariant || !check.monotone_low ||
                        (chain_needed && !check.chain)) {
                        map_failures.fetch_add(1, std::memory_order_relaxed);
                        log.record("map property failed");
                        return;
                    }
                    extract_tuple(map, h, sigma, c, *check.chain, q, t);
                } else {
                    auto chain = find_violating_chain(map);
                    if (!chain) throw VerificationFailure("chain missing");
                    extract_tuple(map, h, sigma, c, *chain, q, t);
                }
            } else {
                solve_tuple(h, sigma, c, r, q, d, t);
            }
            witnesses.fetch_add(1, std::memory_order_relaxed);
        } catch (const std::exception& e) {
            log.record(e.what());
        }
    });

    rep.colorings = colorings.load();
    rep.witnesses = witnesses.load();
    rep.failures = log.failures.load();
    rep.map_checks = map_checks.load();
    rep.map_failures = map_failures.load();
    rep.first_failure = log.first;
    return rep;
}

namespace {

struct SubsetFamily {
    Hypergraph base;                       // the colored hypergraph (k-subsets)
    std::vector<VertexSet> supersets;      // the (k+l)-subsets
    std::vector<std::vector<int>> inside;  // base edge indices inside each superset
    std::vector<std::vector<int>> tuples;  // disjoint r-tuples of superset ids (0-based)
};

SubsetFamily build_family(const Hypergraph& base, const std::vector<VertexSet>& supersets, int r) {
    SubsetFamily fam;
    fam.base = base;
    fam.supersets = supersets;
    for (VertexSet s : supersets) fam.inside.push_back(base.induced_edges(s));
    // r-tuples of pairwise disjoint supersets, ordered ids
    std::vector<int> cur;
    std::function<void(int, VertexSet)> extend = [&](int from, VertexSet used) {
        if (static_cast<int>(cur.size()) == r) {
            fam.tuples.push_back(cur);
            return;
        }
        for (int i = from; i < static_cast<int>(supersets.size()); ++i) {
            if ((supersets[i] & used) != 0) continue;
            cur.push_back(i);
            extend(i + 1, used | supersets[i]);
            cur.pop_back();
        }
    };
    extend(0, 0);
    return fam;
}

LemmaSweepReport sweep_family_lemma(const SubsetFamily& fam, int r, int d, std::uint64_t q, int t,
                                    const LemmaSweepOptions& opts, const std::string& target) {
    LemmaSweepReport rep;
    rep.target = target;
    if (d < 2) throw std::invalid_argument("requires d >= 2");
    int c_max = d - 1;
    std::atomic<std::uint64_t> colorings{0}, witnesses{0};
    FailureLog log;

    run_coloring_sweep(fam.base.edge_count(), c_max, opts, colorings, [&](const Coloring& c) {
        // popular color per superset, ties to the larger color
        std::vector<int> tally(c.num_colors + 1, 0);
        std::vector<int> popular(fam.supersets.size());
        for (std::size_t i = 0; i < fam.supersets.size(); ++i) {
            std::fill(tally.begin(), tally.end(), 0);
            for (int ei : fam.inside[i]) ++tally[c.values[ei]];
            int best = 1;
            for (int col = 2; col <= c.num_colors; ++col)
                if (tally[col] >= tally[best]) best = col;
            popular[i] = best;
        }
        for (const auto& tuple : fam.tuples) {
            int col = popular[tuple[0]];
            bool mono = true;
            for (int id : tuple)
                if (popular[id] != col) { mono = false; break; }
            if (!mono) continue;
            // assemble and validate the witness
            TupleWitness w;
            w.r = r;
            w.q = static_cast<int>(q);
            w.t = t;
            w.color = col;
            bool ok = true;
            for (int id : tuple) {
                std::vector<VertexSet> chosen;
                for (int ei : fam.inside[id])
                    if (c.values[ei] == col) chosen.push_back(fam.base.edge(ei));
                if (static_cast<int>(chosen.size()) < t) { ok = false; break; }
                w.parts.push_back(fam.supersets[id]);
                w.part_edges.emplace_back(chosen.end() - t, chosen.end());
            }
            if (!ok) {
                log.record("popular color below multiplicity t");
                return;
            }
            try {
                validate_witness(fam.base, c, w);
            } catch (const std::exception& e) {
                log.record(e.what());
                return;
            }
            witnesses.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        log.record("no monochromatic disjoint tuple under the popular coloring");
    });

    rep.colorings = colorings.load();
    rep.witnesses = witnesses.load();
    rep.failures = log.failures.load();
    rep.first_failure = log.first;
    return rep;
}

}  // namespace

LemmaSweepReport sweep_kneser_lemma(int n, int k, int r, int l, const LemmaSweepOptions& opts) {
    DerivedParams p = derived_params(n, k, r, l);
    Hypergraph base = complete_k_subsets(n, k);
    std::vector<VertexSet> supersets = all_k_subsets(n, k + l);
    SubsetFamily fam = build_family(base, supersets, r);
    LemmaSweepReport rep = sweep_family_lemma(fam, r, p.d, p.q, p.t, opts, "kneser-lemma");
    return rep;
}

LemmaSweepReport sweep_schrijver_lemma(int n, int k, int l, const LemmaSweepOptions& opts) {
    Hypergraph base = stable_subsets_hypergraph(n, k);
    Hypergraph stable_super = stable_subsets_hypergraph(n, k + l);
    int d = n - 2 * (k + l - 1);
    std::uint64_t q = binomial(k + l, k);
    int t = static_cast<int>((q + d - 2) / (d - 1));
    SubsetFamily fam = build_family(base, stable_super.edges(), 2);
    return sweep_family_lemma(fam, 2, d, q, t, opts, "schrijver-lemma");
}

LemmaSweepReport sweep_signed_map_lemma(int n, int k, int l, const LemmaSweepOptions& opts) {
    LemmaSweepReport rep;
    rep.target = "signed-map-lemma";
    Hypergraph base = stable_subsets_hypergraph(n, k);
    VertexOrdering id = VertexOrdering::identity(n);
    int d = n - 2 * (k + l - 1);
    if (d < 2) throw std::invalid_argument("requires d >= 2");
    std::uint64_t q64 = binomial(k + l, k);
    int q = static_cast<int>(q64);
    int t = static_cast<int>((q64 + d - 2) / (d - 1));
    int salt = salt_sigma_q(base, id, q);
    int c_max = std::min(n - salt, d - 1);
    if (c_max < 1) return rep;

    std::atomic<std::uint64_t> colorings{0}, witnesses{0}, map_checks{0}, map_failures{0},
        immediate{0};
    FailureLog log;

    run_coloring_sweep(base.edge_count(), c_max, opts, colorings, [&](const Coloring& c) {
        try {
            auto built = build_signed_popular_map(base, id, c, q, d, t);
            if (std::holds_alternative<TupleWitness>(built)) {
                immediate.fetch_add(1, std::memory_order_relaxed);
                validate_witness(base, c, std::get<TupleWitness>(built));
            } else {
                map_checks.fetch_add(1, std::memory_order_relaxed);
                const TuckerMap& map = std::get<TuckerMap>(built);
                TuckerCheckReport check = check_properties(map);
                bool chain_needed = !conclusion_holds(map);
                if (!check.equivariant || !check.monotone_low || (chain_needed && !check.chain)) {
                    map_failures.fetch_add(1, std::memory_order_relaxed);
                    log.record("signed map property failed");
                    return;
                }
            }
            TupleWitness w = solve_pair_signed(base, id, c, q, d, t);
            validate_witness(base, c, w);
            witnesses.fetch_add(1, std::memory_order_relaxed);
        } catch (const std::exception& e) {
            log.record(e.what());
        }
    });

    rep.colorings = colorings.load();
    rep.witnesses = witnesses.load();
    rep.failures = log.failures.load();
    rep.map_checks = map_checks.load();
    rep.map_failures = map_failures.load();
    rep.immediate_witnesses = immediate.load();
    rep.first_failure = log.first;
    return rep;
}

namespace {

// naive search over families of r pairwise disjoint vertex subsets with at
// least one induced edge whose largest induced edges share one color
bool direct_tuple_exists(const Hypergraph& h, const Coloring& c, int r) {
    std::vector<VertexSet> parts;
    std::function<bool(int, VertexSet, int)> extend = [&](int idx, VertexSet used,
                                                          int color) -> bool {
        if (idx == r) return true;
        int min_allowed = idx == 0 ? 1 : std::countr_zero(parts.back()) + 2;
        std::vector<int> verts;
        for (int v : set_elements(h.vertex_set() & ~used))
            if (v >= min_allowed) verts.push_back(v);
        std::uint32_t count = static_cast<std::uint32_t>(verts.size());
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
            VertexSet part = 0;
            for (std::uint32_t b = 0; b < count; ++b)
                if ((mask >> b) & 1) part |= vbit(verts[b]);
            std::vector<int> induced = h.induced_edges(part);
            if (induced.empty()) continue;
            int top_color = c.values[induced.back()];
            if (idx > 0 && top_color != color) continue;
            parts.push_back(part);
            if (extend(idx + 1, used | part, top_color)) return true;
            parts.pop_back();
        }
        return false;
    };
    return extend(0, 0, 0);
}

}  // namespace

SweepReport sweep_reduction_agreement(const Hypergraph& h, int r, int d,
                                      const LemmaSweepOptions& opts) {
    SweepReport rep;
    rep.target = "reduction-agreement";
    if (is_prime(r)) throw std::invalid_argument("reduction sweep expects composite r");
    const int n = h.vertex_count();
    AltCaps alt_caps;
    alt_caps.require_positions(r, n);
    VertexOrdering id = VertexOrdering::identity(n);
    int alpha = max_alt_search(h, id.perm, r, 1, false);
    int c_max = n - alpha - 1 >= 0 ? std::min((n - alpha - 1) / (r - 1), d - 1) : 0;
    if (c_max < 1) return rep;

    std::atomic<std::uint64_t> colorings{0}, checked{0};
    FailureLog log;
    run_coloring_sweep(h.edge_count(), c_max, opts, colorings, [&](const Coloring& c) {
        checked.fetch_add(1, std::memory_order_relaxed);
        bool reduced_ok = false;
        try {
            TupleWitness w = solve_tuple(h, id, c, r, 1, d, 1);
            validate_witness(h, c, w);
            reduced_ok = true;
        } catch (const std::exception& e) {
            log.record(std::string("composite construction failed: ") + e.what());
        }
        bool direct_ok = direct_tuple_exists(h, c, r);
        if (reduced_ok && !direct_ok) log.record("direct search missed a constructed witness");
        if (!reduced_ok && direct_ok) log.record("construction failed where direct search succeeds");
    });

    rep.instances = colorings.load();
    rep.checked = checked.load();
    rep.failures = log.failures.load();
    rep.first_failure = log.first;
    return rep;
}

}  // namespace kneserlab
