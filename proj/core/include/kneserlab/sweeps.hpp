#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kneserlab/chromatic.hpp"
#include "kneserlab/tucker.hpp"

namespace kneserlab {

/// Every hypergraph on exactly n vertices with at most max_edges edges (edge
/// sets are subsets of the 2^n - 1 nonempty masks).  The callback returns
/// false to abort.
void enumerate_hypergraphs(int n, int max_edges,
                           const std::function<bool(const Hypergraph&)>& fn);

/// Seeded random hypergraph: edge count in [1, max_edges], distinct edges.
Hypergraph random_hypergraph(int n, int max_edges, std::uint64_t seed, std::uint64_t index);

/// Enumerate colorings of `items` elements with at most max_classes classes,
/// one representative per color permutation (restricted growth strings).
/// Returns false if the callback aborted.
bool enumerate_canonical_colorings(int items, int max_classes,
                                   const std::function<bool(const Coloring&)>& fn);

std::uint64_t count_canonical_colorings(int items, int max_classes);

struct SweepReport {
    std::string target;
    std::uint64_t instances = 0;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
};

/// Bound ordering on a hypergraph family: chi(KG^r(H)) >= the exact
/// alternation bound, and n - alt_r(H) >= cd_r(H).
SweepReport sweep_bound_ordering(int n, int max_edges, const std::vector<int>& r_values,
                                 int random_count, std::uint64_t seed, int threads,
                                 const ChiOptions& chi_opts);

/// alt_r(T, sigma, 1) <= r(s-1)C + alt_{rs}(H, sigma, q) over the same family.
SweepReport sweep_alt_surplus_bound(int n, int max_edges, int r, int s,
                                    const std::vector<int>& c_values,
                                    const std::vector<int>& q_values, int threads);

struct LemmaSweepOptions {
    bool exhaustive = true;
    std::uint64_t samples = 0;  // used when not exhaustive
    std::uint64_t seed = 1;
    bool check_maps = false;  // also validate the level maps per coloring
    int threads = 1;
};

struct LemmaSweepReport {
    std::string target;
    std::uint64_t colorings = 0;
    std::uint64_t witnesses = 0;
    std::uint64_t failures = 0;
    std::uint64_t map_checks = 0;
    std::uint64_t map_failures = 0;
    std::uint64_t immediate_witnesses = 0;
    std::string first_failure;
};

/// Tuple existence over all (or sampled) colorings of E(H) with every
/// admissible number of colors: C(r-1) < n - alt_r(H, sigma, q) and C < d.
LemmaSweepReport sweep_tuple_lemma(const Hypergraph& h, const VertexOrdering& sigma, int r, int q,
                                   int d, int t, const LemmaSweepOptions& opts);

/// Popular-color route on the k-subset instance: colorings of the k-subsets
/// of [n] with C < d; witnesses are r disjoint (k+l)-subsets carrying t
/// same-colored k-subsets each.
LemmaSweepReport sweep_kneser_lemma(int n, int k, int r, int l, const LemmaSweepOptions& opts);

/// Stable variant (pairs): colorings of the stable k-subsets with C < d.
LemmaSweepReport sweep_schrijver_lemma(int n, int k, int l, const LemmaSweepOptions& opts);

/// Two-signed map route over the stable instance (map checks per coloring).
LemmaSweepReport sweep_signed_map_lemma(int n, int k, int l, const LemmaSweepOptions& opts);

/// Composite construction versus direct search: for q = t = 1 both must agree
/// on witness existence for every admissible coloring.
SweepReport sweep_reduction_agreement(const Hypergraph& h, int r, int d,
                                      const LemmaSweepOptions& opts);

}  // namespace kneserlab
