#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kneserlab/hypergraph.hpp"

namespace kneserlab {

/// An element of (Z_r u {0})^n.  Entry 0 is unset; entries 1..r encode the r
/// cyclic symbols.  Part i is the set of positions carrying symbol i.
struct SignedVector {
    int alphabet = 2;
    std::vector<std::uint8_t> entries;

    int size() const { return static_cast<int>(entries.size()); }
    std::uint64_t part(int symbol) const;
    VertexSet support() const;
};

/// Length of the longest alternating subsequence: nonzero entries, consecutive
/// ones distinct.  Single left-to-right pass.
int alt_value(std::span<const std::uint8_t> entries);
inline int alt_value(const SignedVector& x) { return alt_value(std::span(x.entries)); }

struct AltCaps {
    // (alphabet+1)^positions is kept at or below (r+1)^max for r = 2,
    // max_positions_base; larger alphabets scale down to a comparable node count.
    int max_positions_base = 20;
    int max_exact_sigma_n = 8;

    int max_positions(int alphabet) const;
    void require_positions(int alphabet, int positions) const;
};

/// alt_r(H, sigma, q): maximum alt(X) over X in (Z_r u {0})^n whose every part
/// induces at most q-1 edges.  Exhaustive with monotone-feasibility and
/// remaining-length pruning.
int alt_r_sigma_q(const Hypergraph& h, const VertexOrdering& sigma, int r, int q,
                  const AltCaps& caps = {});

/// salt(H, sigma, q): two-signed variant; only the smaller part is constrained
/// (at least one of the two parts induces at most q-1 edges).
int salt_sigma_q(const Hypergraph& h, const VertexOrdering& sigma, int q,
                 const AltCaps& caps = {});

enum class SigmaMode { exact, heuristic };

struct SigmaSearchResult {
    int value = 0;
    VertexOrdering sigma;
    bool exact = false;
};

/// alt_r(H, q) = min over orderings.  Exact mode scans all n! orderings
/// quotiented by reversal; heuristic mode runs seeded steepest-descent over
/// adjacent transpositions and returns an upper bound with its witness.
SigmaSearchResult alt_r_q(const Hypergraph& h, int r, int q, SigmaMode mode,
                          const AltCaps& caps = {}, std::uint64_t seed = 1,
                          int restarts = 50);

SigmaSearchResult salt_q(const Hypergraph& h, int q, SigmaMode mode,
                         const AltCaps& caps = {}, std::uint64_t seed = 1,
                         int restarts = 50);

/// Generic engine entry: position j (0-based) of the signed vector stands for
/// vertex `position_vertex[j]`.  Used for restrictions sigma_M.
int max_alt_search(const Hypergraph& h, std::span<const int> position_vertex, int alphabet,
                   int q, bool min_part_constraint, int stop_at = -1);

struct BuildTCaps {
    int max_n = 14;
};

/// Hypergraph on V(H) whose edges are the nonempty M with
/// |M| - alt_s(H[M], sigma_M, q) > (s-1)*C.
Hypergraph alt_surplus_hypergraph(const Hypergraph& h, int c_colors, int s,
                                  const VertexOrdering& sigma, int q,
                                  const BuildTCaps& caps = {}, const AltCaps& alt_caps = {});

struct AltSurplusBoundReport {
    int lhs = 0;
    int rhs = 0;
    bool holds = false;
};

/// Checks alt_r(T, sigma, 1) <= r(s-1)C + alt_{rs}(H, sigma, q) exactly, where
/// T is the surplus hypergraph above.
AltSurplusBoundReport verify_alt_surplus_bound(const Hypergraph& h, const VertexOrdering& sigma,
                                               int r, int s, int c_colors, int q,
                                               const BuildTCaps& caps = {},
                                               const AltCaps& alt_caps = {});

}  // namespace kneserlab
