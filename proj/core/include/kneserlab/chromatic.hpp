#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "kneserlab/alternation.hpp"
#include "kneserlab/hypergraph.hpp"
#include "kneserlab/kneser.hpp"

namespace kneserlab {

struct ChiOptions {
    int max_vertices = 64;
    std::int64_t budget_ms = 10'000;
};

/// Exact value when exact; otherwise the tightest proven interval.  A
/// hypergraph with a singleton edge admits no proper coloring at all and is
/// reported infeasible.
struct ChiResult {
    int lo = 1;
    int hi = 0;
    bool exact = false;
    bool infeasible = false;

    int value() const {
        if (infeasible || !exact) throw std::logic_error("chromatic number not resolved");
        return lo;
    }
};

ChiResult chromatic_number(const PowerHypergraph& g, const ChiOptions& opts = {});
ChiResult chromatic_number(const Hypergraph& h, const ChiOptions& opts = {});

/// ceil((n - r(k-1)) / (r-1)) for n >= rk.
int afl_formula(int n, int k, int r);

struct BoundReport {
    std::string name;
    int value = 0;  // clamped to >= 1 when the source hypergraph has an edge
    int raw = 0;    // the bare expression
    bool exact = true;
    VertexOrdering sigma;  // certificate ordering when one was used
    std::map<std::string, long long> params;
};

/// ceil(cd_r(H) / (r-1)).
BoundReport dolnikov_kriz_bound(const Hypergraph& h, int r);

/// ceil((n - alt_r(H, q=1)) / (r-1)), with alt minimized exactly over
/// orderings or bounded via a heuristic ordering (still a valid bound for
/// that ordering).
BoundReport alt_bound(const Hypergraph& h, int r, SigmaMode mode, const AltCaps& caps = {},
                      std::uint64_t seed = 1);

/// n - salt(H, q=1) + 1 for the pair case.
BoundReport salt_bound(const Hypergraph& h, SigmaMode mode, const AltCaps& caps = {},
                       std::uint64_t seed = 1);

/// min{ceil((n - alt_r(H, sigma, q)) / (r-1)), d}: a floor on the number of
/// colors in any coloring of KG^r(H) without a monochromatic complete
/// r-partite t-per-part subhypergraph.  Requires q >= (d-1)(t-1)+1.
BoundReport ktt_free_bound(const Hypergraph& h, int r, const VertexOrdering& sigma, int q, int t,
                           int d, const AltCaps& caps = {});

struct KttChiOptions {
    int max_vertices = 12;
    std::int64_t budget_ms = 30'000;
};

/// Minimum number of colors admitting a coloring of V(K) with no
/// monochromatic complete r-partite t-per-part subhypergraph.
ChiResult ktt_free_chromatic_exact(const KneserPower& k, int t, const KttChiOptions& opts = {});

}  // namespace kneserlab
