#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "kneserlab/alternation.hpp"
#include "kneserlab/hypergraph.hpp"

namespace kneserlab {

/// An explicit equivariant level map lambda: (Z_p u {0})^n \ {0} -> Z_p x [m].
/// Signed vectors are addressed by their base-(p+1) code; symbol i in 1..p is
/// digit i, an unset position is digit 0.
struct TuckerMap {
    int n = 0;
    int p = 2;
    int m = 1;
    int alpha = 0;
    std::vector<std::pair<std::uint8_t, std::uint16_t>> table;  // index 0 unused

    std::uint64_t domain_size() const { return table.size(); }  // (p+1)^n
    int lambda1(std::uint64_t code) const { return table[code].first; }
    int lambda2(std::uint64_t code) const { return table[code].second; }

    static std::uint64_t code_of(int p, std::span<const std::uint8_t> entries);
    static std::vector<std::uint8_t> decode(int p, int n, std::uint64_t code);
};

bool is_prime(int p);

struct TuckerCaps {
    std::uint64_t max_domain = std::uint64_t{1} << 24;  // (p+1)^n table entries
    int max_p = 31;
};

/// A containment chain X_1 <= ... <= X_p at one level >= alpha+1 whose
/// lambda_1 values are pairwise distinct (a witness against property (iii)).
struct ZpChain {
    std::vector<std::uint64_t> codes;
    int level = 0;
};

struct TuckerCheckReport {
    bool equivariant = false;
    bool monotone_low = false;
    std::optional<ZpChain> chain;
};

/// Checks equivariance (i), the low-level containment property (ii), and
/// exhaustively searches for a chain violating (iii).
TuckerCheckReport check_properties(const TuckerMap& map, const TuckerCaps& caps = {});

/// alpha + (m - alpha)(p - 1) >= n.
bool conclusion_holds(const TuckerMap& map);

/// Searches only for a (iii)-violating chain.
std::optional<ZpChain> find_violating_chain(const TuckerMap& map);

/// The r-tuple produced by the lemma machinery: pairwise disjoint vertex sets,
/// each holding t same-colored edges drawn from the last q induced edges.
struct TupleWitness {
    int r = 0;
    int q = 1;
    int t = 1;
    int color = 0;
    std::vector<VertexSet> parts;
    std::vector<std::vector<VertexSet>> part_edges;
};

/// Validates every structural invariant of a witness against the hypergraph
/// and the edge coloring.  Throws VerificationFailure with a description.
void validate_witness(const Hypergraph& h, const Coloring& edge_colors, const TupleWitness& w);

/// Builds the popular-color level map for prime p: below level alpha the map
/// records the first nonzero symbol and the alternation value; above it the
/// largest part holding at least q induced edges contributes its most popular
/// color among the last q induced edges (ties to the larger color).
TuckerMap build_popular_color_map(const Hypergraph& h, const VertexOrdering& sigma,
                                  const Coloring& edge_colors, int p, int q, int d, int t,
                                  const TuckerCaps& caps = {}, const AltCaps& alt_caps = {});

/// Extracts the tuple witness encoded by a violating chain of the popular
/// color map.  Fails loudly if any bookkeeping invariant does not hold.
TupleWitness extract_tuple(const TuckerMap& map, const Hypergraph& h, const VertexOrdering& sigma,
                           const Coloring& edge_colors, const ZpChain& chain, int q, int t);

/// End-to-end witness construction: map route for prime r, reduction through
/// the surplus hypergraph for composite r.
TupleWitness solve_tuple(const Hypergraph& h, const VertexOrdering& sigma,
                         const Coloring& edge_colors, int r, int q, int d, int t,
                         const TuckerCaps& caps = {}, const AltCaps& alt_caps = {});

/// The composite-r construction: r = r1*r2 with the r2 case solved inside each
/// surplus edge and the r1 case solved on the surplus hypergraph itself.
TupleWitness reduce_composite(const Hypergraph& h, const VertexOrdering& sigma,
                              const Coloring& edge_colors, int r1, int r2, int q, int d, int t,
                              const TuckerCaps& caps = {}, const AltCaps& alt_caps = {});

/// Two-signed (p = 2) variant keyed on salt: either an immediate witness (the
/// two sides of some high-alternation vector share a popular color) or the
/// level map with m = salt + C - 1.
std::variant<TupleWitness, TuckerMap> build_signed_popular_map(
    const Hypergraph& h, const VertexOrdering& sigma, const Coloring& edge_colors, int q, int d,
    int t, const TuckerCaps& caps = {}, const AltCaps& alt_caps = {});

/// Coloring-independent scaffold for instantiating popular-color maps across
/// many colorings of one instance (the per-code part selection and last-q
/// edge lists do not depend on the coloring).
class PopularMapScaffold {
public:
    PopularMapScaffold(const Hypergraph& h, const VertexOrdering& sigma, int p, int q,
                       const TuckerCaps& caps = {}, const AltCaps& alt_caps = {});

    int alpha() const { return alpha_; }
    int n() const { return n_; }
    int p() const { return p_; }

    /// Requires C(p-1) < n - alpha and C < d; C is edge_colors.num_colors.
    TuckerMap instantiate(const Coloring& edge_colors, int d) const;

private:
    int n_ = 0, p_ = 2, q_ = 1, alpha_ = 0;
    std::vector<std::int8_t> high_;       // per code: 1 above level alpha
    std::vector<std::uint8_t> lam1_;      // first nonzero symbol / selected part
    std::vector<std::uint16_t> low_lam2_; // alternation value for low codes
    std::vector<std::uint32_t> edge_off_; // per code: offset into last_edges_
    std::vector<std::int32_t> last_edges_;
};

/// End-to-end pair witness through the two-signed map.
TupleWitness solve_pair_signed(const Hypergraph& h, const VertexOrdering& sigma,
                               const Coloring& edge_colors, int q, int d, int t,
                               const TuckerCaps& caps = {}, const AltCaps& alt_caps = {});

}  // namespace kneserlab
