#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneserlab/chromatic.hpp"
#include "kneserlab/kneser.hpp"

namespace kneserlab {

/// Philox 4x32-10 counter-based generator.  Stateless: every draw is a pure
/// function of (key, counter), so parallel trial execution cannot perturb the
/// stream.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(std::uint64_t key,
                                              const std::array<std::uint32_t, 4>& counter);
};

/// Uniform 32-bit draw keyed on (seed; trial, index).
std::uint32_t rng_u32(std::uint64_t seed, std::uint64_t trial, std::uint64_t index);

struct RandomModelParams {
    double rho = 1.0;
    std::uint64_t seed = 1;
    int trials = 1;
};

/// Spanning random subhypergraph: edge i survives iff its keyed draw falls
/// below rho (fixed-point threshold, reproducible bit for bit).
PowerHypergraph sample_subhypergraph(const PowerHypergraph& g, double rho, std::uint64_t seed,
                                     std::uint64_t trial);

struct TrialRow {
    int trial = 0;
    int retained_edges = 0;
    int chi_lo = 0;
    int chi_hi = 0;
    bool chi_exact = false;
    int ge_d = 0;  // 1 / 0, -1 when unresolved
};

struct TailEstimate {
    int trials = 0;
    int resolved = 0;
    int count_ge = 0;
    int unknown = 0;
    double estimate = 0.0;
    double stderr_value = 0.0;
    std::vector<TrialRow> rows;
};

/// Monte Carlo estimate of Pr(chi(sample) >= d).  Unresolved trials are
/// reported, never dropped.
TailEstimate mc_tail(const PowerHypergraph& g, const RandomModelParams& params, int d,
                     const ChiOptions& chi_opts = {}, int threads = 1);

struct LogBound {
    double log_value = 0.0;
    std::optional<double> value;  // e^log_value when log_value <= 0
};

/// log bound -rho t^r + n ln(r+1) + r t (1 + ln(d-1)).
LogBound event_a_bound_general(int n, int r, double t, int d, double rho);

/// log bound -rho t^r + r(k+l)(ln n + 1) + r t (1 + ln(d-1)).
LogBound event_a_bound_kneser(int n, int k, int l, int r, double t, int d, double rho);

struct DerivedParams {
    int n = 0, k = 0, r = 0, l = 0;
    int d = 0;
    std::uint64_t q = 0;
    int t = 0;
};

/// d = ceil((n - r(k+l-1))/(r-1)), q = C(k+l,k), t = ceil(q/(d-1)); validates
/// the bracket (d-1)(t-1)+1 <= q <= (d-1)t and rejects d < 2.
DerivedParams derived_params(int n, int k, int r, int l);

/// Parameter function of the grid variable: c * n^a * (ln n)^b.
struct ParamFn {
    double c = 0.0;
    double a = 0.0;
    double b = 0.0;

    double eval(double n) const;
    static ParamFn constant(double v) { return {v, 0.0, 0.0}; }
};

enum class MarginCondition { I, II, SG };

struct MarginRow {
    double n = 0;
    long long k = 0, l = 0, r = 0;
    double rho = 0;
    long long d = 0;
    double q = 0;
    double t = 0;
    double margin = 0;
    double ratio_sgcor = 0;  // k / (n^{r/(2r-1)} (ln n)^{1/(2r-1)})
    double ratio_corii = 0;  // (rn - r^2 k) / n^{(r-1)/r}
    bool d_ok = true;
    int trend = 0;  // sign of margin - previous margin; 0 on the first row
};

/// Finite-n margin diagnostics for the almost-sure conditions.  This is a
/// numeric trend report on a grid, not a decision procedure for a limit.
std::vector<MarginRow> margin_sweep(MarginCondition cond, const ParamFn& k_fn, const ParamFn& l_fn,
                                    const ParamFn& r_fn, const ParamFn& rho_fn,
                                    const std::vector<double>& n_grid);

struct EventARow {
    int trial = 0;
    int retained_edges = 0;
    bool event_a = false;
    bool event_e = false;
    int chi_lo = 0, chi_hi = 0;
    bool chi_exact = false;
};

struct EventAEstimate {
    int trials = 0;
    int count_a = 0;
    int count_e = 0;
    int containment_failures = 0;  // trials with E and not A (must stay 0)
    int unresolved = 0;
    double estimate = 0.0;
    double stderr_value = 0.0;
    LogBound bound;
    int tuple_count = 0;
    std::vector<EventARow> rows;
};

struct EventACaps {
    std::uint64_t max_tuples = 200'000;
    std::uint64_t max_choices = 4'000'000;  // C(q,t)^r per tuple
};

/// Per-trial evaluation of the union event A (some admissible tuple has all
/// its cross edges removed) against its analytic bound, plus the per-trial
/// containment check E implies A.
EventAEstimate mc_event_a(const KneserPower& k, const RandomModelParams& params, int q, int t,
                          int d, const VertexOrdering& sigma, const ChiOptions& chi_opts = {},
                          int threads = 1, const EventACaps& caps = {},
                          const AltCaps& alt_caps = {});

/// Fixed-header CSV renderings used by the command line tool; identical input
/// rows produce identical bytes regardless of thread count.
std::string tail_csv(const TailEstimate& est);
std::string event_a_csv(const EventAEstimate& est);
std::string margin_csv(const std::vector<MarginRow>& rows);

}  // namespace kneserlab
