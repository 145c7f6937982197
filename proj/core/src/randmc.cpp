#include "kneserlab/randmc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "kneserlab/parallel.hpp"

namespace kneserlab {

std::array<std::uint32_t, 4> Philox4x32::block(std::uint64_t key,
                                               const std::array<std::uint32_t, 4>& counter) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    std::array<std::uint32_t, 4> x = counter;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x[0];
        std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x[2];
        std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return x;
}

std::uint32_t rng_u32(std::uint64_t seed, std::uint64_t trial, std::uint64_t index) {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Philox4x32::block(seed, ctr)[0];
}

namespace {

std::uint64_t keep_threshold(double rho) {
    if (!(rho > 0.0) || rho > 1.0) throw std::invalid_argument("rho must lie in (0, 1]");
    return static_cast<std::uint64_t>(std::llround(rho * 4294967296.0));
}

bool edge_kept(std::uint64_t threshold, std::uint64_t seed, std::uint64_t trial,
               std::uint64_t index) {
    return static_cast<std::uint64_t>(rng_u32(seed, trial, index)) < threshold;
}

}  // namespace

PowerHypergraph sample_subhypergraph(const PowerHypergraph& g, double rho, std::uint64_t seed,
                                     std::uint64_t trial) {
    std::uint64_t thr = keep_threshold(rho);
    PowerHypergraph out;
    out.num_vertices = g.num_vertices;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (edge_kept(thr, seed, trial, i)) out.edges.push_back(g.edges[i]);
    return out;
}

TailEstimate mc_tail(const PowerHypergraph& g, const RandomModelParams& params, int d,
                     const ChiOptions& chi_opts, int threads) {
    if (params.trials < 1) throw std::invalid_argument("trials must be >= 1");
    keep_threshold(params.rho);  // validates rho
    TailEstimate est;
    est.trials = params.trials;
    est.rows.resize(params.trials);
    parallel_for(static_cast<std::uint64_t>(params.trials), threads, [&](std::uint64_t trial) {
        PowerHypergraph sample = sample_subhypergraph(g, params.rho, params.seed, trial);
        ChiResult chi = chromatic_number(sample, chi_opts);
        TrialRow row;
        row.trial = static_cast<int>(trial);
        row.retained_edges = sample.edge_count();
        row.chi_lo = chi.lo;
        row.chi_hi = chi.hi;
        row.chi_exact = chi.exact;
        if (chi.lo >= d)
            row.ge_d = 1;
        else if (chi.hi < d)
            row.ge_d = 0;
        else
            row.ge_d = -1;
        est.rows[trial] = row;
    });
    for (const TrialRow& row : est.rows) {
        if (row.ge_d < 0)
            ++est.unknown;
        else {
            ++est.resolved;
            est.count_ge += row.ge_d;
        }
    }
    if (est.resolved > 0) {
        double p = static_cast<double>(est.count_ge) / est.resolved;
        est.estimate = p;
        est.stderr_value = std::sqrt(p * (1.0 - p) / est.resolved);
    }
    return est;
}

LogBound event_a_bound_general(int n, int r, double t, int d, double rho) {
    if (d < 2 || r < 2 || t < 1) throw std::invalid_argument("requires d >= 2, r >= 2, t >= 1");
    LogBound b;
    b.log_value = -rho * std::pow(t, static_cast<double>(r)) + n * std::log(r + 1.0) +
                  r * t * (1.0 + std::log(static_cast<double>(d - 1)));
    if (b.log_value <= 0.0) b.value = std::exp(b.log_value);
    return b;
}

LogBound event_a_bound_kneser(int n, int k, int l, int r, double t, int d, double rho) {
    if (d < 2 || r < 2 || t < 1) throw std::invalid_argument("requires d >= 2, r >= 2, t >= 1");
    LogBound b;
    b.log_value = -rho * std::pow(t, static_cast<double>(r)) +
                  r * (k + l) * (std::log(static_cast<double>(n)) + 1.0) +
                  r * t * (1.0 + std::log(static_cast<double>(d - 1)));
    if (b.log_value <= 0.0) b.value = std::exp(b.log_value);
    return b;
}

DerivedParams derived_params(int n, int k, int r, int l) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (k < 1 || l < 0) throw std::invalid_argument("requires k >= 1, l >= 0");
    DerivedParams p;
    p.n = n;
    p.k = k;
    p.r = r;
    p.l = l;
    int num = n - r * (k + l - 1);
    p.d = num > 0 ? (num + r - 2) / (r - 1) : 0;
    if (p.d < 2) throw std::invalid_argument("derived d must be >= 2");
    p.q = binomial(k + l, k);
    p.t = static_cast<int>((p.q + p.d - 2) / (p.d - 1));
    std::uint64_t lo = static_cast<std::uint64_t>(p.d - 1) * (p.t - 1) + 1;
    std::uint64_t hi = static_cast<std::uint64_t>(p.d - 1) * p.t;
    if (p.q < lo || p.q > hi)
        throw VerificationFailure("derived parameter bracket (d-1)(t-1)+1 <= q <= (d-1)t failed");
    return p;
}

double ParamFn::eval(double n) const {
    return c * std::pow(n, a) * std::pow(std::log(n), b);
}

std::vector<MarginRow> margin_sweep(MarginCondition cond, const ParamFn& k_fn, const ParamFn& l_fn,
                                    const ParamFn& r_fn, const ParamFn& rho_fn,
                                    const std::vector<double>& n_grid) {
    std::vector<MarginRow> rows;
    double prev_margin = 0.0;
    bool have_prev = false;
    for (double n : n_grid) {
        MarginRow row;
        row.n = n;
        row.k = static_cast<long long>(std::floor(k_fn.eval(n)));
        row.l = static_cast<long long>(std::floor(l_fn.eval(n)));
        row.r = cond == MarginCondition::SG ? 2 : static_cast<long long>(std::floor(r_fn.eval(n)));
        row.rho = rho_fn.eval(n);
        if (row.k < 1 || row.r < 2 || row.l < 0 || !(row.rho > 0.0) || row.rho > 1.0) {
            row.d_ok = false;
            rows.push_back(row);
            continue;
        }
        long long k = row.k, l = row.l, r = row.r;
        if (cond == MarginCondition::SG) {
            row.d = static_cast<long long>(n) - 2 * k - 2 * l + 2;
        } else {
            double num = n - static_cast<double>(r) * (k + l - 1);
            row.d = static_cast<long long>(std::ceil(num / (r - 1)));
        }
        if (row.d < 2) {
            row.d_ok = false;
            rows.push_back(row);
            continue;
        }
        // q = C(k+l, k) through lgamma: exact enough for trend diagnostics
        double lq = std::lgamma(static_cast<double>(k + l) + 1.0) -
                    std::lgamma(static_cast<double>(k) + 1.0) -
                    std::lgamma(static_cast<double>(l) + 1.0);
        row.q = std::exp(lq);
        row.t = std::ceil(row.q / static_cast<double>(row.d - 1));
        if (row.t < 1) row.t = 1;

        double ln_n = std::log(n);
        double tail = row.rho * std::pow(row.t, static_cast<double>(r));
        double dterm = static_cast<double>(r) * row.t * (1.0 + std::log(static_cast<double>(row.d - 1)));
        switch (cond) {
            case MarginCondition::I:
                row.margin = n * std::log(static_cast<double>(r) + 1.0) + dterm - tail;
                break;
            case MarginCondition::II:
            case MarginCondition::SG:
                row.margin = static_cast<double>(r) * (k + l) * (ln_n + 1.0) + dterm - tail;
                break;
        }
        row.ratio_sgcor =
            k / (std::pow(n, static_cast<double>(r) / (2.0 * r - 1.0)) *
                 std::pow(ln_n, 1.0 / (2.0 * r - 1.0)));
        row.ratio_corii = (static_cast<double>(r) * n - static_cast<double>(r) * r * k) /
                          std::pow(n, (static_cast<double>(r) - 1.0) / r);
        if (have_prev) {
            if (row.margin < prev_margin)
                row.trend = -1;
            else if (row.margin > prev_margin)
                row.trend = 1;
        }
        prev_margin = row.margin;
        have_prev = true;
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Event A harness
// ---------------------------------------------------------------------------

namespace {

struct Tuple {
    std::vector<std::vector<int>> last_q;  // per part: edge indices into base
};

// Families of r pairwise disjoint vertex subsets, each inducing >= q edges,
// unordered (first parts get the smaller minimum vertices).
struct TupleEnum {
    const Hypergraph& h;
    int r, q;
    std::uint64_t cap;
    std::vector<Tuple> out;
    std::vector<VertexSet> parts;

    void run() { extend(0, 0); }

    void extend(std::size_t idx, VertexSet used) {
        if (idx == static_cast<std::size_t>(r)) {
            Tuple tup;
            for (VertexSet part : parts) {
                std::vector<int> induced = h.induced_edges(part);
                tup.last_q.emplace_back(induced.end() - q, induced.end());
            }
            if (out.size() >= cap) throw CapExceeded("event-A tuple enumeration cap");
            out.push_back(std::move(tup));
            return;
        }
        int min_allowed = 1;
        if (idx > 0) min_allowed = std::countr_zero(parts[idx - 1]) + 2;
        VertexSet free = h.vertex_set() & ~used;
        // subsets of `free` whose minimum element is >= min_allowed
        std::vector<int> verts;
        for (int v : set_elements(free))
            if (v >= min_allowed) verts.push_back(v);
        std::uint32_t count = static_cast<std::uint32_t>(verts.size());
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
            VertexSet part = 0;
            for (std::uint32_t b = 0; b < count; ++b)
                if ((mask >> b) & 1) part |= vbit(verts[b]);
            // canonical: parts ordered by minimum element
            if (idx > 0 && std::countr_zero(part) <= std::countr_zero(parts[idx - 1])) continue;
            if (h.induced_edge_count(part) < q) continue;
            parts.push_back(part);
            extend(idx + 1, used | part);
            parts.pop_back();
        }
    }
};

std::uint64_t pack_edge_key(const std::vector<int>& power_edge) {
    // power-vertex ids fit 16 bits each for r <= 4
    std::uint64_t key = 0;
    for (int v : power_edge) key = (key << 16) | static_cast<std::uint64_t>(v);
    return key;
}

struct EventAEvaluator {
    const KneserPower& k;
    std::vector<Tuple> tuples;
    std::uint64_t max_choices;

    // present: sampled power edges keyed by packed sorted vertex ids
    bool event_happens(const std::unordered_set<std::uint64_t>& present) const {
        for (const Tuple& tup : tuples)
            if (tuple_event(tup, present)) return true;
        return false;
    }

    bool tuple_event(const Tuple& tup, const std::unordered_set<std::uint64_t>& present) const {
        std::vector<int> chosen;
        return choose_part(tup, 0, chosen, present);
    }

    // pick V_i as a t-subset of last_q[i]; leaf checks all cross tuples absent
    bool choose_part(const Tuple& tup, std::size_t idx, std::vector<int>& chosen,
                     const std::unordered_set<std::uint64_t>& present) const {
        int t = t_;
        if (idx == tup.last_q.size()) return cross_all_absent(tup, chosen, present);
        int q = static_cast<int>(tup.last_q[idx].size());
        std::vector<int> pick;
        return choose_members(tup, idx, 0, q, t, pick, chosen, present);
    }

    bool choose_members(const Tuple& tup, std::size_t idx, int from, int q, int t,
                        std::vector<int>& pick, std::vector<int>& chosen,
                        const std::unordered_set<std::uint64_t>& present) const {
        if (static_cast<int>(pick.size()) == t) {
            std::size_t before = chosen.size();
            for (int i : pick) chosen.push_back(tup.last_q[idx][i]);
            bool ok = choose_part(tup, idx + 1, chosen, present);
            chosen.resize(before);
            return ok;
        }
        for (int i = from; i <= q - (t - static_cast<int>(pick.size())); ++i) {
            pick.push_back(i);
            if (choose_members(tup, idx, i + 1, q, t, pick, chosen, present)) return true;
            pick.pop_back();
        }
        return false;
    }

    bool cross_all_absent(const Tuple& tup, const std::vector<int>& chosen,
                          const std::unordered_set<std::uint64_t>& present) const {
        // chosen holds r blocks of t base-edge indices (0-based); cross tuples
        // are one pick per block
        int r = static_cast<int>(tup.last_q.size());
        std::vector<int> cursor(r, 0);
        while (true) {
            std::vector<int> edge;
            for (int j = 0; j < r; ++j) edge.push_back(chosen[j * t_ + cursor[j]] + 1);
            std::sort(edge.begin(), edge.end());
            if (present.contains(pack_edge_key(edge))) return false;
            int j = r - 1;
            while (j >= 0 && cursor[j] == t_ - 1) cursor[j--] = 0;
            if (j < 0) break;
            ++cursor[j];
        }
        return true;
    }

    int t_ = 1;
};

}  // namespace

EventAEstimate mc_event_a(const KneserPower& k, const RandomModelParams& params, int q, int t,
                          int d, const VertexOrdering& sigma, const ChiOptions& chi_opts,
                          int threads, const EventACaps& caps, const AltCaps& alt_caps) {
    if (t < 1 || q < t) throw std::invalid_argument("requires 1 <= t <= q");
    if (k.r > 4) throw CapExceeded("event-A evaluation supports r <= 4");
    std::uint64_t thr = keep_threshold(params.rho);
    const Hypergraph& base = k.base;
    const int n = base.vertex_count();
    const int r = k.r;

    int alt = alt_r_sigma_q(base, sigma, r, q, alt_caps);
    int ceil_b1 = (n - alt + r - 2) / (r - 1);
    int c_max = std::min(ceil_b1, d) - 1;  // E: some proper C-coloring with C <= c_max

    TupleEnum te{base, r, q, caps.max_tuples, {}, {}};
    te.run();
    double choices = std::pow(static_cast<double>(binomial(q, t)), r);
    if (choices * static_cast<double>(te.out.size()) > static_cast<double>(caps.max_choices))
        throw CapExceeded("event-A subset choice space too large");

    EventAEvaluator eval{k, std::move(te.out), caps.max_choices, t};
    EventAEstimate est;
    est.trials = params.trials;
    est.tuple_count = static_cast<int>(eval.tuples.size());
    est.bound = event_a_bound_general(n, r, t, d, params.rho);
    est.rows.resize(params.trials);

    parallel_for(static_cast<std::uint64_t>(params.trials), threads, [&](std::uint64_t trial) {
        PowerHypergraph sample;
        sample.num_vertices = k.power.num_vertices;
        std::unordered_set<std::uint64_t> present;
        for (std::size_t i = 0; i < k.power.edges.size(); ++i) {
            if (edge_kept(thr, params.seed, trial, i)) {
                sample.edges.push_back(k.power.edges[i]);
                std::vector<int> sorted = k.power.edges[i];
                std::sort(sorted.begin(), sorted.end());
                present.insert(pack_edge_key(sorted));
            }
        }
        EventARow row;
        row.trial = static_cast<int>(trial);
        row.retained_edges = sample.edge_count();
        row.event_a = eval.event_happens(present);
        ChiResult chi = chromatic_number(sample, chi_opts);
        row.chi_lo = chi.lo;
        row.chi_hi = chi.hi;
        row.chi_exact = chi.exact;
        row.event_e = c_max >= 1 && !chi.infeasible && chi.hi <= c_max;
        est.rows[trial] = row;
    });

    for (const EventARow& row : est.rows) {
        if (row.event_a) ++est.count_a;
        if (row.event_e) ++est.count_e;
        if (!row.chi_exact && c_max >= 1 && row.chi_lo <= c_max && row.chi_hi > c_max &&
            !row.event_a)
            ++est.unresolved;  // E undetermined for this trial
        if (row.event_e && !row.event_a) ++est.containment_failures;
    }
    double p = static_cast<double>(est.count_a) / est.trials;
    est.estimate = p;
    est.stderr_value = std::sqrt(p * (1.0 - p) / est.trials);
    return est;
}

std::string tail_csv(const TailEstimate& est) {
    std::ostringstream csv;
    csv << "trial,retained_edges,chi_lo,chi_hi,chi_exact,ge_d\n";
    for (const auto& row : est.rows)
        csv << row.trial << ',' << row.retained_edges << ',' << row.chi_lo << ',' << row.chi_hi
            << ',' << (row.chi_exact ? 1 : 0) << ',' << row.ge_d << "\n";
    return csv.str();
}

std::string event_a_csv(const EventAEstimate& est) {
    std::ostringstream csv;
    csv << "trial,retained_edges,event_a,event_e,chi_lo,chi_hi,chi_exact\n";
    for (const auto& row : est.rows)
        csv << row.trial << ',' << row.retained_edges << ',' << (row.event_a ? 1 : 0) << ','
            << (row.event_e ? 1 : 0) << ',' << row.chi_lo << ',' << row.chi_hi << ','
            << (row.chi_exact ? 1 : 0) << "\n";
    return csv.str();
}

std::string margin_csv(const std::vector<MarginRow>& rows) {
    std::ostringstream csv;
    csv << "n,k,l,r,rho,d,q,t,margin,ratio_sgcor,ratio_corii,d_ok,m_trend\n";
    csv.precision(12);
    for (const auto& row : rows) {
        csv << row.n << ',' << row.k << ',' << row.l << ',' << row.r << ',' << row.rho << ','
            << row.d << ',' << row.q << ',' << row.t << ',';
        if (row.d_ok) csv << row.margin;
        csv << ',' << row.ratio_sgcor << ',' << row.ratio_corii << ',' << (row.d_ok ? 1 : 0) << ','
            << (row.trend < 0 ? "down" : row.trend > 0 ? "up" : "-") << "\n";
    }
    return csv.str();
}

}  // namespace kneserlab
