#include "opincast/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "opincast/parallel.hpp"

namespace opincast {

void OptimizerParams::validate(std::size_t n) const {
    if (k < 1 || k > n) throw ValidationError("budget k out of range");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must be in (0,1)");
    if (!(epsilon2 > 0.0 && epsilon2 < 1.0)) throw ValidationError("epsilon2 must be in (0,1)");
    if (!(ell > 0.0)) throw ValidationError("ell must be positive");
}

namespace {

constexpr std::uint64_t kSampleTag = 0x53414d50;
constexpr std::uint64_t kLowerTag = 0x4c4f5745;
constexpr std::uint64_t kUpperTag = 0x55505045;
constexpr std::uint64_t kQuadTag = 0x51554144;
constexpr std::uint64_t kProbeTag = 0x50524f42;
constexpr std::uint64_t kEvalTag = 0x4556414c;

bool nonnegative(std::span<const double> w) {
    for (double x : w)
        if (x < 0.0) return false;
    return true;
}

// --- linear greedy -------------------------------------------------------

struct LinearIncidence {
    std::vector<std::vector<std::uint32_t>> of_node;  // node -> sample ids
    explicit LinearIncidence(std::span<const RRSet> samples, std::size_t n) : of_node(n) {
        for (std::uint32_t i = 0; i < samples.size(); ++i)
            for (NodeId u : samples[i].members) of_node[u].push_back(i);
    }
};

std::vector<NodeId> greedy_linear_plain(std::span<const RRSet> samples, std::size_t k,
                                        const WeightTable& table, std::size_t n) {
    LinearIncidence inc(samples, n);
    std::vector<std::uint8_t> covered(samples.size(), 0);
    std::vector<std::uint8_t> chosen(n, 0);
    std::vector<NodeId> seeds;
    seeds.reserve(k);
    for (std::size_t round = 0; round < k; ++round) {
        double best_gain = -std::numeric_limits<double>::infinity();
        NodeId best = 0;
        for (NodeId u = 0; u < n; ++u) {
            if (chosen[u]) continue;
            double gain = 0.0;
            for (std::uint32_t i : inc.of_node[u])
                if (!covered[i]) gain += table.w(samples[i].root);
            if (gain > best_gain) {
                best_gain = gain;
                best = u;
            }
        }
        chosen[best] = 1;
        seeds.push_back(best);
        for (std::uint32_t i : inc.of_node[best]) covered[i] = 1;
    }
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

std::vector<NodeId> greedy_linear_lazy(std::span<const RRSet> samples, std::size_t k,
                                       const WeightTable& table, std::size_t n) {
    LinearIncidence inc(samples, n);
    std::vector<std::uint8_t> covered(samples.size(), 0);

    struct Entry {
        double gain;
        NodeId node;
        std::size_t round;
    };
    struct Worse {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.gain != b.gain) return a.gain < b.gain;
            return a.node > b.node;  // smaller id wins ties
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, Worse> heap;
    for (NodeId u = 0; u < n; ++u) {
        double gain = 0.0;
        for (std::uint32_t i : inc.of_node[u]) gain += table.w(samples[i].root);
        heap.push(Entry{gain, u, 0});
    }

    std::vector<NodeId> seeds;
    seeds.reserve(k);
    for (std::size_t round = 1; round <= k; ++round) {
        for (;;) {
            Entry top = heap.top();
            heap.pop();
            if (top.round == round) {
                seeds.push_back(top.node);
                for (std::uint32_t i : inc.of_node[top.node]) covered[i] = 1;
                break;
            }
            double gain = 0.0;
            for (std::uint32_t i : inc.of_node[top.node])
                if (!covered[i]) gain += table.w(samples[i].root);
            heap.push(Entry{gain, top.node, round});
        }
    }
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

// --- paired greedy -------------------------------------------------------

struct PairIncidence {
    std::vector<std::vector<std::uint32_t>> first_of;   // node -> samples with node in R_u
    std::vector<std::vector<std::uint32_t>> second_of;  // node -> samples with node in R_v
    PairIncidence(std::span<const RRPair> samples, std::size_t n) : first_of(n), second_of(n) {
        for (std::uint32_t i = 0; i < samples.size(); ++i) {
            for (NodeId u : samples[i].first.members) first_of[u].push_back(i);
            for (NodeId u : samples[i].second.members) second_of[u].push_back(i);
        }
    }
};

// Quadratic gains m(u,v) are costly (each may trigger a solve), so they are
// memoized per sample and only evaluated when a pair term can change.
struct PairMemo {
    std::vector<double> m_val;
    std::vector<std::uint8_t> m_known;
    double observed_abs_x = 0.0;

    void resize(std::size_t count) {
        m_val.resize(count, 0.0);
        m_known.resize(count, 0);
    }
};

double sample_m(const RRPair& pair, const WeightTable& table, PairMemo& memo, std::uint32_t i,
                std::size_t n) {
    if (!memo.m_known[i]) {
        memo.m_val[i] = table.m(pair.first.root, pair.second.root);
        memo.m_known[i] = 1;
        const double x = std::abs(table.w(pair.first.root) +
                                  static_cast<double>(n) * memo.m_val[i]);
        memo.observed_abs_x = std::max(memo.observed_abs_x, x);
    }
    return memo.m_val[i];
}

std::vector<NodeId> greedy_pairs_impl(std::span<const RRPair> samples, std::size_t k,
                                      const WeightTable& table, std::size_t n, PairMemo& memo) {
    PairIncidence inc(samples, n);
    memo.resize(samples.size());
    std::vector<std::uint8_t> hit_u(samples.size(), 0), hit_v(samples.size(), 0);
    std::vector<std::uint8_t> chosen(n, 0);
    const double nd = static_cast<double>(n);

    auto gain_of = [&](NodeId x) {
        double gain = 0.0;
        for (std::uint32_t i : inc.first_of[x]) {
            if (hit_u[i]) continue;
            const RRPair& pair = samples[i];
            gain += table.w(pair.first.root);
            if (table.has_quadratic() && (hit_v[i] || pair.second.contains(x)))
                gain += nd * sample_m(pair, table, memo, i, n);
        }
        if (table.has_quadratic()) {
            for (std::uint32_t i : inc.second_of[x]) {
                if (hit_v[i] || !hit_u[i]) continue;
                // first already covered, second newly covered by x
                gain += nd * sample_m(samples[i], table, memo, i, n);
            }
        }
        return gain;
    };

    std::vector<NodeId> seeds;
    seeds.reserve(k);
    for (std::size_t round = 0; round < k; ++round) {
        double best_gain = -std::numeric_limits<double>::infinity();
        NodeId best = 0;
        for (NodeId x = 0; x < n; ++x) {
            if (chosen[x]) continue;
            const double gain = gain_of(x);
            if (gain > best_gain) {
                best_gain = gain;
                best = x;
            }
        }
        chosen[best] = 1;
        seeds.push_back(best);
        for (std::uint32_t i : inc.first_of[best]) hit_u[i] = 1;
        for (std::uint32_t i : inc.second_of[best]) hit_v[i] = 1;
    }
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

}  // namespace

std::vector<NodeId> rr_greedy(std::span<const RRSet> samples, std::size_t k,
                              const WeightTable& table, std::size_t n, double* value_out) {
    if (samples.empty()) throw ValidationError("rr_greedy requires samples");
    if (k < 1 || k > n) throw ValidationError("budget k out of range");
    std::vector<NodeId> seeds = nonnegative(table.weights())
                                    ? greedy_linear_lazy(samples, k, table, n)
                                    : greedy_linear_plain(samples, k, table, n);
    if (value_out) *value_out = f_r_linear(samples, SeedMask(seeds, n), table.weights());
    return seeds;
}

std::vector<NodeId> rr_greedy(std::span<const RRPair> samples, std::size_t k,
                              const WeightTable& table, std::size_t n, double* value_out) {
    if (samples.empty()) throw ValidationError("rr_greedy requires samples");
    if (k < 1 || k > n) throw ValidationError("budget k out of range");
    PairMemo memo;
    std::vector<NodeId> seeds = greedy_pairs_impl(samples, k, table, n, memo);
    if (value_out) *value_out = f_r(samples, SeedMask(seeds, n), table, n);
    return seeds;
}

namespace {

// --- adaptive sampling with the statistical test -------------------------

struct LinearStore {
    const Graph& g;
    const CampaignConfig& cfg;
    const WeightTable& table;
    std::uint64_t seed;
    int threads;
    std::vector<RRSet> samples;

    void extend_to(std::size_t target) {
        if (target <= samples.size()) return;
        const std::size_t old = samples.size();
        samples.resize(target);
        parallel_for(target - old, threads, [&](std::size_t i) {
            samples[old + i] =
                sample_rr_set_uniform_root(g, cfg, substream(seed, old + i));
        });
    }

    std::pair<std::vector<NodeId>, double> greedy(std::size_t k) {
        double value = 0.0;
        auto seeds = rr_greedy(std::span<const RRSet>(samples), k, table, g.node_count(), &value);
        return {std::move(seeds), static_cast<double>(g.node_count()) * value};
    }

    std::size_t size() const { return samples.size(); }
};

struct PairStore {
    const Graph& g;
    const CampaignConfig& cfg;
    const WeightTable& table;
    std::uint64_t seed;
    int threads;
    std::vector<RRPair> samples;
    PairMemo memo;

    void extend_to(std::size_t target) {
        if (target <= samples.size()) return;
        const std::size_t old = samples.size();
        samples.resize(target);
        parallel_for(target - old, threads, [&](std::size_t i) {
            samples[old + i] = sample_rr_pair(g, cfg, substream(seed, old + i));
        });
    }

    std::pair<std::vector<NodeId>, double> greedy(std::size_t k) {
        if (samples.empty()) throw ValidationError("rr_greedy requires samples");
        memo.resize(samples.size());
        auto seeds = greedy_pairs_impl(samples, k, table, g.node_count(), memo);
        const double value = f_r(samples, SeedMask(seeds, g.node_count()), table, g.node_count());
        return {std::move(seeds), static_cast<double>(g.node_count()) * value};
    }

    std::size_t size() const { return samples.size(); }
};

template <typename Store>
SamplingDiagnostics sampling_with_test_impl(Store& store, std::size_t n,
                                            const OptimizerParams& params, double lb0) {
    if (!(lb0 > 0.0)) throw ValidationError("sampling test requires a positive LB0");
    const double chi = store.table.chi();
    const double beta = sampling_beta(n, params.k, params.epsilon2, params.ell);

    SamplingDiagnostics diag;
    diag.lower_bound = lb0;

    auto clamp_budget = [&](double wanted) -> std::size_t {
        std::size_t target = static_cast<std::size_t>(std::ceil(wanted));
        if (params.sample_cap) {
            if (target >= *params.sample_cap) diag.capped = true;
            target = std::min(target, *params.sample_cap);
        } else if (target > params.hard_sample_limit) {
            throw ValidationError("sample budget of " + std::to_string(target) +
                                  " RR-sets exceeds the hard limit; set a sample cap");
        }
        return std::max<std::size_t>(target, 1);
    };

    const std::size_t rounds =
        n >= 4 ? static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n)))) - 1
               : 0;
    for (std::size_t i = 1; i <= rounds; ++i) {
        const double y = static_cast<double>(n) / std::pow(2.0, static_cast<double>(i));
        store.extend_to(clamp_budget(beta / y));
        auto [seeds, value] = store.greedy(params.k);
        if (value >= (1.0 + params.epsilon2) * y * chi) {
            diag.lower_bound = value / (1.0 + params.epsilon2);
            diag.test_fired = true;
            diag.fired_round = i;
            break;
        }
    }

    const double lambda = required_samples_lambda(n, params.k, chi, params.epsilon, params.ell);
    diag.theta_wanted = std::ceil(lambda / diag.lower_bound);
    store.extend_to(clamp_budget(diag.theta_wanted));
    return diag;
}

}  // namespace

LinearSamplingResult sampling_with_test_linear(const Graph& g, const CampaignConfig& cfg,
                                               const WeightTable& table,
                                               const OptimizerParams& params, double lb0,
                                               std::uint64_t seed) {
    params.validate(g.node_count());
    LinearStore store{g, cfg, table, substream(seed, kSampleTag), params.threads, {}};
    SamplingDiagnostics diag = sampling_with_test_impl(store, g.node_count(), params, lb0);
    return LinearSamplingResult{std::move(store.samples), diag};
}

PairSamplingResult sampling_with_test_pairs(const Graph& g, const CampaignConfig& cfg,
                                            const WeightTable& table,
                                            const OptimizerParams& params, double lb0,
                                            std::uint64_t seed) {
    params.validate(g.node_count());
    PairStore store{g, cfg, table, substream(seed, kSampleTag), params.threads, {}, {}};
    SamplingDiagnostics diag = sampling_with_test_impl(store, g.node_count(), params, lb0);
    return PairSamplingResult{std::move(store.samples), diag};
}

SeedResult maximize_sum(const Graph& g, std::span<const double> s, const CampaignConfig& cfg,
                        const OptimizerParams& params, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    params.validate(n);
    cfg.validate();
    validate_opinions(s, n);

    const std::vector<double> delta = delta_vector(s, cfg);
    double lb0 = 0.0;
    for (double d : delta) lb0 = std::max(lb0, std::abs(d));
    if (!(lb0 > 0.0))
        throw ValidationError("every opinion shift is zero; the sum objective is constant");

    WeightTable table = WeightTable::linear(delta);
    LinearStore store{g, cfg, table, substream(seed, kSampleTag), params.threads, {}};
    SamplingDiagnostics diag = sampling_with_test_impl(store, n, params, lb0);
    auto [seeds, value] = store.greedy(params.k);

    SeedResult result;
    result.seeds = std::move(seeds);
    result.estimated_value = value;
    result.selection_estimate = value;
    result.samples_used = store.size();
    result.lower_bound = diag.lower_bound;
    result.chi = table.chi();
    result.chi_exact = true;
    result.test_fired = diag.test_fired;
    return result;
}

namespace {

struct QuadraticScale {
    double chi = 0.0;
    double lb0 = 0.0;
    bool exact = false;
};

// chi = max |w_u + n m_{u,v}| and LB0 = max |w_u + m_{u,v}| with
// m_{u,v} = delta_u M_uv delta_v. Exact scan when n is small enough to
// afford one column solve per node; otherwise a probe estimate
// max|w| + n max|m| over random columns.
QuadraticScale quadratic_scale(const Graph& g, std::span<const double> w,
                               std::span<const double> delta, IndexKind kind,
                               const SolverConfig& solver, ColumnCache* cache,
                               const OptimizerParams& params, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    const double nd = static_cast<double>(n);
    QuadraticScale scale;
    auto scan_column = [&](NodeId v, auto&& fold) {
        const std::vector<double> col = index_matrix_column(g, kind, v, solver, cache);
        for (NodeId u = 0; u < n; ++u) fold(u, delta[u] * col[u] * delta[v]);
    };
    if (n <= params.chi_exact_limit) {
        for (NodeId v = 0; v < n; ++v)
            scan_column(v, [&](NodeId u, double m) {
                scale.chi = std::max(scale.chi, std::abs(w[u] + nd * m));
                scale.lb0 = std::max(scale.lb0, std::abs(w[u] + m));
            });
        scale.exact = true;
        return scale;
    }
    double wmax = 0.0;
    for (double x : w) wmax = std::max(wmax, std::abs(x));
    double mmax = 0.0;
    RngStream probe(substream(seed, kProbeTag));
    const std::size_t probes = std::min<std::size_t>(64, n);
    for (std::size_t i = 0; i < probes; ++i)
        scan_column(static_cast<NodeId>(probe.uniform_index(n)),
                    [&](NodeId, double m) { mmax = std::max(mmax, std::abs(m)); });
    scale.chi = wmax + nd * mmax;
    scale.lb0 = wmax + mmax;
    scale.exact = false;
    return scale;
}

std::size_t heuristic_cap(std::size_t n) { return n > 50000 ? 5 * n : 200 * n; }

double rescore_by_monte_carlo(const Graph& g, std::span<const double> s,
                              std::span<const NodeId> seeds, const CampaignConfig& cfg,
                              IndexKind kind, const OptimizerParams& params,
                              std::uint64_t seed, const SolverConfig& solver) {
    const double base = index_value(g, s, kind, solver);
    const MonteCarloStats stats = monte_carlo_expected(
        g, s, seeds, cfg, kind, params.rescore_trials, seed, solver, params.threads);
    return stats.mean - base;
}

}  // namespace

SeedResult maximize_index(const Graph& g, std::span<const double> s, const CampaignConfig& cfg,
                          IndexKind kind, const OptimizerParams& params, std::uint64_t seed,
                          const SolverConfig& solver, ColumnCache* cache) {
    const std::size_t n = g.node_count();
    params.validate(n);
    cfg.validate();
    validate_opinions(s, n);
    if (!is_quadratic(kind))
        throw ValidationError("maximize_index handles quadratic indices; use maximize_sum");

    const std::vector<double> delta = delta_vector(s, cfg);
    std::vector<double> gains = linear_gain_vector(g, s, delta, kind, solver);

    if (params.mode == SelectionMode::LinearHeuristic) {
        OptimizerParams local = params;
        if (!local.sample_cap) local.sample_cap = heuristic_cap(n);
        WeightTable table = WeightTable::linear(gains);
        if (!(table.chi() > 0.0))
            throw ValidationError("all linear gains are zero; nothing to maximize");
        LinearStore store{g, cfg, table, substream(seed, kSampleTag), local.threads, {}};
        SamplingDiagnostics diag = sampling_with_test_impl(store, n, local, table.chi());
        auto [seeds, value] = store.greedy(local.k);

        SeedResult result;
        result.seeds = std::move(seeds);
        result.selection_estimate = value;
        result.estimated_value = rescore_by_monte_carlo(g, s, result.seeds, cfg, kind, local,
                                                        substream(seed, kEvalTag), solver);
        result.samples_used = store.size();
        result.lower_bound = diag.lower_bound;
        result.chi = table.chi();
        result.chi_exact = true;
        result.test_fired = diag.test_fired;
        return result;
    }

    ColumnCache local_cache;
    ColumnCache* cols = cache ? cache : &local_cache;
    auto m_fn = [&g, kind, solver, cols, delta](NodeId u, NodeId v) {
        const std::vector<double> col = index_matrix_column(g, kind, v, solver, cols);
        return delta[u] * col[u] * delta[v];
    };
    const QuadraticScale scale =
        quadratic_scale(g, gains, delta, kind, solver, cols, params, seed);
    if (!(scale.chi > 0.0)) throw ValidationError("degenerate quadratic objective");
    WeightTable table = WeightTable::quadratic(gains, m_fn, scale.chi);

    PairStore store{g, cfg, table, substream(seed, kSampleTag), params.threads, {}, {}};
    SamplingDiagnostics diag = sampling_with_test_impl(store, n, params, scale.lb0);
    auto [seeds, value] = store.greedy(params.k);

    SeedResult result;
    result.seeds = std::move(seeds);
    result.estimated_value = value;
    result.selection_estimate = value;
    result.samples_used = store.size();
    result.lower_bound = diag.lower_bound;
    result.chi = scale.chi;
    result.chi_exact = scale.exact;
    result.observed_chi = store.memo.observed_abs_x;
    result.test_fired = diag.test_fired;
    return result;
}

SeedResult sandwich_maximize(const Graph& g, std::span<const double> s,
                             const CampaignConfig& cfg, IndexKind kind,
                             const OptimizerParams& params, std::uint64_t seed,
                             const SolverConfig& solver, ColumnCache* cache) {
    const std::size_t n = g.node_count();
    params.validate(n);
    cfg.validate();
    validate_opinions(s, n);
    if (kind != IndexKind::Controversy && kind != IndexKind::DisagreementControversy)
        throw ValidationError("sandwich method requires a nonnegative index matrix");

    const std::vector<double> delta = delta_vector(s, cfg);
    const std::vector<double> gains = linear_gain_vector(g, s, delta, kind, solver);

    // mu_L drops the quadratic part entirely; mu_U replaces it by the
    // diagonal row-sum surrogate. For both supported kinds the row sums of M
    // are exactly 1 because (I+L)^{-1} fixes the all-ones vector.
    WeightTable lower_table = WeightTable::linear(gains);
    std::vector<double> upper_w(n);
    for (std::size_t u = 0; u < n; ++u) upper_w[u] = gains[u] + delta[u] * delta[u];
    WeightTable upper_table = WeightTable::linear(upper_w);
    if (!(lower_table.chi() > 0.0) || !(upper_table.chi() > 0.0))
        throw ValidationError("degenerate sandwich objective");

    LinearStore lower_store{g, cfg, lower_table, substream(seed, kLowerTag), params.threads, {}};
    sampling_with_test_impl(lower_store, n, params, lower_table.chi());
    auto [seeds_lower, value_lower] = lower_store.greedy(params.k);

    LinearStore upper_store{g, cfg, upper_table, substream(seed, kUpperTag), params.threads, {}};
    sampling_with_test_impl(upper_store, n, params, upper_table.chi());
    auto [seeds_upper, value_upper_on_upper] = upper_store.greedy(params.k);

    ColumnCache local_cache;
    ColumnCache* cols = cache ? cache : &local_cache;
    auto m_fn = [&g, kind, solver, cols, delta](NodeId u, NodeId v) {
        const std::vector<double> col = index_matrix_column(g, kind, v, solver, cols);
        return delta[u] * col[u] * delta[v];
    };
    const QuadraticScale scale =
        quadratic_scale(g, gains, delta, kind, solver, cols, params, seed);
    WeightTable full_table = WeightTable::quadratic(gains, m_fn, scale.chi);

    PairStore full_store{g, cfg, full_table, substream(seed, kQuadTag), params.threads, {}, {}};
    SamplingDiagnostics diag = sampling_with_test_impl(full_store, n, params, scale.lb0);
    auto [seeds_full, value_full] = full_store.greedy(params.k);

    // Evaluate the three candidates on mu_0 over the shared paired samples.
    const double nd = static_cast<double>(n);
    auto mu0_of = [&](const std::vector<NodeId>& c) {
        return nd * f_r(std::span<const RRPair>(full_store.samples), SeedMask(c, n), full_table, n);
    };
    const double mu0_full = value_full;
    const double mu0_lower = mu0_of(seeds_lower);
    const double mu0_upper = mu0_of(seeds_upper);

    SeedResult result;
    result.seeds = seeds_full;
    result.estimated_value = mu0_full;
    if (mu0_lower > result.estimated_value) {
        result.seeds = seeds_lower;
        result.estimated_value = mu0_lower;
    }
    if (mu0_upper > result.estimated_value) {
        result.seeds = seeds_upper;
        result.estimated_value = mu0_upper;
    }
    result.selection_estimate = result.estimated_value;
    result.samples_used = full_store.size() + lower_store.size() + upper_store.size();
    result.lower_bound = diag.lower_bound;
    result.chi = scale.chi;
    result.chi_exact = scale.exact;
    result.observed_chi = full_store.memo.observed_abs_x;
    result.test_fired = diag.test_fired;
    if (value_upper_on_upper > 0.0) result.sandwich_ratio = mu0_upper / value_upper_on_upper;
    return result;
}

std::vector<NodeId> baseline_max_influence(const Graph& g, const CampaignConfig& cfg,
                                           std::size_t k, std::uint64_t seed,
                                           const OptimizerParams& params) {
    const std::size_t n = g.node_count();
    OptimizerParams local = params;
    local.k = k;
    local.validate(n);
    if (!local.sample_cap && local.mode == SelectionMode::LinearHeuristic)
        local.sample_cap = heuristic_cap(n);
    WeightTable table = WeightTable::linear(std::vector<double>(n, 1.0));
    LinearStore store{g, cfg, table, substream(seed, kSampleTag), local.threads, {}};
    sampling_with_test_impl(store, n, local, 1.0);
    return store.greedy(k).first;
}

std::vector<NodeId> baseline_high_degree(const Graph& g, std::size_t k) {
    const std::size_t n = g.node_count();
    if (k < 1 || k > n) throw ValidationError("budget k out of range");
    std::vector<NodeId> order(n);
    for (std::size_t u = 0; u < n; ++u) order[u] = static_cast<NodeId>(u);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<NodeId> seeds(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

std::vector<std::vector<NodeId>> baseline_random(const Graph& g, std::size_t k,
                                                 std::uint64_t seed, std::size_t repeats) {
    const std::size_t n = g.node_count();
    if (k < 1 || k > n) throw ValidationError("budget k out of range");
    std::vector<std::vector<NodeId>> sets;
    sets.reserve(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
        RngStream rng(substream(seed, r));
        std::vector<NodeId> pool(n);
        for (std::size_t u = 0; u < n; ++u) pool[u] = static_cast<NodeId>(u);
        std::vector<NodeId> pick;
        pick.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + rng.uniform_index(n - i);
            std::swap(pool[i], pool[j]);
            pick.push_back(pool[i]);
        }
        std::sort(pick.begin(), pick.end());
        sets.push_back(std::move(pick));
    }
    return sets;
}

}  // namespace opincast
