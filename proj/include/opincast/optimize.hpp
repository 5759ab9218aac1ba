#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "opincast/cascade.hpp"
#include "opincast/dynamics.hpp"
#include "opincast/graph.hpp"
#include "opincast/rr_sampling.hpp"

namespace opincast {

enum class SelectionMode { FullQuadratic, LinearHeuristic };

struct OptimizerParams {
    std::size_t k = 1;
    double epsilon = 0.1;   // accuracy of the approximation guarantee
    double epsilon2 = 0.6;  // slack of the statistical stopping test
    double ell = 1.0;       // confidence exponent
    std::optional<std::size_t> sample_cap;  // heuristic cap on |R|
    SelectionMode mode = SelectionMode::LinearHeuristic;

    std::size_t hard_sample_limit = 5'000'000;  // refuse larger uncapped budgets
    std::size_t chi_exact_limit = 2000;         // exact chi scan up to this n
    std::size_t rescore_trials = 100;           // Monte Carlo re-score of heuristics
    int threads = 1;

    void validate(std::size_t n) const;
};

struct SeedResult {
    std::vector<NodeId> seeds;
    double estimated_value = 0.0;   // estimate of E[obj] at the solution
    std::size_t samples_used = 0;
    double lower_bound = 0.0;       // LB fed into theta = ceil(lambda / LB)
    std::optional<double> sandwich_ratio;  // mu0(S_U) / mu_U(S_U)

    // diagnostics
    double chi = 0.0;
    bool chi_exact = false;
    double observed_chi = 0.0;        // max |w_u + n m_{u,v}| over evaluated pairs
    double selection_estimate = 0.0;  // n * F_R at selection time
    bool test_fired = false;
};

// Greedy argmax of F_R over k rounds, ties by smallest node id. Uses a lazy
// priority queue when all weights are nonnegative (marginal gains are then
// non-increasing), plain re-evaluation otherwise.
std::vector<NodeId> rr_greedy(std::span<const RRSet> samples, std::size_t k,
                              const WeightTable& table, std::size_t n,
                              double* value_out = nullptr);

std::vector<NodeId> rr_greedy(std::span<const RRPair> samples, std::size_t k,
                              const WeightTable& table, std::size_t n,
                              double* value_out = nullptr);

struct SamplingDiagnostics {
    double lower_bound = 0.0;
    bool test_fired = false;
    std::size_t fired_round = 0;
    double theta_wanted = 0.0;
    bool capped = false;
};

struct LinearSamplingResult {
    std::vector<RRSet> samples;
    SamplingDiagnostics diag;
};

struct PairSamplingResult {
    std::vector<RRPair> samples;
    SamplingDiagnostics diag;
};

// Adaptive sampling with the statistical stopping test: grow the sample pool
// in rounds i = 1..floor(log2 n)-1 with y = n/2^i and theta_i = beta/y, run
// the greedy, and once n F_R exceeds (1+eps2) y chi accept LB = n F_R/(1+eps2);
// finish by extending the pool to ceil(lambda/LB).
LinearSamplingResult sampling_with_test_linear(const Graph& g, const CampaignConfig& cfg,
                                               const WeightTable& table,
                                               const OptimizerParams& params, double lb0,
                                               std::uint64_t seed);

PairSamplingResult sampling_with_test_pairs(const Graph& g, const CampaignConfig& cfg,
                                            const WeightTable& table,
                                            const OptimizerParams& params, double lb0,
                                            std::uint64_t seed);

// Maximizes the expected sum of expressed opinions, which reduces to the
// weighted coverage objective with w_u = delta_u; (1 - 1/e - eps) guarantee.
SeedResult maximize_sum(const Graph& g, std::span<const double> s, const CampaignConfig& cfg,
                        const OptimizerParams& params, std::uint64_t seed);

// Greedy maximization of a quadratic index: FullQuadratic runs the paired
// estimator; LinearHeuristic selects on the linear gains only (sample cap
// 200n, or 5n above 50k nodes) and re-scores the winner by Monte Carlo.
SeedResult maximize_index(const Graph& g, std::span<const double> s, const CampaignConfig& cfg,
                          IndexKind kind, const OptimizerParams& params, std::uint64_t seed,
                          const SolverConfig& solver = {}, ColumnCache* cache = nullptr);

// Sandwich method for the nonnegative-matrix kinds (Controversy and
// DisagreementControversy): optimize the submodular lower bound mu_L, the
// submodular upper bound mu_U (diagonal row-sum surrogate) and mu_0 itself,
// evaluate all three candidates on mu_0, return the best. The reported ratio
// mu_0(S_U)/mu_U(S_U) is the data-dependent approximation factor.
SeedResult sandwich_maximize(const Graph& g, std::span<const double> s,
                             const CampaignConfig& cfg, IndexKind kind,
                             const OptimizerParams& params, std::uint64_t seed,
                             const SolverConfig& solver = {}, ColumnCache* cache = nullptr);

// Seeds maximizing the expected number of adjusting nodes (uniform weights).
std::vector<NodeId> baseline_max_influence(const Graph& g, const CampaignConfig& cfg,
                                           std::size_t k, std::uint64_t seed,
                                           const OptimizerParams& params = {});

// Top-k degrees, ties by id.
std::vector<NodeId> baseline_high_degree(const Graph& g, std::size_t k);

// `repeats` independent uniform k-subsets.
std::vector<std::vector<NodeId>> baseline_random(const Graph& g, std::size_t k,
                                                 std::uint64_t seed, std::size_t repeats = 10);

}  // namespace opincast
