#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "opincast/cascade.hpp"
#include "opincast/graph.hpp"
#include "opincast/rng.hpp"

namespace opincast {

// Reaction of the head node when content crosses a directed edge, drawn with
// probabilities (delta*p, (1-delta)*p, 1-p).
enum class EdgeLabel : std::uint8_t { Spread = 0, Acknowledge = 1, Ignore = 2 };

// One possible world: a lazily materialized labeling of directed edges.
// Labels are keyed draws, so a world is fully determined by its seed; the
// memo guarantees each edge is labeled at most once and re-queries agree.
class LazyWorld {
public:
    LazyWorld(const Graph& g, const CampaignConfig& cfg, std::uint64_t world_seed)
        : graph_(&g), cfg_(cfg), seed_(world_seed) {}

    EdgeLabel label(NodeId u, NodeId v);

    std::uint64_t world_id() const { return seed_; }
    const std::unordered_map<std::uint64_t, EdgeLabel>& recorded() const { return labels_; }

private:
    const Graph* graph_;
    CampaignConfig cfg_;
    std::uint64_t seed_;
    std::unordered_map<std::uint64_t, EdgeLabel> labels_;
};

// Nodes with a live path to `root`: every edge on the path labeled Spread
// except the last hop into the root, which may also be Acknowledge.
struct RRSet {
    NodeId root = 0;
    std::vector<NodeId> members;  // sorted, includes root

    bool contains(NodeId u) const;
};

// Two RR-sets drawn in one shared world.
struct RRPair {
    RRSet first;
    RRSet second;
    std::uint64_t world_id = 0;
};

RRSet sample_rr_set(const Graph& g, NodeId root, const CampaignConfig& cfg, LazyWorld& world);

// Roots u, v independently uniform over V (u == v allowed), fresh world.
RRPair sample_rr_pair(const Graph& g, const CampaignConfig& cfg, std::uint64_t world_seed);

// Single RR-set at a uniformly random root in a fresh world.
RRSet sample_rr_set_uniform_root(const Graph& g, const CampaignConfig& cfg,
                                 std::uint64_t world_seed);

// Per-node linear gains w_u, optional quadratic gains m(u,v), and the scale
// bound chi that caps |x| for every sample.
class WeightTable {
public:
    static WeightTable linear(std::vector<double> w);
    static WeightTable quadratic(std::vector<double> w,
                                 std::function<double(NodeId, NodeId)> m, double chi);

    double w(NodeId u) const { return w_[u]; }
    double m(NodeId u, NodeId v) const { return m_ ? m_(u, v) : 0.0; }
    bool has_quadratic() const { return static_cast<bool>(m_); }
    double chi() const { return chi_; }
    void set_chi(double chi) { chi_ = chi; }
    const std::vector<double>& weights() const { return w_; }

private:
    std::vector<double> w_;
    std::function<double(NodeId, NodeId)> m_;
    double chi_ = 0.0;
};

// Membership mask for a candidate seed set.
class SeedMask {
public:
    SeedMask(std::span<const NodeId> nodes, std::size_t n);
    bool contains(NodeId u) const { return mask_[u] != 0; }
    std::span<const NodeId> nodes() const { return nodes_; }

private:
    std::vector<NodeId> nodes_;
    std::vector<std::uint8_t> mask_;
};

bool intersects(const RRSet& set, const SeedMask& seeds);

// x = 1[R_u hit] w_u + 1[R_u hit, R_v hit] n m_{u,v}
double estimator_x(const RRPair& pair, const SeedMask& seeds, const WeightTable& table,
                   std::size_t n);

// Mean of estimator_x over the samples; n * f_r estimates E[F(S)] unbiasedly.
double f_r(std::span<const RRPair> samples, const SeedMask& seeds, const WeightTable& table,
           std::size_t n);

// Linear variant: x = 1[R hit] w_root.
double f_r_linear(std::span<const RRSet> samples, const SeedMask& seeds,
                  std::span<const double> w);

double log_choose(std::size_t n, std::size_t k);

// lambda = (8 n chi / eps^2)(eps/3 + 1)(ell ln n + ln 2 + ln C(n,k)); the
// sample count theta = ceil(lambda / LB) makes n F_R concentrate within
// (eps/2) OPT for every size-k seed set, with high probability.
double required_samples_lambda(std::size_t n, std::size_t k, double chi, double epsilon,
                               double ell);

// beta = n (4/3 eps2 + 2)(ell ln n + ln log2(2n) + ln C(n,k)) / eps2^2
double sampling_beta(std::size_t n, std::size_t k, double epsilon2, double ell);

}  // namespace opincast
