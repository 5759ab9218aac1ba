#include "opincast/rr_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <utility>

namespace opincast {

namespace {

constexpr std::uint64_t kEdgeStreamTag = 0x45444745;  // label draws
constexpr std::uint64_t kRootStreamTag = 0x524f4f54;  // root draws

std::uint64_t arc_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

EdgeLabel LazyWorld::label(NodeId u, NodeId v) {
    const std::uint64_t key = arc_key(u, v);
    auto it = labels_.find(key);
    if (it != labels_.end()) return it->second;

    const Arc* arc = graph_->find_arc(u, v);
    if (!arc) throw ValidationError("label query on a non-edge");
    const double p = arc->activation;
    const double r = to_unit(mix64(substream(seed_, kEdgeStreamTag) ^ mix64(key)));
    EdgeLabel lbl = EdgeLabel::Ignore;
    if (r < cfg_.delta * p)
        lbl = EdgeLabel::Spread;
    else if (r < p)
        lbl = EdgeLabel::Acknowledge;
    labels_.emplace(key, lbl);
    return lbl;
}

bool RRSet::contains(NodeId u) const {
    return std::binary_search(members.begin(), members.end(), u);
}

RRSet sample_rr_set(const Graph& g, NodeId root, const CampaignConfig& cfg, LazyWorld& world) {
    g.validate_node(root);
    (void)cfg;
    std::vector<std::uint8_t> in_set(g.node_count(), 0);
    std::vector<NodeId> members{root};
    in_set[root] = 1;
    std::deque<NodeId> queue{root};
    while (!queue.empty()) {
        const NodeId x = queue.front();
        queue.pop_front();
        // The adjacency is symmetric, so out-neighbors of x are exactly the
        // tails w of directed edges (w, x).
        for (const Arc& a : g.out_arcs(x)) {
            const NodeId w = a.to;
            if (in_set[w]) continue;
            const EdgeLabel lbl = world.label(w, x);
            const bool live = (x == root) ? (lbl != EdgeLabel::Ignore)
                                          : (lbl == EdgeLabel::Spread);
            if (live) {
                in_set[w] = 1;
                members.push_back(w);
                queue.push_back(w);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return RRSet{root, std::move(members)};
}

RRPair sample_rr_pair(const Graph& g, const CampaignConfig& cfg, std::uint64_t world_seed) {
    RngStream roots(substream(world_seed, kRootStreamTag));
    const NodeId u = static_cast<NodeId>(roots.uniform_index(g.node_count()));
    const NodeId v = static_cast<NodeId>(roots.uniform_index(g.node_count()));
    LazyWorld world(g, cfg, world_seed);
    RRSet first = sample_rr_set(g, u, cfg, world);
    RRSet second = sample_rr_set(g, v, cfg, world);
    return RRPair{std::move(first), std::move(second), world_seed};
}

RRSet sample_rr_set_uniform_root(const Graph& g, const CampaignConfig& cfg,
                                 std::uint64_t world_seed) {
    RngStream roots(substream(world_seed, kRootStreamTag));
    const NodeId u = static_cast<NodeId>(roots.uniform_index(g.node_count()));
    LazyWorld world(g, cfg, world_seed);
    return sample_rr_set(g, u, cfg, world);
}

WeightTable WeightTable::linear(std::vector<double> w) {
    WeightTable t;
    double chi = 0.0;
    for (double x : w) chi = std::max(chi, std::abs(x));
    t.w_ = std::move(w);
    t.chi_ = chi;
    return t;
}

WeightTable WeightTable::quadratic(std::vector<double> w,
                                   std::function<double(NodeId, NodeId)> m, double chi) {
    WeightTable t;
    t.w_ = std::move(w);
    t.m_ = std::move(m);
    t.chi_ = chi;
    return t;
}

SeedMask::SeedMask(std::span<const NodeId> nodes, std::size_t n)
    : nodes_(nodes.begin(), nodes.end()), mask_(n, 0) {
    for (NodeId u : nodes_) {
        if (u >= n) throw ValidationError("seed id out of range");
        mask_[u] = 1;
    }
}

bool intersects(const RRSet& set, const SeedMask& seeds) {
    for (NodeId u : set.members)
        if (seeds.contains(u)) return true;
    return false;
}

double estimator_x(const RRPair& pair, const SeedMask& seeds, const WeightTable& table,
                   std::size_t n) {
    if (table.weights().size() != n) throw ValidationError("weight table length mismatch");
    const bool hit_u = intersects(pair.first, seeds);
    double x = 0.0;
    if (hit_u) {
        x = table.w(pair.first.root);
        if (table.has_quadratic() && intersects(pair.second, seeds))
            x += static_cast<double>(n) * table.m(pair.first.root, pair.second.root);
    }
    return x;
}

double f_r(std::span<const RRPair> samples, const SeedMask& seeds, const WeightTable& table,
           std::size_t n) {
    if (samples.empty()) throw ValidationError("f_r over an empty sample set");
    double acc = 0.0;
    for (const RRPair& pair : samples) acc += estimator_x(pair, seeds, table, n);
    return acc / static_cast<double>(samples.size());
}

double f_r_linear(std::span<const RRSet> samples, const SeedMask& seeds,
                  std::span<const double> w) {
    if (samples.empty()) throw ValidationError("f_r over an empty sample set");
    double acc = 0.0;
    for (const RRSet& set : samples)
        if (intersects(set, seeds)) acc += w[set.root];
    return acc / static_cast<double>(samples.size());
}

double log_choose(std::size_t n, std::size_t k) {
    if (k > n) throw ValidationError("log_choose: k > n");
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double required_samples_lambda(std::size_t n, std::size_t k, double chi, double epsilon,
                               double ell) {
    if (n < 2) throw ValidationError("lambda: n must be at least 2");
    if (k < 1 || k > n) throw ValidationError("lambda: k out of range");
    if (!(chi > 0.0)) throw ValidationError("lambda: chi must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ValidationError("lambda: epsilon in (0,1)");
    if (!(ell > 0.0)) throw ValidationError("lambda: ell must be positive");
    const double nn = static_cast<double>(n);
    return (8.0 * nn * chi / (epsilon * epsilon)) * (epsilon / 3.0 + 1.0) *
           (ell * std::log(nn) + std::log(2.0) + log_choose(n, k));
}

double sampling_beta(std::size_t n, std::size_t k, double epsilon2, double ell) {
    if (n < 2) throw ValidationError("beta: n must be at least 2");
    if (k < 1 || k > n) throw ValidationError("beta: k out of range");
    if (!(epsilon2 > 0.0 && epsilon2 < 1.0)) throw ValidationError("beta: epsilon2 in (0,1)");
    if (!(ell > 0.0)) throw ValidationError("beta: ell must be positive");
    const double nn = static_cast<double>(n);
    return nn * (4.0 / 3.0 * epsilon2 + 2.0) *
           (ell * std::log(nn) + std::log(std::log2(2.0 * nn)) + log_choose(n, k)) /
           (epsilon2 * epsilon2);
}

}  // namespace opincast
