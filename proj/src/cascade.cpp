#include "opincast/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "opincast/parallel.hpp"

namespace opincast {

void CampaignConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ValidationError("epsilon must be in (0,1]");
    if (!(delta >= 0.0 && delta <= 1.0)) throw ValidationError("delta must be in [0,1]");
    if (!(tau >= 0.0 && tau <= 1.0)) throw ValidationError("tau must be in [0,1]");
}

double delta_opinion(double s_u, const CampaignConfig& cfg) {
    if (!(s_u >= 0.0 && s_u <= 1.0)) throw ValidationError("opinion out of [0,1]");
    if (cfg.kind == CampaignKind::Marketing || s_u >= cfg.tau)
        return std::min(s_u + cfg.epsilon, 1.0) - s_u;
    return std::max(0.0, s_u - cfg.epsilon) - s_u;
}

std::vector<double> delta_vector(std::span<const double> s, const CampaignConfig& cfg) {
    cfg.validate();
    std::vector<double> d(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) d[i] = delta_opinion(s[i], cfg);
    return d;
}

namespace {

std::vector<NodeId> normalized_seeds(const Graph& g, std::span<const NodeId> seeds) {
    if (seeds.empty()) throw ValidationError("seed set must be nonempty");
    std::vector<NodeId> out(seeds.begin(), seeds.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (NodeId u : out) g.validate_node(u);
    return out;
}

struct SpreadState {
    std::vector<NodeState> state;
    std::vector<std::uint8_t> adjusted;
    OpinionVector shat;

    void adjust(NodeId u, std::span<const double> delta) {
        adjusted[u] = 1;
        shat[u] += delta[u];
    }
};

// One spreading wave: every node of `frontier` (ascending) offers the content
// to its neighbors in adjacency order; returns the newly spreading nodes.
std::vector<NodeId> spread_wave(const Graph& g, const CampaignConfig& cfg,
                                const OfferDraws& draws, std::span<const double> delta,
                                std::span<const NodeId> frontier, SpreadState& st) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
        for (const Arc& a : g.out_arcs(u)) {
            const NodeId v = a.to;
            if (st.state[v] == NodeState::Spread) continue;
            const double p = a.activation;
            const double r = draws.offer(u, v);
            if (st.state[v] == NodeState::Acknowledge) {
                if (r < cfg.delta * p) {
                    st.state[v] = NodeState::Spread;  // already adjusted
                    next.push_back(v);
                }
                continue;
            }
            if (r < cfg.delta * p) {
                st.state[v] = NodeState::Spread;
                st.adjust(v, delta);
                next.push_back(v);
            } else if (r < p) {
                st.state[v] = NodeState::Acknowledge;
                st.adjust(v, delta);
            } else {
                st.state[v] = NodeState::Ignore;
            }
        }
    }
    std::sort(next.begin(), next.end());
    return next;
}

SpreadState init_spread(const Graph& g, std::span<const double> s,
                        std::span<const NodeId> seeds, std::span<const double> delta) {
    SpreadState st;
    st.state.assign(g.node_count(), NodeState::Inactive);
    st.adjusted.assign(g.node_count(), 0);
    st.shat.assign(s.begin(), s.end());
    for (NodeId u : seeds) {
        st.state[u] = NodeState::Spread;
        st.adjust(u, delta);
    }
    return st;
}

}  // namespace

CascadeOutcome simulate_two_stage(const Graph& g, std::span<const double> s,
                                  std::span<const NodeId> seeds, const CampaignConfig& cfg,
                                  const OfferDraws& draws) {
    cfg.validate();
    validate_opinions(s, g.node_count());
    const std::vector<NodeId> roots = normalized_seeds(g, seeds);
    const std::vector<double> delta = delta_vector(s, cfg);

    SpreadState st = init_spread(g, s, roots, delta);
    std::vector<NodeId> frontier = roots;
    std::size_t rounds = 0;
    while (!frontier.empty()) {
        ++rounds;
        frontier = spread_wave(g, cfg, draws, delta, frontier, st);
    }
    return CascadeOutcome{std::move(st.shat), std::move(st.state), std::move(st.adjusted), rounds};
}

RoundTrace simulate_round_based(const Graph& g, std::span<const double> s,
                                std::span<const double> z0, std::span<const NodeId> seeds,
                                const CampaignConfig& cfg, const OfferDraws& draws,
                                std::size_t max_rounds, double settle_tolerance) {
    cfg.validate();
    validate_opinions(s, g.node_count());
    if (z0.size() != g.node_count())
        throw ValidationError("expressed opinion length does not match node count");
    const std::vector<NodeId> roots = normalized_seeds(g, seeds);
    const std::vector<double> delta = delta_vector(s, cfg);

    SpreadState st = init_spread(g, s, roots, delta);
    std::vector<NodeId> frontier = roots;  // became spreaders in round 0
    OpinionVector z(z0.begin(), z0.end());
    std::size_t fj_rounds = 0;
    std::size_t spread_rounds = 0;

    for (std::size_t t = 1; t <= max_rounds; ++t) {
        // Phase I: opinion averaging against the current innate opinions.
        OpinionVector z_next = fj_step(g, z, st.shat);
        double moved = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i)
            moved = std::max(moved, std::abs(z_next[i] - z[i]));
        z = std::move(z_next);
        ++fj_rounds;

        // Phase II: the previous round's new spreaders share the content.
        if (!frontier.empty()) {
            ++spread_rounds;
            frontier = spread_wave(g, cfg, draws, delta, frontier, st);
        }

        if (frontier.empty() && moved < settle_tolerance) {
            return RoundTrace{CascadeOutcome{std::move(st.shat), std::move(st.state),
                                             std::move(st.adjusted), spread_rounds},
                              std::move(z), fj_rounds};
        }
    }
    double moved = 0.0;
    {
        OpinionVector z_next = fj_step(g, z, st.shat);
        for (std::size_t i = 0; i < z.size(); ++i)
            moved = std::max(moved, std::abs(z_next[i] - z[i]));
    }
    throw SolverError("round-based simulation did not settle within " +
                          std::to_string(max_rounds) + " rounds; last step moved " +
                          std::to_string(moved),
                      moved);
}

MonteCarloStats monte_carlo_expected(const Graph& g, std::span<const double> s,
                                     std::span<const NodeId> seeds, const CampaignConfig& cfg,
                                     IndexKind kind, std::size_t trials, std::uint64_t seed,
                                     const SolverConfig& solver, int threads) {
    if (trials < 1) throw ValidationError("monte_carlo_expected needs at least one trial");
    std::vector<double> values(trials);
    parallel_for(trials, threads, [&](std::size_t t) {
        const OfferDraws draws(substream(seed, t));
        try {
            const CascadeOutcome out = simulate_two_stage(g, s, seeds, cfg, draws);
            values[t] = index_value(g, out.adjusted_opinions, kind, solver);
        } catch (const SolverError& e) {
            throw SolverError("trial " + std::to_string(t) + ": " + e.what(),
                              e.final_residual);
        }
    });

    double sum = 0.0, carry = 0.0;
    for (double v : values) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    const double mean = sum / static_cast<double>(trials);
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    const double std_error =
        trials > 1 ? std::sqrt(var / (static_cast<double>(trials) *
                                      static_cast<double>(trials - 1)))
                   : 0.0;
    return MonteCarloStats{mean, std_error, trials};
}

}  // namespace opincast
