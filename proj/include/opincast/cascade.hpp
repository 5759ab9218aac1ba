#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "opincast/dynamics.hpp"
#include "opincast/graph.hpp"
#include "opincast/rng.hpp"

namespace opincast {

enum class CampaignKind { Marketing, PolarizingBackfire };

struct CampaignConfig {
    double epsilon = 0.1;  // opinion shift
    double delta = 0.5;    // share probability
    double tau = 0.5;      // backfire threshold, ignored for Marketing
    CampaignKind kind = CampaignKind::Marketing;

    void validate() const;
};

// States are totally ordered and transitions only move up.
enum class NodeState : std::uint8_t { Inactive = 0, Ignore = 1, Acknowledge = 2, Spread = 3 };

struct CascadeOutcome {
    OpinionVector adjusted_opinions;        // s-hat
    std::vector<NodeState> final_states;
    std::vector<std::uint8_t> adjusted_flags;  // ind_u: reached acknowledge or spread
    std::size_t rounds = 0;                    // spreading waves executed
};

// Signed shift delta_u = new - old applied when a node adjusts. Marketing
// moves toward 1; a polarizing campaign with backfire moves nodes at or above
// tau toward 1 and the rest toward 0. Clipped to keep opinions in [0,1].
double delta_opinion(double s_u, const CampaignConfig& cfg);

// Entrywise delta_opinion; deterministic given s and the campaign.
std::vector<double> delta_vector(std::span<const double> s, const CampaignConfig& cfg);

// Stage one of the two-stage model: full information spread in O(m), opinions
// adjusted at activation (seeds included). The equilibrium of the adjusted
// opinions is stage two and is left to the caller (fj_equilibrium).
CascadeOutcome simulate_two_stage(const Graph& g, std::span<const double> s,
                                  std::span<const NodeId> seeds, const CampaignConfig& cfg,
                                  const OfferDraws& draws);

struct RoundTrace {
    CascadeOutcome outcome;
    OpinionVector expressed;   // z after the final round
    std::size_t fj_rounds = 0; // opinion-update rounds executed
};

// Reference simulator interleaving one opinion-update phase and one spreading
// phase per round, exactly as the round-based model prescribes. Runs until
// the frontier is empty and the expressed opinions have settled.
RoundTrace simulate_round_based(const Graph& g, std::span<const double> s,
                                std::span<const double> z0, std::span<const NodeId> seeds,
                                const CampaignConfig& cfg, const OfferDraws& draws,
                                std::size_t max_rounds = 10000,
                                double settle_tolerance = 1e-10);

struct MonteCarloStats {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
};

// Mean and standard error of index_value(s-hat) over independent cascades.
MonteCarloStats monte_carlo_expected(const Graph& g, std::span<const double> s,
                                     std::span<const NodeId> seeds, const CampaignConfig& cfg,
                                     IndexKind kind, std::size_t trials, std::uint64_t seed,
                                     const SolverConfig& solver = {}, int threads = 1);

}  // namespace opincast
