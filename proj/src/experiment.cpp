#include "opincast/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "opincast/parallel.hpp"
#include "opincast/rng.hpp"

namespace opincast {

const char* to_string(Method m) {
    switch (m) {
        case Method::MaxSum: return "maxsum";
        case Method::MaxDisCon: return "maxdiscon";
        case Method::MaxPol: return "maxpol";
        case Method::MaxDis: return "maxdis";
        case Method::MaxInt: return "maxint";
        case Method::MaxLinDisCon: return "maxlindiscon";
        case Method::MaxLinPol: return "maxlinpol";
        case Method::MaxLinDis: return "maxlindis";
        case Method::MaxLinInt: return "maxlinint";
        case Method::Sandwich: return "sandwich";
        case Method::MaxInfluence: return "maxinfluence";
        case Method::HighDegree: return "highdegree";
        case Method::Random: return "random";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    for (Method m :
         {Method::MaxSum, Method::MaxDisCon, Method::MaxPol, Method::MaxDis, Method::MaxInt,
          Method::MaxLinDisCon, Method::MaxLinPol, Method::MaxLinDis, Method::MaxLinInt,
          Method::Sandwich, Method::MaxInfluence, Method::HighDegree, Method::Random})
        if (name == to_string(m)) return m;
    throw ValidationError("unknown method: " + name);
}

std::size_t ExperimentConfig::resolve_k(std::size_t n) const {
    if (k_absolute) return *k_absolute;
    return static_cast<std::size_t>(std::ceil(*k_fraction * static_cast<double>(n)));
}

void ExperimentConfig::validate() const {
    campaign.validate();
    if (k_fraction.has_value() == k_absolute.has_value())
        throw ValidationError("exactly one of k_fraction and k_absolute must be set");
    if (k_fraction && !(*k_fraction > 0.0 && *k_fraction <= 1.0))
        throw ValidationError("k fraction must be in (0,1]");
    if (trials < 1) throw ValidationError("at least one evaluation trial is required");
    if (init == OpinionInit::FromFile && opinion_path.empty())
        throw ValidationError("opinion file path missing");
}

OpinionVector init_opinions(std::size_t n, OpinionInit kind, RngStream& rng) {
    if (n < 1) throw ValidationError("empty opinion vector");
    OpinionVector s(n);
    switch (kind) {
        case OpinionInit::Uniform:
            for (double& v : s) v = rng.uniform();
            return s;
        case OpinionInit::Exponential: {
            // a_u = 1 + Exp(1), then scaled by the maximum into (0,1].
            double max_a = 0.0;
            for (double& v : s) {
                v = 1.0 - std::log1p(-rng.uniform());
                max_a = std::max(max_a, v);
            }
            for (double& v : s) v /= max_a;
            return s;
        }
        case OpinionInit::FromFile:
            throw ValidationError("init_opinions cannot read files; use load_opinions");
    }
    throw ValidationError("unreachable opinion init");
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const ReportRow& row) {
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(4);
    line << row.dataset << ',' << row.n << ',' << row.m << ',' << row.method << ','
         << row.index << ',' << row.campaign << ',' << row.k << ',' << row.mean_rel_increase
         << ',' << row.std_error;
    line.precision(3);
    line << ',' << row.samples << ',' << row.seconds;
    out << line.str() << '\n';
}

namespace {

constexpr std::uint64_t kOpinionTag = 0x4f50494e;
constexpr std::uint64_t kSelectTag = 0x53454c43;
constexpr std::uint64_t kEvalTag = 0x4556414c;
constexpr std::uint64_t kRandomTag = 0x524e4442;

std::string file_stem(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name;
}

struct Selection {
    std::vector<std::vector<NodeId>> seed_sets;  // several for Random
    std::size_t samples_used = 0;
};

Selection select_seeds(const Graph& g, const OpinionVector& s, const ExperimentConfig& cfg,
                       std::size_t k, std::uint64_t seed) {
    OptimizerParams params;
    params.k = k;
    params.sample_cap = cfg.sample_cap;
    params.threads = cfg.threads;

    Selection sel;
    auto one = [&](SeedResult r) {
        sel.seed_sets.push_back(std::move(r.seeds));
        sel.samples_used = r.samples_used;
    };
    switch (cfg.method) {
        case Method::MaxSum:
            one(maximize_sum(g, s, cfg.campaign, params, seed));
            break;
        case Method::MaxDisCon:
        case Method::MaxPol:
        case Method::MaxDis:
        case Method::MaxInt: {
            params.mode = SelectionMode::FullQuadratic;
            const IndexKind kind = cfg.method == Method::MaxDisCon
                                       ? IndexKind::DisagreementControversy
                                       : cfg.method == Method::MaxPol ? IndexKind::Polarization
                                       : cfg.method == Method::MaxDis ? IndexKind::Disagreement
                                                                      : IndexKind::InternalConflict;
            one(maximize_index(g, s, cfg.campaign, kind, params, seed));
            break;
        }
        case Method::MaxLinDisCon:
        case Method::MaxLinPol:
        case Method::MaxLinDis:
        case Method::MaxLinInt: {
            params.mode = SelectionMode::LinearHeuristic;
            const IndexKind kind = cfg.method == Method::MaxLinDisCon
                                       ? IndexKind::DisagreementControversy
                                       : cfg.method == Method::MaxLinPol
                                             ? IndexKind::Polarization
                                       : cfg.method == Method::MaxLinDis
                                             ? IndexKind::Disagreement
                                             : IndexKind::InternalConflict;
            one(maximize_index(g, s, cfg.campaign, kind, params, seed));
            break;
        }
        case Method::Sandwich:
            params.mode = SelectionMode::FullQuadratic;
            one(sandwich_maximize(g, s, cfg.campaign, cfg.index, params, seed));
            break;
        case Method::MaxInfluence:
            sel.seed_sets.push_back(baseline_max_influence(g, cfg.campaign, k, seed, params));
            break;
        case Method::HighDegree:
            sel.seed_sets.push_back(baseline_high_degree(g, k));
            break;
        case Method::Random:
            sel.seed_sets =
                baseline_random(g, k, substream(seed, kRandomTag), cfg.random_repeats);
            break;
    }
    return sel;
}

}  // namespace

ReportRow run_experiment_on(const Graph& g, const OpinionVector& s,
                            const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t n = g.node_count();
    const std::size_t k = cfg.resolve_k(n);
    const auto started = std::chrono::steady_clock::now();

    Selection sel = select_seeds(g, s, cfg, k, substream(cfg.master_seed, kSelectTag));

    const double base = index_value(g, s, cfg.index);
    if (base == 0.0) throw ValidationError("baseline index value is zero");

    // Pool the per-trial relative increases over all seed sets (Random
    // contributes one batch per repeat).
    std::vector<double> rel;
    rel.reserve(sel.seed_sets.size() * cfg.trials);
    std::uint64_t eval_seed = substream(cfg.master_seed, kEvalTag);
    for (std::size_t i = 0; i < sel.seed_sets.size(); ++i) {
        const auto& seeds = sel.seed_sets[i];
        std::vector<double> values(cfg.trials);
        parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
            const OfferDraws draws(substream(substream(eval_seed, i), t));
            const CascadeOutcome out = simulate_two_stage(g, s, seeds, cfg.campaign, draws);
            values[t] = index_value(g, out.adjusted_opinions, cfg.index);
        });
        for (double v : values) rel.push_back((v - base) / base);
    }

    double sum = 0.0, carry = 0.0;
    for (double v : rel) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    const double mean = sum / static_cast<double>(rel.size());
    double var = 0.0;
    for (double v : rel) var += (v - mean) * (v - mean);
    const double std_error =
        rel.size() > 1 ? std::sqrt(var / (static_cast<double>(rel.size()) *
                                          static_cast<double>(rel.size() - 1)))
                       : 0.0;

    const auto finished = std::chrono::steady_clock::now();
    ReportRow row;
    row.dataset = cfg.dataset_name.empty() ? file_stem(cfg.graph_path) : cfg.dataset_name;
    row.n = n;
    row.m = g.edge_count();
    row.method = to_string(cfg.method);
    row.index = to_string(cfg.index);
    row.campaign = cfg.campaign.kind == CampaignKind::Marketing ? "marketing" : "backfire";
    row.k = k;
    row.mean_rel_increase = 100.0 * mean;
    row.std_error = 100.0 * std_error;
    row.samples = sel.samples_used;
    row.seconds = cfg.report_timing
                      ? std::chrono::duration<double>(finished - started).count()
                      : 0.0;
    return row;
}

ReportRow run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    std::ifstream in(cfg.graph_path);
    if (!in) throw ParseError("cannot open graph file: " + cfg.graph_path);
    Graph g = assign_weighted_cascade(largest_connected_component(load_edge_list(in)));

    OpinionVector s;
    if (cfg.init == OpinionInit::FromFile) {
        std::ifstream ops(cfg.opinion_path);
        if (!ops) throw ParseError("cannot open opinion file: " + cfg.opinion_path);
        s = load_opinions(ops, g.node_count());
    } else {
        RngStream rng(substream(cfg.master_seed, kOpinionTag));
        s = init_opinions(g.node_count(), cfg.init, rng);
    }
    return run_experiment_on(g, s, cfg);
}

}  // namespace opincast
