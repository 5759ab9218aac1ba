#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opincast/cascade.hpp"
#include "opincast/dynamics.hpp"
#include "opincast/optimize.hpp"

namespace opincast {

enum class OpinionInit { Uniform, Exponential, FromFile };

enum class Method {
    MaxSum,
    MaxDisCon,
    MaxPol,
    MaxDis,
    MaxInt,
    MaxLinDisCon,
    MaxLinPol,
    MaxLinDis,
    MaxLinInt,
    Sandwich,
    MaxInfluence,
    HighDegree,
    Random,
};

const char* to_string(Method m);
Method parse_method(const std::string& name);

struct ExperimentConfig {
    std::string graph_path;
    std::string dataset_name;  // defaults to the file stem
    OpinionInit init = OpinionInit::Uniform;
    std::string opinion_path;  // for FromFile
    CampaignConfig campaign;
    IndexKind index = IndexKind::Sum;
    Method method = Method::MaxSum;
    std::optional<double> k_fraction;       // k = ceil(fraction * n)
    std::optional<std::size_t> k_absolute;  // exactly one of the two is set
    std::size_t trials = 100;
    std::uint64_t master_seed = 1;
    std::optional<std::size_t> sample_cap;
    int threads = 0;  // 0: OPINCAST_THREADS env or hardware
    std::size_t random_repeats = 10;
    bool report_timing = true;  // false writes 0.000 seconds (reproducible CSV)

    std::size_t resolve_k(std::size_t n) const;
    void validate() const;
};

// Uniform: i.i.d. on [0,1). Exponential: a_u = 1 + Exp(1) scaled by max(a).
OpinionVector init_opinions(std::size_t n, OpinionInit kind, RngStream& rng);

struct ReportRow {
    std::string dataset;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string method;
    std::string index;
    std::string campaign;
    std::size_t k = 0;
    double mean_rel_increase = 0.0;  // percent
    double std_error = 0.0;          // percent
    std::size_t samples = 0;
    double seconds = 0.0;
};

inline constexpr const char* kCsvHeader =
    "dataset,n,m,method,index,campaign,k,mean_rel_increase,stderr,samples,seconds";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ReportRow& row);

// Loads the graph, extracts the LCC, assigns weighted-cascade probabilities,
// initializes opinions, selects seeds with the configured method, and scores
// the expected relative index increase over Monte Carlo trials.
ReportRow run_experiment(const ExperimentConfig& cfg);

// Same pipeline on an already preprocessed graph and fixed opinions.
ReportRow run_experiment_on(const Graph& g, const OpinionVector& s, const ExperimentConfig& cfg);

}  // namespace opincast
