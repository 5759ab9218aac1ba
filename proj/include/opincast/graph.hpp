#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "opincast/errors.hpp"

namespace opincast {

using NodeId = std::uint32_t;

// Per-node opinion values, each in [0,1].
using OpinionVector = std::vector<double>;

// Directed view of one endpoint of an undirected edge. `weight` is the
// symmetric coupling weight w_{u,v}; `activation` is p_{u,v}, the probability
// that `to` reacts to content received from the owning node, and may differ
// from the reverse direction.
struct Arc {
    NodeId to;
    double weight;
    double activation;
};

struct EdgeSpec {
    NodeId u;
    NodeId v;
    double weight = 1.0;
};

struct IngestStats {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

// Undirected weighted graph with dense node ids 0..n-1 and per-directed-edge
// activation probabilities. Immutable once preprocessing is done; safe for
// concurrent reads.
class Graph {
public:
    Graph() = default;

    // Validates symmetry-by-construction: self loops and duplicate pairs are
    // rejected, weights must be positive. Labels default to decimal ids.
    static Graph build(std::size_t node_count, std::span<const EdgeSpec> edges,
                       std::vector<std::string> labels = {});

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return arcs_.size() / 2; }

    std::span<const Arc> out_arcs(NodeId u) const {
        return {arcs_.data() + offsets_[u], arcs_.data() + offsets_[u + 1]};
    }

    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
    double weighted_degree(NodeId u) const { return weighted_degree_[u]; }

    // Arc u -> v, or nullptr if the edge does not exist.
    const Arc* find_arc(NodeId u, NodeId v) const;

    double activation(NodeId u, NodeId v) const;

    void set_uniform_activation(double p);
    void set_activation(NodeId u, NodeId v, double p);

    // Source token of each node (original file ids survive remapping / LCC).
    const std::vector<std::string>& labels() const { return labels_; }

    const IngestStats& ingest_stats() const { return stats_; }

    void validate_node(NodeId u) const {
        if (u >= node_count()) throw ValidationError("node id out of range");
    }

private:
    friend Graph load_edge_list(std::istream&, double);

    std::vector<std::size_t> offsets_;   // n+1 CSR offsets
    std::vector<Arc> arcs_;              // sorted by target per node
    std::vector<double> weighted_degree_;
    std::vector<std::string> labels_;
    IngestStats stats_;
};

// Reads a whitespace-separated edge list ("u v" or "u v w" per line; '#' or
// '%' start comments). Ids are arbitrary tokens, remapped to 0..n-1 in first
// appearance order. Duplicate undirected edges collapse to the first weight,
// self loops are dropped; both are counted in ingest_stats().
Graph load_edge_list(std::istream& in, double default_weight = 1.0);

void write_edge_list(const Graph& g, std::ostream& out);

// Induced subgraph on the largest connected component (ties by smallest
// contained original id), re-densified; labels keep the original ids.
Graph largest_connected_component(const Graph& g);

// Sets p_{u,v} = 1 / degree(v) on every directed edge.
Graph assign_weighted_cascade(Graph g);

// y = L x with L = D - W.
std::vector<double> laplacian_apply(const Graph& g, std::span<const double> x);

// One value per line, exactly n of them, each in [0,1].
OpinionVector load_opinions(std::istream& in, std::size_t n);

void validate_opinions(std::span<const double> s, std::size_t n);

}  // namespace opincast
