#include "opincast/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace opincast {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
}

}  // namespace

Graph Graph::build(std::size_t node_count, std::span<const EdgeSpec> edges,
                   std::vector<std::string> labels) {
    Graph g;
    std::vector<std::size_t> deg(node_count, 0);
    std::unordered_map<std::uint64_t, bool> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        if (e.u >= node_count || e.v >= node_count)
            throw ValidationError("edge endpoint out of range");
        if (e.u == e.v) throw ValidationError("self loop");
        if (!(e.weight > 0.0)) throw ValidationError("non-positive edge weight");
        if (!seen.emplace(pair_key(e.u, e.v), true).second)
            throw ValidationError("duplicate edge");
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t u = 0; u < node_count; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.arcs_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : edges) {
        g.arcs_[cursor[e.u]++] = Arc{e.v, e.weight, 0.0};
        g.arcs_[cursor[e.v]++] = Arc{e.u, e.weight, 0.0};
    }
    for (std::size_t u = 0; u < node_count; ++u) {
        auto begin = g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
        auto end = g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
        std::sort(begin, end, [](const Arc& a, const Arc& b) { return a.to < b.to; });
    }
    g.weighted_degree_.assign(node_count, 0.0);
    for (std::size_t u = 0; u < node_count; ++u) {
        double sum = 0.0;
        for (const Arc& a : g.out_arcs(static_cast<NodeId>(u))) sum += a.weight;
        g.weighted_degree_[u] = sum;
    }
    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t u = 0; u < node_count; ++u) labels.push_back(std::to_string(u));
    } else if (labels.size() != node_count) {
        throw ValidationError("label count does not match node count");
    }
    g.labels_ = std::move(labels);
    return g;
}

const Arc* Graph::find_arc(NodeId u, NodeId v) const {
    auto arcs = out_arcs(u);
    auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                               [](const Arc& a, NodeId id) { return a.to < id; });
    if (it == arcs.end() || it->to != v) return nullptr;
    return &*it;
}

double Graph::activation(NodeId u, NodeId v) const {
    const Arc* arc = find_arc(u, v);
    if (!arc) throw ValidationError("no such edge");
    return arc->activation;
}

void Graph::set_uniform_activation(double p) {
    if (p < 0.0 || p > 1.0) throw ValidationError("activation probability out of [0,1]");
    for (Arc& a : arcs_) a.activation = p;
}

void Graph::set_activation(NodeId u, NodeId v, double p) {
    if (p < 0.0 || p > 1.0) throw ValidationError("activation probability out of [0,1]");
    validate_node(u);
    auto arcs = out_arcs(u);
    auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                               [](const Arc& a, NodeId id) { return a.to < id; });
    if (it == arcs.end() || it->to != v) throw ValidationError("no such edge");
    arcs_[offsets_[u] + static_cast<std::size_t>(it - arcs.begin())].activation = p;
}

Graph load_edge_list(std::istream& in, double default_weight) {
    if (!(default_weight > 0.0)) throw ValidationError("default weight must be positive");

    std::unordered_map<std::string, NodeId> id_of;
    std::vector<std::string> labels;
    std::vector<EdgeSpec> edges;
    std::unordered_map<std::uint64_t, bool> seen;
    IngestStats stats;

    auto intern = [&](const std::string& token) -> NodeId {
        auto [it, inserted] = id_of.emplace(token, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;

        std::istringstream fields(line);
        std::string tu, tv;
        if (!(fields >> tu >> tv))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v [w]'");
        double w = default_weight;
        std::string tw;
        if (fields >> tw) {
            try {
                std::size_t used = 0;
                w = std::stod(tw, &used);
                if (used != tw.size()) throw std::invalid_argument(tw);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + tw + "'");
            }
            std::string extra;
            if (fields >> extra)
                throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
        }
        if (!(w > 0.0) || !std::isfinite(w))
            throw ValidationError("line " + std::to_string(line_no) + ": non-positive weight");

        const NodeId u = intern(tu);
        const NodeId v = intern(tv);
        if (u == v) {
            ++stats.self_loops;
            continue;
        }
        if (!seen.emplace(pair_key(u, v), true).second) {
            ++stats.duplicate_edges;  // first weight wins
            continue;
        }
        edges.push_back(EdgeSpec{u, v, w});
    }

    const std::size_t n = labels.size();
    Graph g = Graph::build(n, edges, std::move(labels));
    g.stats_ = stats;
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out.precision(17);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (const Arc& a : g.out_arcs(u))
            if (a.to > u) out << g.labels()[u] << ' ' << g.labels()[a.to] << ' ' << a.weight << '\n';
}

Graph largest_connected_component(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw ValidationError("empty graph");

    std::vector<NodeId> component(n, static_cast<NodeId>(n));
    std::vector<std::size_t> comp_size;
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (component[start] != n) continue;
        const NodeId c = static_cast<NodeId>(comp_size.size());
        comp_size.push_back(0);
        stack.push_back(start);
        component[start] = c;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            ++comp_size[c];
            for (const Arc& a : g.out_arcs(u)) {
                if (component[a.to] == n) {
                    component[a.to] = c;
                    stack.push_back(a.to);
                }
            }
        }
    }

    // Largest component; ties go to the one holding the smallest node id,
    // which is the first one discovered at that size.
    NodeId best = 0;
    for (NodeId c = 1; c < comp_size.size(); ++c)
        if (comp_size[c] > comp_size[best]) best = c;

    std::vector<NodeId> remap(n, static_cast<NodeId>(n));
    std::vector<std::string> labels;
    labels.reserve(comp_size[best]);
    for (NodeId u = 0; u < n; ++u) {
        if (component[u] == best) {
            remap[u] = static_cast<NodeId>(labels.size());
            labels.push_back(g.labels()[u]);
        }
    }

    std::vector<EdgeSpec> edges;
    for (NodeId u = 0; u < n; ++u) {
        if (component[u] != best) continue;
        for (const Arc& a : g.out_arcs(u))
            if (a.to > u) edges.push_back(EdgeSpec{remap[u], remap[a.to], a.weight});
    }
    const std::size_t lcc_n = labels.size();
    return Graph::build(lcc_n, edges, std::move(labels));
}

Graph assign_weighted_cascade(Graph g) {
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (g.degree(u) == 0) throw ValidationError("isolated node in weighted-cascade setup");
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (const Arc& a : g.out_arcs(u))
            g.set_activation(u, a.to, 1.0 / static_cast<double>(g.degree(a.to)));
    return g;
}

std::vector<double> laplacian_apply(const Graph& g, std::span<const double> x) {
    const std::size_t n = g.node_count();
    if (x.size() != n) throw ValidationError("vector length does not match node count");
    std::vector<double> y(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
        double acc = 0.0;
        for (const Arc& a : g.out_arcs(u)) acc += a.weight * (x[u] - x[a.to]);
        y[u] = acc;
    }
    return y;
}

OpinionVector load_opinions(std::istream& in, std::size_t n) {
    OpinionVector s;
    s.reserve(n);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;
        try {
            s.push_back(std::stod(line));
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad opinion value");
        }
    }
    validate_opinions(s, n);
    return s;
}

void validate_opinions(std::span<const double> s, std::size_t n) {
    if (s.size() != n) throw ValidationError("opinion vector length does not match node count");
    for (double v : s)
        if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("opinion value out of [0,1]");
}

}  // namespace opincast
