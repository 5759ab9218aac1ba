// Regenerates the bundled synthetic datasets under data/. Both graphs are
// deterministic given the built-in seeds:
//   collab379.txt  - clustered collaboration-style graph, 379 nodes, 914 edges
//   social889.txt  - preferential-attachment graph, 889 nodes, 2914 edges

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opincast/rng.hpp"

using opincast::RngStream;

namespace {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

Edge ordered(std::uint32_t a, std::uint32_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Co-authorship style: each "paper" forms a clique whose first author is an
// existing node picked with preferential attachment and whose other authors
// are new, so the graph is connected, hub-heavy and rich in degree-1 leaves.
// Extra single collaborations top the edge count up to the exact target.
std::vector<Edge> collab_graph(std::uint32_t n, std::size_t target_m, std::uint64_t seed) {
    RngStream rng(seed);
    std::set<Edge> edges;
    std::vector<std::uint32_t> stubs{0};  // endpoint multiset, drives the bias
    std::uint32_t authors = 1;

    auto add_edge = [&](std::uint32_t a, std::uint32_t b) {
        if (a != b && edges.insert(ordered(a, b)).second) {
            stubs.push_back(a);
            stubs.push_back(b);
        }
    };

    auto busy_author = [&]() {
        // max of two stub draws: super-linear preference for the busiest
        const std::uint32_t a = stubs[rng.uniform_index(stubs.size())];
        const std::uint32_t b = stubs[rng.uniform_index(stubs.size())];
        std::size_t da = 0, db = 0;
        for (std::uint32_t s : stubs) {
            da += s == a;
            db += s == b;
        }
        return da >= db ? a : b;
    };

    while (authors < n) {
        const double roll = rng.uniform();
        std::uint32_t size = roll < 0.45 ? 2 : roll < 0.75 ? 3 : roll < 0.88 ? 4
                             : roll < 0.95 ? 5 : 6 + static_cast<std::uint32_t>(rng.uniform_index(3));
        size = std::min(size, n - authors + 1);
        std::vector<std::uint32_t> group{busy_author()};
        while (group.size() < size) group.push_back(authors++);
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j) add_edge(group[i], group[j]);
    }
    while (edges.size() < target_m)
        add_edge(stubs[rng.uniform_index(stubs.size())],
                 static_cast<std::uint32_t>(rng.uniform_index(n)));
    return {edges.begin(), edges.end()};
}

// Preferential attachment with 3 links per arrival plus extra hub edges.
std::vector<Edge> social_graph(std::uint32_t n, std::size_t target_m, std::uint64_t seed) {
    RngStream rng(seed);
    std::set<Edge> edges;
    std::vector<std::uint32_t> stubs;  // one entry per endpoint, drives the bias
    const std::uint32_t core = 4;
    for (std::uint32_t a = 0; a < core; ++a)
        for (std::uint32_t b = a + 1; b < core; ++b) {
            edges.insert({a, b});
            stubs.push_back(a);
            stubs.push_back(b);
        }
    for (std::uint32_t u = core; u < n; ++u) {
        std::set<std::uint32_t> targets;
        while (targets.size() < 3) {
            std::uint32_t t = stubs[rng.uniform_index(stubs.size())];
            if (t != u) targets.insert(t);
        }
        for (std::uint32_t t : targets) {
            edges.insert(ordered(u, t));
            stubs.push_back(u);
            stubs.push_back(t);
        }
    }
    while (edges.size() < target_m) {
        std::uint32_t a = stubs[rng.uniform_index(stubs.size())];
        std::uint32_t b = stubs[rng.uniform_index(stubs.size())];
        if (a == b) continue;
        if (edges.insert(ordered(a, b)).second) {
            stubs.push_back(a);
            stubs.push_back(b);
        }
    }
    return {edges.begin(), edges.end()};
}

void write(const std::string& path, const std::vector<Edge>& edges, const std::string& note) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << std::endl;
        std::exit(1);
    }
    out << "# " << note << "\n";
    for (const Edge& e : edges) out << e.first << ' ' << e.second << '\n';
    std::cout << path << ": " << edges.size() << " edges" << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "data";
    write(dir + "/collab379.txt", collab_graph(379, 914, 0x636f6c6c61620ULL),
          "synthetic clustered collaboration graph, 379 nodes, 914 edges");
    write(dir + "/social889.txt", social_graph(889, 2914, 0x736f6369616cULL),
          "synthetic preferential-attachment graph, 889 nodes, 2914 edges");
    return 0;
}
