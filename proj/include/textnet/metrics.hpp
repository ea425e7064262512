#pragma once

#include <map>
#include <string>

#include "textnet/graph.hpp"

namespace textnet {

struct PageRankParams {
    double damping = 0.85;        // teleportation is uniform
    double tolerance = 1e-10;     // L1 change per iteration
    int max_iterations = 200;
};

struct MetricsReport {
    std::map<std::string, std::size_t> degree;
    std::map<std::string, double> pagerank;
    std::map<std::string, double> betweenness;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
};

/// Incident-edge count per node.
std::map<std::string, std::size_t> degree(const CoocGraph& graph);

/// Power iteration with uniform teleportation; values sum to 1. Nodes of
/// degree zero spread their mass uniformly (dangling handling).
/// Throws Error on an empty graph or parameters out of range.
std::map<std::string, double> pagerank(const CoocGraph& graph,
                                       const PageRankParams& params = {});

/// Brandes' algorithm, unweighted undirected, unnormalized; each unordered
/// node pair counted once, endpoints excluded, equal-length shortest paths
/// share credit fractionally.
std::map<std::string, double> betweenness(const CoocGraph& graph);

/// All three measures plus the graph counts. Throws on an empty graph.
MetricsReport compute_report(const CoocGraph& graph, const PageRankParams& params = {});

}  // namespace textnet
