#include "textnet/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <queue>
#include <vector>

namespace textnet {

std::map<std::string, std::size_t> degree(const CoocGraph& graph) {
    std::map<std::string, std::size_t> out;
    for (NodeId i = 0; i < graph.node_count(); ++i)
        out[graph.vocabulary().label(i)] = graph.degree_of(i);
    return out;
}

std::map<std::string, double> pagerank(const CoocGraph& graph,
                                       const PageRankParams& params) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw Error("pagerank requires a non-empty graph");
    if (params.damping < 0.0 || params.damping >= 1.0)
        throw Error("damping must lie in [0, 1)");
    if (params.tolerance <= 0.0 || params.max_iterations < 1)
        throw Error("invalid pagerank parameters");

    const double d = params.damping;
    std::vector<double> rank(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (int it = 0; it < params.max_iterations; ++it) {
        double dangling = 0.0;
        for (NodeId v = 0; v < n; ++v)
            if (graph.degree_of(v) == 0) dangling += rank[v];
        const double base = (1.0 - d) / static_cast<double>(n) +
                            d * dangling / static_cast<double>(n);
        for (NodeId v = 0; v < n; ++v) {
            double sum = 0.0;
            for (NodeId u : graph.adjacency()[v])
                sum += rank[u] / static_cast<double>(graph.degree_of(u));
            next[v] = base + d * sum;
        }
        double delta = 0.0;
        for (NodeId v = 0; v < n; ++v) delta += std::abs(next[v] - rank[v]);
        rank.swap(next);
        if (delta < params.tolerance) break;
    }

    std::map<std::string, double> out;
    for (NodeId v = 0; v < n; ++v) out[graph.vocabulary().label(v)] = rank[v];
    return out;
}

std::map<std::string, double> betweenness(const CoocGraph& graph) {
    const std::size_t n = graph.node_count();
    std::vector<double> score(n, 0.0);

    // One BFS per source; the pair-once convention halves the undirected total.
    std::vector<int> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<NodeId>> pred(n);
    std::vector<NodeId> order;
    order.reserve(n);
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : pred) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        std::queue<NodeId> q;
        q.push(s);
        while (!q.empty()) {
            NodeId v = q.front();
            q.pop();
            order.push_back(v);
            for (NodeId w : graph.adjacency()[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (NodeId v : pred[w])
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) score[w] += delta[w];
        }
    }

    std::map<std::string, double> out;
    for (NodeId v = 0; v < n; ++v) out[graph.vocabulary().label(v)] = score[v] / 2.0;
    return out;
}

MetricsReport compute_report(const CoocGraph& graph, const PageRankParams& params) {
    if (graph.node_count() == 0) throw Error("cannot compute metrics of an empty graph");
    MetricsReport report;
    report.degree = degree(graph);
    report.pagerank = pagerank(graph, params);
    report.betweenness = betweenness(graph);
    report.node_count = graph.node_count();
    report.edge_count = graph.edge_count();
    return report;
}

}  // namespace textnet
