#include "textnet/apps.hpp"

#include <algorithm>
#include <cmath>

namespace textnet {

Measure parse_measure(const std::string& name) {
    if (name == "degree") return Measure::Degree;
    if (name == "pagerank") return Measure::PageRank;
    if (name == "betweenness") return Measure::Betweenness;
    throw Error("unknown measure: " + name);
}

std::string measure_name(Measure m) {
    switch (m) {
    case Measure::Degree: return "degree";
    case Measure::PageRank: return "pagerank";
    case Measure::Betweenness: return "betweenness";
    }
    return "degree";
}

KeywordList extract_keywords(const CoocGraph& graph, const MetricsReport& report,
                             Measure measure, std::size_t k) {
    if (k < 1) throw Error("k must be >= 1");
    if (report.node_count != graph.node_count())
        throw Error("metrics report does not match graph");

    auto score_of = [&](const std::string& label) -> double {
        switch (measure) {
        case Measure::Degree: return static_cast<double>(report.degree.at(label));
        case Measure::PageRank: return report.pagerank.at(label);
        case Measure::Betweenness: return report.betweenness.at(label);
        }
        return 0.0;
    };

    // Node ids are first-occurrence order, which is the tie-break.
    std::vector<NodeId> ids(graph.node_count());
    for (NodeId i = 0; i < ids.size(); ++i) ids[i] = i;
    std::stable_sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
        return score_of(graph.vocabulary().label(a)) > score_of(graph.vocabulary().label(b));
    });

    KeywordList list{{}, measure};
    const std::size_t take = std::min(k, ids.size());
    list.entries.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        const auto& label = graph.vocabulary().label(ids[i]);
        list.entries.push_back({label, score_of(label)});
    }
    return list;
}

namespace {

void push_stats(FeatureVector& fv, const std::string& prefix,
                const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    double max = *std::max_element(values.begin(), values.end());

    fv.schema.push_back(prefix + "_mean");
    fv.values.push_back(mean);
    fv.schema.push_back(prefix + "_std");
    fv.values.push_back(std::sqrt(var));
    fv.schema.push_back(prefix + "_max");
    fv.values.push_back(max);
}

}  // namespace

FeatureVector feature_vector(const MetricsReport& report) {
    if (report.degree.empty()) throw Error("feature_vector requires a non-empty report");
    FeatureVector fv;
    std::vector<double> vals;
    vals.reserve(report.degree.size());

    for (const auto& [_, v] : report.degree) vals.push_back(static_cast<double>(v));
    push_stats(fv, "degree", vals);
    vals.clear();
    for (const auto& [_, v] : report.pagerank) vals.push_back(v);
    push_stats(fv, "pagerank", vals);
    vals.clear();
    for (const auto& [_, v] : report.betweenness) vals.push_back(v);
    push_stats(fv, "betweenness", vals);
    return fv;
}

}  // namespace textnet
