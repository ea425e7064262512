#pragma once

#include <string>
#include <vector>

#include "textnet/metrics.hpp"

namespace textnet {

enum class Measure { Degree, PageRank, Betweenness };

/// Parses "degree" / "pagerank" / "betweenness"; throws Error otherwise.
Measure parse_measure(const std::string& name);
std::string measure_name(Measure m);

struct KeywordEntry {
    std::string word;
    double score;
};

/// Top-k ranking sorted by score descending; ties broken by first
/// occurrence in the source text.
struct KeywordList {
    std::vector<KeywordEntry> entries;
    Measure measure;
};

/// Keyword extraction by centrality ranking. k past the node count just
/// returns every node. Throws Error if k < 1 or report and graph disagree.
KeywordList extract_keywords(const CoocGraph& graph, const MetricsReport& report,
                             Measure measure, std::size_t k);

/// Fixed stylometric feature schema: [mean, std, max] of degree, then
/// pagerank, then betweenness (population standard deviation).
struct FeatureVector {
    std::vector<double> values;
    std::vector<std::string> schema;
};

FeatureVector feature_vector(const MetricsReport& report);

}  // namespace textnet
