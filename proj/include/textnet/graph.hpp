#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "textnet/token.hpp"

namespace textnet {

using NodeId = std::uint32_t;

/// Distinct words in first-occurrence order, with a word -> id index.
class Vocabulary {
public:
    /// Returns the id for `word`, inserting it if new.
    NodeId intern(const std::string& word);

    /// Id lookup; throws Error for unknown words.
    NodeId id_of(const std::string& word) const;
    bool contains(const std::string& word) const;

    const std::string& label(NodeId id) const { return labels_.at(id); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

/// Undirected simple word co-occurrence graph. No self-loops, no duplicate
/// edges; immutable once built.
class CoocGraph {
public:
    CoocGraph() = default;
    CoocGraph(Vocabulary vocab, std::set<std::pair<NodeId, NodeId>> edges,
              std::vector<std::uint64_t> occurrence_counts, int window);

    std::size_t node_count() const { return vocab_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    int window() const { return window_; }
    const Vocabulary& vocabulary() const { return vocab_; }

    /// Edges as (min id, max id) pairs in ascending order.
    const std::set<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    bool has_edge(NodeId u, NodeId v) const;

    /// Adjacency lists; neighbor ids sorted ascending.
    const std::vector<std::vector<NodeId>>& adjacency() const { return adjacency_; }
    std::size_t degree_of(NodeId id) const { return adjacency_.at(id).size(); }

    std::uint64_t occurrences(NodeId id) const { return occurrence_counts_.at(id); }

private:
    Vocabulary vocab_;
    std::set<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::uint64_t> occurrence_counts_;
    int window_ = 1;
};

/// The words at distance <= w on both sides of `index`, clipped to the
/// sequence bounds. Throws Error if index is out of range or w < 1.
std::vector<std::string> get_neighbors(const std::vector<std::string>& word_list,
                                       std::size_t index, int w);

/// Links every pair of distinct words whose occurrences are within
/// distance w of each other. An empty sequence yields an empty graph.
CoocGraph build_graph(const std::vector<std::string>& words, int w);

}  // namespace textnet
