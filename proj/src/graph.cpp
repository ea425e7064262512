#include "textnet/graph.hpp"

#include <algorithm>

namespace textnet {

NodeId Vocabulary::intern(const std::string& word) {
    auto [it, inserted] = index_.try_emplace(word, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(word);
    return it->second;
}

NodeId Vocabulary::id_of(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) throw Error("unknown word: " + word);
    return it->second;
}

bool Vocabulary::contains(const std::string& word) const {
    return index_.count(word) > 0;
}

CoocGraph::CoocGraph(Vocabulary vocab, std::set<std::pair<NodeId, NodeId>> edges,
                     std::vector<std::uint64_t> occurrence_counts, int window)
    : vocab_(std::move(vocab)),
      edges_(std::move(edges)),
      occurrence_counts_(std::move(occurrence_counts)),
      window_(window) {
    adjacency_.resize(vocab_.size());
    for (auto [u, v] : edges_) {
        adjacency_.at(u).push_back(v);
        adjacency_.at(v).push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool CoocGraph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<std::string> get_neighbors(const std::vector<std::string>& word_list,
                                       std::size_t index, int w) {
    if (w < 1) throw Error("window size must be >= 1");
    if (index >= word_list.size()) throw Error("index out of range");
    std::vector<std::string> neighbors;
    std::size_t lo = index >= static_cast<std::size_t>(w) ? index - w : 0;
    std::size_t hi = std::min(word_list.size() - 1, index + static_cast<std::size_t>(w));
    for (std::size_t i = lo; i <= hi; ++i)
        if (i != index) neighbors.push_back(word_list[i]);
    return neighbors;
}

CoocGraph build_graph(const std::vector<std::string>& words, int w) {
    if (w < 1) throw Error("window size must be >= 1");
    Vocabulary vocab;
    std::vector<NodeId> ids;
    ids.reserve(words.size());
    for (const auto& word : words) ids.push_back(vocab.intern(word));

    std::vector<std::uint64_t> counts(vocab.size(), 0);
    for (NodeId id : ids) ++counts[id];

    std::set<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        std::size_t hi = std::min(ids.size(), i + 1 + static_cast<std::size_t>(w));
        for (std::size_t j = i + 1; j < hi; ++j) {
            if (ids[i] == ids[j]) continue;  // repeated word, no self-loop
            edges.emplace(std::min(ids[i], ids[j]), std::max(ids[i], ids[j]));
        }
    }
    return CoocGraph(std::move(vocab), std::move(edges), std::move(counts), w);
}

}  // namespace textnet
