#pragma once

#include <iosfwd>
#include <string>

#include "textnet/graph.hpp"

namespace textnet {

enum class GraphFormat { Edgelist, Graphml, Dot };

/// Parses a format name ("edgelist", "graphml", "dot"); throws Error otherwise.
GraphFormat parse_graph_format(const std::string& name);

/// Serializes the graph.
///
/// edgelist: a `# nodes: <labels in vocabulary order>` header comment
/// followed by one `label_u<TAB>label_v` line per edge, edges ordered by
/// ascending node-id pair. graphml/dot: standard documents with the word
/// label as a node attribute.
void export_graph(const CoocGraph& graph, GraphFormat format, std::ostream& out);
std::string export_graph(const CoocGraph& graph, GraphFormat format);

/// Reads the edgelist format back into a graph. Occurrence counts are not
/// stored in the format and come back as 1 per node.
CoocGraph read_edgelist(std::istream& in);
CoocGraph read_edgelist_string(const std::string& text);

}  // namespace textnet
