#include "textnet/graph_io.hpp"

#include <ostream>
#include <sstream>

namespace textnet {
namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

void write_edgelist(const CoocGraph& g, std::ostream& out) {
    out << "# nodes:";
    for (const auto& label : g.vocabulary().labels()) out << ' ' << label;
    out << '\n';
    for (auto [u, v] : g.edges())
        out << g.vocabulary().label(u) << '\t' << g.vocabulary().label(v) << '\n';
}

void write_graphml(const CoocGraph& g, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (NodeId i = 0; i < g.node_count(); ++i)
        out << "    <node id=\"n" << i << "\"><data key=\"d0\">"
            << xml_escape(g.vocabulary().label(i)) << "</data></node>\n";
    std::size_t e = 0;
    for (auto [u, v] : g.edges())
        out << "    <edge id=\"e" << e++ << "\" source=\"n" << u
            << "\" target=\"n" << v << "\"/>\n";
    out << "  </graph>\n</graphml>\n";
}

void write_dot(const CoocGraph& g, std::ostream& out) {
    out << "graph cooc {\n";
    for (NodeId i = 0; i < g.node_count(); ++i)
        out << "  n" << i << " [label=\"" << dot_escape(g.vocabulary().label(i))
            << "\"];\n";
    for (auto [u, v] : g.edges()) out << "  n" << u << " -- n" << v << ";\n";
    out << "}\n";
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::Edgelist;
    if (name == "graphml") return GraphFormat::Graphml;
    if (name == "dot") return GraphFormat::Dot;
    throw Error("unknown graph format: " + name);
}

void export_graph(const CoocGraph& graph, GraphFormat format, std::ostream& out) {
    switch (format) {
    case GraphFormat::Edgelist: write_edgelist(graph, out); break;
    case GraphFormat::Graphml: write_graphml(graph, out); break;
    case GraphFormat::Dot: write_dot(graph, out); break;
    }
    if (!out) throw Error("graph export failed: write error");
}

std::string export_graph(const CoocGraph& graph, GraphFormat format) {
    std::ostringstream out;
    export_graph(graph, format, out);
    return out.str();
}

CoocGraph read_edgelist(std::istream& in) {
    Vocabulary vocab;
    std::set<std::pair<NodeId, NodeId>> edges;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string prefix = "# nodes:";
            if (line.compare(0, prefix.size(), prefix) == 0) {
                std::istringstream nodes(line.substr(prefix.size()));
                std::string label;
                while (nodes >> label) vocab.intern(label);
            }
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
            throw Error("malformed edgelist line: " + line);
        NodeId u = vocab.intern(line.substr(0, tab));
        NodeId v = vocab.intern(line.substr(tab + 1));
        if (u == v) throw Error("edgelist contains a self-loop: " + line);
        edges.emplace(std::min(u, v), std::max(u, v));
    }
    std::vector<std::uint64_t> counts(vocab.size(), 1);
    return CoocGraph(std::move(vocab), std::move(edges), std::move(counts), 1);
}

CoocGraph read_edgelist_string(const std::string& text) {
    std::istringstream in(text);
    return read_edgelist(in);
}

}  // namespace textnet
