#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "paper_example.hpp"
#include "textnet/graph.hpp"
#include "textnet/graph_io.hpp"

using namespace textnet;

namespace {

std::set<std::pair<std::string, std::string>> label_edges(const CoocGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) {
        std::string a = g.vocabulary().label(u);
        std::string b = g.vocabulary().label(v);
        if (a > b) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

}  // namespace

TEST_CASE("get_neighbors clips at both boundaries") {
    std::vector<std::string> words = {"today", "we", "are", "learning"};
    CHECK(get_neighbors(words, 0, 2) == std::vector<std::string>{"we", "are"});
    CHECK(get_neighbors({"a", "b", "c"}, 1, 1) == std::vector<std::string>{"a", "c"});
    CHECK(get_neighbors(fixture::kTokens, 3, 2) ==
          std::vector<std::string>{"we", "are", "some", "concepts"});
    CHECK(get_neighbors(words, 3, 2) == std::vector<std::string>{"we", "are"});

    CHECK_THROWS_AS(get_neighbors(words, 4, 1), Error);
    CHECK_THROWS_AS(get_neighbors(words, 0, 0), Error);
}

TEST_CASE("build_graph reproduces the reference sentence structure") {
    auto g = build_graph(fixture::kTokens, 2);
    CHECK(g.node_count() == 11);
    CHECK(g.edge_count() == 21);
    CHECK(label_edges(g) == fixture::expected_edges());
    // first-occurrence vocabulary order
    CHECK(g.vocabulary().label(0) == "today");
    CHECK(g.vocabulary().label(10) == "machine");
    CHECK(g.occurrences(g.vocabulary().id_of("learning")) == 2);
}

TEST_CASE("build_graph basics") {
    SUBCASE("w=1 gives a path graph") {
        auto g = build_graph({"a", "b", "c"}, 1);
        CHECK(g.node_count() == 3);
        CHECK(label_edges(g) ==
              std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
    }
    SUBCASE("repeated words deduplicate and never self-link") {
        auto g = build_graph({"x", "y", "x"}, 1);
        CHECK(g.node_count() == 2);
        CHECK(g.edge_count() == 1);
        CHECK(g.has_edge(0, 1));

        auto h = build_graph({"x", "x"}, 1);
        CHECK(h.node_count() == 1);
        CHECK(h.edge_count() == 0);
    }
    SUBCASE("empty sequence gives an empty graph") {
        auto g = build_graph({}, 1);
        CHECK(g.node_count() == 0);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("w < 1 is rejected") {
        CHECK_THROWS_AS(build_graph({"a"}, 0), Error);
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 100; ++iter) {
        auto words = oracle::random_sequence(rng, 12, 6);
        int w = 1 + static_cast<int>(rng() % 3);
        auto g = build_graph(words, w);
        std::size_t total = 0;
        for (NodeId i = 0; i < g.node_count(); ++i) total += g.degree_of(i);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("w=1 on distinct words is the path graph") {
    std::vector<std::string> words;
    for (char c = 'a'; c <= 'j'; ++c) words.emplace_back(1, c);
    auto g = build_graph(words, 1);
    CHECK(g.node_count() == 10);
    CHECK(g.edge_count() == 9);
    for (NodeId i = 0; i + 1 < 10; ++i) CHECK(g.has_edge(i, i + 1));
}

TEST_CASE("edge sets grow monotonically with the window") {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 100; ++iter) {
        auto words = oracle::random_sequence(rng, 12, 6);
        for (int w = 1; w <= 3; ++w) {
            auto small = label_edges(build_graph(words, w));
            auto large = label_edges(build_graph(words, w + 1));
            CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
    }
}

TEST_CASE("build_graph matches the brute-force window definition") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 200; ++iter) {
        auto words = oracle::random_sequence(rng, 12, 6);
        int w = 1 + static_cast<int>(rng() % 4);
        CHECK(label_edges(build_graph(words, w)) == oracle::window_edges(words, w));
    }
}

TEST_CASE("build_graph is deterministic") {
    auto a = build_graph(fixture::kTokens, 2);
    auto b = build_graph(fixture::kTokens, 2);
    CHECK(a.vocabulary().labels() == b.vocabulary().labels());
    CHECK(a.edges() == b.edges());
}

TEST_CASE("edgelist export layout") {
    auto g = build_graph({"a", "b", "c"}, 1);
    CHECK(export_graph(g, GraphFormat::Edgelist) ==
          "# nodes: a b c\na\tb\nb\tc\n");

    auto paper = build_graph(fixture::kTokens, 2);
    auto text = export_graph(paper, GraphFormat::Edgelist);
    CHECK(std::count(text.begin(), text.end(), '\n') == 22);  // header + 21 edges

    auto empty = build_graph({}, 1);
    CHECK(export_graph(empty, GraphFormat::Edgelist) == "# nodes:\n");
}

TEST_CASE("graphml and dot are well-formed") {
    auto g = build_graph({"a", "b"}, 1);
    auto gml = export_graph(g, GraphFormat::Graphml);
    CHECK(gml.find("<graphml") != std::string::npos);
    CHECK(gml.find("edgedefault=\"undirected\"") != std::string::npos);
    CHECK(gml.find("<edge id=\"e0\" source=\"n0\" target=\"n1\"/>") != std::string::npos);

    auto dot = export_graph(g, GraphFormat::Dot);
    CHECK(dot.find("graph cooc {") != std::string::npos);
    CHECK(dot.find("n0 -- n1;") != std::string::npos);

    SUBCASE("labels are escaped") {
        auto q = build_graph({"a\"b", "c&d"}, 1);
        CHECK(export_graph(q, GraphFormat::Graphml).find("c&amp;d") != std::string::npos);
        CHECK(export_graph(q, GraphFormat::Dot).find("a\\\"b") != std::string::npos);
    }
}

TEST_CASE("parse_graph_format") {
    CHECK(parse_graph_format("edgelist") == GraphFormat::Edgelist);
    CHECK(parse_graph_format("graphml") == GraphFormat::Graphml);
    CHECK(parse_graph_format("dot") == GraphFormat::Dot);
    CHECK_THROWS_AS(parse_graph_format("yaml"), Error);
}

TEST_CASE("edgelist round-trip preserves the labeled edge set") {
    std::mt19937 rng(37);
    for (int iter = 0; iter < 100; ++iter) {
        auto words = oracle::random_sequence(rng, 12, 6);
        auto g = build_graph(words, 1 + static_cast<int>(rng() % 3));
        auto back = read_edgelist_string(export_graph(g, GraphFormat::Edgelist));
        CHECK(back.node_count() == g.node_count());
        CHECK(label_edges(back) == label_edges(g));
    }
    CHECK_THROWS_AS(read_edgelist_string("only_one_column\n"), Error);
    CHECK_THROWS_AS(read_edgelist_string("a\ta\n"), Error);
}
