#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "paper_example.hpp"
#include "textnet/metrics.hpp"

using namespace textnet;

namespace {

std::vector<double> sorted_values(const std::map<std::string, double>& m) {
    std::vector<double> v;
    for (const auto& [_, x] : m) v.push_back(x);
    std::sort(v.begin(), v.end());
    return v;
}

CoocGraph paper_graph() { return build_graph(fixture::kTokens, 2); }

CoocGraph cycle_graph(std::size_t n) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; ++i) words.push_back("c" + std::to_string(i));
    words.push_back(words[0]);  // close the cycle at w=1
    return build_graph(words, 1);
}

CoocGraph star_graph(std::size_t leaves) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < leaves; ++i) {
        words.push_back("hub");
        words.push_back("leaf" + std::to_string(i));
    }
    return build_graph(words, 1);
}

}  // namespace

TEST_CASE("degree on the reference graph") {
    auto d = degree(paper_graph());
    std::vector<std::size_t> multiset;
    for (const auto& [_, v] : d) multiset.push_back(v);
    std::sort(multiset.begin(), multiset.end());
    CHECK(multiset == fixture::kDegreeMultiset);
    CHECK(d.at("learning") == 6);
    CHECK(d.at("today") == 2);
}

TEST_CASE("degree of an isolated node is zero") {
    auto g = build_graph({"solo"}, 1);
    CHECK(degree(g) == std::map<std::string, std::size_t>{{"solo", 0}});
}

TEST_CASE("pagerank symmetry cases") {
    SUBCASE("cycle graph is exactly uniform") {
        auto pr = pagerank(cycle_graph(7));
        for (const auto& [_, v] : pr) CHECK(v == 1.0 / 7.0);
    }
    SUBCASE("two-node single edge splits evenly") {
        auto pr = pagerank(build_graph({"a", "b"}, 1));
        CHECK(pr.at("a") == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(pr.at("b") == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("pagerank on the reference graph matches the published rounding") {
    auto pr = pagerank(paper_graph());
    double sum = 0.0;
    for (const auto& [_, v] : pr) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    auto sorted = sorted_values(pr);
    REQUIRE(sorted.size() == fixture::kPageRankSorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        CHECK(std::abs(sorted[i] - fixture::kPageRankSorted[i]) <= 0.01);
    auto max_it = std::max_element(pr.begin(), pr.end(),
                                   [](auto& a, auto& b) { return a.second < b.second; });
    CHECK(max_it->first == "learning");
}

TEST_CASE("pagerank argument validation") {
    CHECK_THROWS_AS(pagerank(build_graph({}, 1)), Error);
    PageRankParams bad;
    bad.damping = 1.0;
    CHECK_THROWS_AS(pagerank(build_graph({"a", "b"}, 1), bad), Error);
    bad = {};
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(pagerank(build_graph({"a", "b"}, 1), bad), Error);
}

TEST_CASE("pagerank properties on random graphs") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 100; ++iter) {
        auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        auto g = oracle::as_graph(n, oracle::random_connected_graph(rng, n));
        auto pr = pagerank(g);
        double sum = 0.0;
        for (const auto& [_, v] : pr) {
            CHECK(v > 0.0);
            sum += v;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("pagerank handles disconnected graphs and isolated nodes") {
    // two components plus an isolated word
    auto g = build_graph({"a", "b", "a", "solo", "solo", "c", "d", "c"}, 1);
    auto pr = pagerank(g);
    double sum = 0.0;
    for (const auto& [_, v] : pr) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pr.at("solo") > 0.0);
}

TEST_CASE("betweenness basics") {
    SUBCASE("middle of a path") {
        auto b = betweenness(build_graph({"a", "b", "c"}, 1));
        CHECK(b.at("b") == doctest::Approx(1.0));
        CHECK(b.at("a") == doctest::Approx(0.0));
        CHECK(b.at("c") == doctest::Approx(0.0));
    }
    SUBCASE("star center counts every leaf pair once") {
        auto b = betweenness(star_graph(4));
        CHECK(b.at("hub") == doctest::Approx(6.0));  // C(4,2)
        CHECK(b.at("leaf0") == doctest::Approx(0.0));
    }
    SUBCASE("nodes whose neighborhood is a clique score zero") {
        // d attaches to the triangle a-b-c; nothing routes through d
        auto g = build_graph({"a", "b", "c", "a", "d", "b"}, 2);
        REQUIRE(g.has_edge(g.vocabulary().id_of("a"), g.vocabulary().id_of("b")));
        auto b = betweenness(g);
        CHECK(b.at("d") == doctest::Approx(0.0));
    }
}

TEST_CASE("betweenness on the reference graph matches the published multiset") {
    auto b = betweenness(paper_graph());
    auto sorted = sorted_values(b);
    REQUIRE(sorted.size() == fixture::kBetweennessSorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        CHECK(std::abs(sorted[i] - fixture::kBetweennessSorted[i]) <= 0.01);
}

TEST_CASE("Brandes equals the brute-force oracle") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 200; ++iter) {
        auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        auto edges = oracle::random_connected_graph(rng, n);
        auto g = oracle::as_graph(n, edges);
        auto fast = betweenness(g);
        auto slow = oracle::betweenness(n, edges);
        for (std::size_t v = 0; v < n; ++v)
            CHECK(std::abs(fast.at(g.vocabulary().label(v)) - slow[v]) < 1e-9);
    }
}

TEST_CASE("betweenness over disconnected graphs works per component") {
    // two disjoint paths: a-b-c and x-y-z
    Vocabulary vocab;
    for (const char* w : {"a", "b", "c", "x", "y", "z"}) vocab.intern(w);
    CoocGraph g(std::move(vocab), {{0, 1}, {1, 2}, {3, 4}, {4, 5}},
                std::vector<std::uint64_t>(6, 1), 1);
    auto b = betweenness(g);
    CHECK(b.at("b") == doctest::Approx(1.0));
    CHECK(b.at("y") == doctest::Approx(1.0));
    CHECK(b.at("a") == doctest::Approx(0.0));
}

TEST_CASE("compute_report bundles everything") {
    auto report = compute_report(paper_graph());
    CHECK(report.node_count == 11);
    CHECK(report.edge_count == 21);
    CHECK(report.degree.size() == 11);
    CHECK(report.pagerank.size() == 11);
    CHECK(report.betweenness.size() == 11);

    auto single = compute_report(build_graph({"a", "b"}, 1));
    CHECK(single.degree.at("a") == 1);
    CHECK(single.pagerank.at("a") == doctest::Approx(0.5));
    CHECK(single.betweenness.at("a") == doctest::Approx(0.0));

    CHECK_THROWS_AS(compute_report(build_graph({}, 1)), Error);
}

TEST_CASE("adding an edge never decreases a degree") {
    std::mt19937 rng(47);
    for (int iter = 0; iter < 50; ++iter) {
        auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        auto edges = oracle::random_connected_graph(rng, n);
        auto before = degree(oracle::as_graph(n, edges));
        // add one edge not already present, if any is free
        bool added = false;
        for (NodeId u = 0; u < n && !added; ++u)
            for (NodeId v = u + 1; v < n && !added; ++v)
                if (!edges.count({u, v})) {
                    edges.insert({u, v});
                    added = true;
                }
        if (!added) continue;
        auto after = degree(oracle::as_graph(n, edges));
        for (const auto& [label, d] : before) CHECK(after.at(label) >= d);
    }
}

TEST_CASE("metric computation is deterministic") {
    auto a = compute_report(paper_graph());
    auto b = compute_report(paper_graph());
    CHECK(a.pagerank == b.pagerank);
    CHECK(a.betweenness == b.betweenness);
}
