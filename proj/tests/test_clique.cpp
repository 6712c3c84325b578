#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "visemap/clique.hpp"

using namespace visemap;

namespace {

ConfusionGraph graph_from_edges(const std::vector<std::string>& vertices,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
    ConfusionGraph g;
    g.vertices = vertices;
    std::sort(g.vertices.begin(), g.vertices.end());
    g.weight.assign(g.vertices.size(), std::vector<std::int64_t>(g.vertices.size(), 0));
    for (const auto& [a, b] : edges) {
        g.weight[g.index_of(a)][g.index_of(b)] = 1;
        g.weight[g.index_of(b)][g.index_of(a)] = 1;
    }
    return g;
}

}  // namespace

TEST_CASE("complete graph is its own maximum clique") {
    auto g = graph_from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(max_clique(g, g.vertices) == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("edgeless candidates give the lexicographically first singleton") {
    auto g = graph_from_edges({"a", "b"}, {});
    CHECK(max_clique(g, {"a", "b"}) == std::vector<std::string>{"a"});
    CHECK(max_clique(g, {"b"}) == std::vector<std::string>{"b"});
}

TEST_CASE("empty candidate set gives an empty clique") {
    auto g = graph_from_edges({"a", "b"}, {{"a", "b"}});
    CHECK(max_clique(g, {}).empty());
}

TEST_CASE("ties resolve to the lexicographically smallest clique") {
    // two disjoint 2-cliques: {c,d} and {a,b}; {a,b} sorts first
    auto g = graph_from_edges({"a", "b", "c", "d"}, {{"c", "d"}, {"a", "b"}});
    CHECK(max_clique(g, g.vertices) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("candidates restrict the search") {
    auto g = graph_from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(max_clique(g, {"b", "c"}) == std::vector<std::string>{"b", "c"});
}

TEST_CASE("random graphs match the exhaustive oracle") {
    std::mt19937 rng(101);
    std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
    for (double density : {0.1, 0.3, 0.6, 0.9}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto m = oracle::random_confusion(rng, labels, density);
            auto g = to_graph(m);
            auto expected = oracle::brute_force_max_clique(g, g.vertices);
            auto actual = max_clique(g, g.vertices);
            CAPTURE(density, trial);
            CHECK(actual == expected);
        }
    }
}
