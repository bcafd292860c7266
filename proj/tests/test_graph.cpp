#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfmis/graph.hpp"
#include "sfmis/rng.hpp"

using namespace sfmis;

namespace {

using Edges = std::vector<std::pair<int, int>>;

Graph path_graph(int n) {
  Edges es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  Edges es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  Edges es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
  Edges es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Graph::from_edges(leaves + 1, es);
}

Graph petersen() {
  Edges es = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
              {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
              {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
  return Graph::from_edges(10, es);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Edges es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < p) es.push_back({i, j});
  return Graph::from_edges(n, es);
}

// Independent distance oracle: Floyd-Warshall over the adjacency matrix.
std::vector<std::vector<int>> apsp(const Graph& g) {
  const int n = g.n();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int v = 0; v < n; ++v)
    for (int u : g.adj[v]) d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 1}}), std::out_of_range);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("degrees and edge queries") {
  Graph star = star_graph(4);
  CHECK(star.degree(0) == 4);
  CHECK(star.degree(1) == 1);
  CHECK(star.max_degree() == 4);
  CHECK(star.m == 4);
  CHECK(star.has_edge(0, 3));
  CHECK(star.has_edge(3, 0));
  CHECK_FALSE(star.has_edge(1, 2));

  Graph c5 = cycle_graph(5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  Graph iso = Graph::from_edges(3, {});
  CHECK(iso.degree(2) == 0);
  CHECK(iso.max_degree() == 0);
}

TEST_CASE("adjacency lists are sorted ascending") {
  Graph g = Graph::from_edges(5, {{3, 1}, {3, 0}, {3, 4}, {3, 2}});
  CHECK(g.adj[3] == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("induced subgraph on a triangle") {
  Graph tri = complete_graph(3);
  auto sub = induced_subgraph(tri, {0, 1});
  CHECK(sub.graph.n() == 2);
  CHECK(sub.graph.m == 1);
  CHECK(sub.graph.has_edge(0, 1));
  CHECK(sub.orig_id == std::vector<int>{0, 1});
}

TEST_CASE("induced subgraph edge cases") {
  Graph p3 = path_graph(3);
  auto empty = induced_subgraph(p3, {});
  CHECK(empty.graph.n() == 0);
  CHECK(empty.graph.m == 0);

  auto ends = induced_subgraph(p3, {0, 2});
  CHECK(ends.graph.n() == 2);
  CHECK(ends.graph.m == 0);
  CHECK(ends.orig_id == std::vector<int>{0, 2});

  CHECK_THROWS_AS(induced_subgraph(p3, {0, 3}), std::out_of_range);
}

TEST_CASE("induced subgraph composes") {
  // Restricting twice equals restricting once to the composed vertex set.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_graph(30, 0.2, seed);
    VertexSet outer;
    for (int v = 0; v < 30; v += 2) outer.push_back(v);
    auto first = induced_subgraph(g, outer);
    VertexSet inner;
    for (int v = 0; v < first.graph.n(); v += 3) inner.push_back(v);
    auto second = induced_subgraph(first.graph, inner);

    VertexSet composed;
    for (int v : inner) composed.push_back(first.orig_id[v]);
    std::sort(composed.begin(), composed.end());
    auto direct = induced_subgraph(g, composed);

    CHECK(to_edge_list(second.graph) == to_edge_list(direct.graph));
    for (int v = 0; v < second.graph.n(); ++v)
      CHECK(first.orig_id[second.orig_id[v]] == direct.orig_id[v]);
  }
}

TEST_CASE("maximal independent set check on small graphs") {
  Graph p3 = path_graph(3);
  CHECK(is_valid_mis(p3, {1}));
  CHECK_FALSE(is_valid_mis(p3, {0}));       // 2 uncovered
  CHECK(is_valid_mis(p3, {0, 2}));
  CHECK_FALSE(is_valid_mis(p3, {0, 1}));    // not independent

  Graph tri = complete_graph(3);
  CHECK_FALSE(is_valid_mis(tri, {0, 1}));
  CHECK(is_valid_mis(tri, {2}));

  Graph empty = Graph::from_edges(0, {});
  CHECK(is_valid_mis(empty, {}));

  Graph iso = Graph::from_edges(2, {});
  CHECK_FALSE(is_valid_mis(iso, {0}));
  CHECK(is_valid_mis(iso, {0, 1}));
}

TEST_CASE("greedy sweep follows the given order") {
  Graph p3 = path_graph(3);
  CHECK(greedy_mis(p3, {0, 1, 2}) == VertexSet{0, 2});
  CHECK(greedy_mis(p3, {1, 0, 2}) == VertexSet{1});

  Graph none = Graph::from_edges(4, {});
  CHECK(greedy_mis(none, {3, 1, 0, 2}) == VertexSet{0, 1, 2, 3});

  CHECK_THROWS_AS(greedy_mis(p3, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(greedy_mis(p3, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("greedy sweep always produces a valid result") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 1 + static_cast<int>(seed % 40);
    Graph g = random_graph(n, 0.05 + 0.02 * static_cast<double>(seed % 10), seed + 100);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i)
      std::swap(order[i], order[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    CHECK(is_valid_mis(g, greedy_mis(g, order)));
  }
}

TEST_CASE("eccentricities on fixed shapes") {
  Graph p4 = path_graph(4);
  auto info = components_and_eccentricities(p4);
  CHECK(info.component_count() == 1);
  CHECK(info.comp_diameter[0] == 3);
  CHECK(info.eccentricity == std::vector<int>{3, 2, 2, 3});

  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  info = components_and_eccentricities(two);
  CHECK(info.component_count() == 2);
  CHECK(info.comp_diameter == std::vector<int>{1, 1});
  CHECK(info.comp_size == std::vector<int>{2, 2});
  CHECK(info.comp_of == std::vector<int>{0, 0, 1, 1});

  Graph k5 = complete_graph(5);
  info = components_and_eccentricities(k5);
  CHECK(info.comp_diameter == std::vector<int>{1});

  Graph lone = Graph::from_edges(1, {});
  info = components_and_eccentricities(lone);
  CHECK(info.eccentricity == std::vector<int>{0});
  CHECK(info.comp_diameter == std::vector<int>{0});
}

TEST_CASE("largest component breaks ties by smaller id") {
  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(components_and_eccentricities(two).largest_component() == 0);
  CHECK(component_diameters(two).largest_component == 0);
}

TEST_CASE("eccentricities agree with an all-pairs oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    int n = 2 + static_cast<int>(seed * 2);
    double p = (seed % 3 == 0) ? 0.05 : (seed % 3 == 1) ? 0.15 : 0.5;
    Graph g = random_graph(n, p, seed + 500);
    auto info = components_and_eccentricities(g);
    auto d = apsp(g);
    const int inf = std::numeric_limits<int>::max() / 4;
    for (int v = 0; v < n; ++v) {
      int ecc = 0;
      for (int u = 0; u < n; ++u)
        if (d[v][u] < inf) ecc = std::max(ecc, d[v][u]);
      CHECK(info.eccentricity[v] == ecc);
      CHECK(info.comp_diameter[info.comp_of[v]] >= ecc);
    }
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        CHECK((info.comp_of[v] == info.comp_of[u]) == (d[v][u] < inf));
  }
}

TEST_CASE("fast diameters match the all-pairs implementation") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 2 + static_cast<int>(seed * 5);
    double p = (seed % 2 == 0) ? 2.0 / n : 0.3;
    Graph g = random_graph(n, p, seed + 900);
    auto slow = components_and_eccentricities(g);
    auto fast = component_diameters(g);
    REQUIRE(fast.comp_of == slow.comp_of);
    CHECK(fast.comp_size == slow.comp_size);
    CHECK(fast.comp_diameter == slow.comp_diameter);
    CHECK(fast.largest_component == slow.largest_component());
  }
}

TEST_CASE("exhaustive degeneracy on known graphs") {
  CHECK(brute_force_degeneracy(complete_graph(4)) == 3);
  CHECK(brute_force_degeneracy(petersen()) == 3);
  CHECK(brute_force_degeneracy(path_graph(6)) == 1);
  Graph tree = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  CHECK(brute_force_degeneracy(tree) == 1);
  CHECK(brute_force_degeneracy(Graph::from_edges(1, {})) == 0);
  CHECK_THROWS_AS(brute_force_degeneracy(random_graph(17, 0.5, 1)), std::length_error);
}

TEST_CASE("edge list text round-trips bit-exactly") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(3 + static_cast<int>(seed), 0.3, seed + 40);
    std::string text = to_edge_list(g);
    Graph back = from_edge_list(text);
    CHECK(to_edge_list(back) == text);
    CHECK(back.n() == g.n());
    CHECK(back.m == g.m);
  }
  Graph empty = Graph::from_edges(0, {});
  CHECK(from_edge_list(to_edge_list(empty)).n() == 0);
}

TEST_CASE("edge list text is sorted with u < v") {
  Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {2, 0}});
  CHECK(to_edge_list(g) == "4 3\n0 1\n0 2\n2 3\n");
}

TEST_CASE("edge list parser rejects malformed input") {
  CHECK_THROWS_AS(from_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list("2 1\n"), std::invalid_argument);          // missing edge
  CHECK_THROWS_AS(from_edge_list("2 1\n0 2\n"), std::out_of_range);         // id out of range
  CHECK_THROWS_AS(from_edge_list("2 1\n1 1\n"), std::invalid_argument);     // self-loop
  CHECK_THROWS_AS(from_edge_list("abc\n"), std::invalid_argument);
}

TEST_CASE("edge list file round-trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sfmis_graph_io";
  fs::create_directories(dir);
  fs::path file = dir / "g.txt";
  Graph g = random_graph(40, 0.1, 7);
  save_edge_list(g, file.string());
  Graph back = load_edge_list(file.string());
  CHECK(to_edge_list(back) == to_edge_list(g));
  CHECK_THROWS(load_edge_list((dir / "missing.txt").string()));
  fs::remove_all(dir);
}
