#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sfmis {

// Sorted unique vertex ids.
using VertexSet = std::vector<int>;

// Simple undirected graph, adjacency lists sorted ascending.
struct Graph {
  std::vector<std::vector<int>> adj;
  std::size_t m = 0;

  int n() const { return static_cast<int>(adj.size()); }
  int degree(int v) const;
  int max_degree() const;
  bool has_edge(int u, int v) const;

  // Validates: ids in range, no self-loops, no duplicate edges.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> orig_id;  // new id -> id in the parent graph
};

// vs must be sorted unique; new ids preserve the relative order of vs.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

// Independent and maximal (every vertex is in s or adjacent to s).
bool is_valid_mis(const Graph& g, const VertexSet& s);

// Scans the permutation, adding each vertex with no earlier-added neighbor.
VertexSet greedy_mis(const Graph& g, const std::vector<int>& order);

struct ComponentInfo {
  std::vector<int> comp_of;        // vertex -> component id, numbered by smallest member
  std::vector<int> eccentricity;   // exact; isolated vertex has 0
  std::vector<int> comp_size;      // per component
  std::vector<int> comp_diameter;  // per component
  int component_count() const { return static_cast<int>(comp_size.size()); }
  int largest_component() const;   // max size, ties by smaller component id
};

// Exact eccentricities via BFS from every vertex: O(n(n+m)).
ComponentInfo components_and_eccentricities(const Graph& g);

// Exact per-component diameters via BFS bounding instead of all-pairs sweeps;
// intended for graphs where O(n(n+m)) is too slow (n ~ 1e5).
struct ComponentDiameters {
  std::vector<int> comp_of;
  std::vector<int> comp_size;
  std::vector<int> comp_diameter;
  int largest_component = -1;

  int largest_component_size() const { return comp_size[largest_component]; }
  int largest_component_diameter() const { return comp_diameter[largest_component]; }
  int max_component_diameter() const;
};

ComponentDiameters component_diameters(const Graph& g);

// Max over all induced subgraphs of the minimum degree; n <= 16 only
// (throws std::length_error beyond that).
int brute_force_degeneracy(const Graph& g);

// Text format: header "n m", then one "u v" line per edge with u < v,
// lexicographically sorted. Round-trips bit-exactly.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);
void save_edge_list(const Graph& g, const std::string& path);
Graph load_edge_list(const std::string& path);

}  // namespace sfmis
