#pragma once

#include <string>
#include <vector>

#include "sfmis/graph.hpp"

namespace sfmis {

struct PeelingResult {
  int value = 0;            // max residual degree seen at removal time
  std::vector<int> order;   // vertices in removal order
  std::vector<int> trace;   // residual degree of order[i] when removed
};

// Repeatedly removes a minimum-residual-degree vertex (ties: smallest id).
// value is the degeneracy.
PeelingResult degeneracy(const Graph& g);

// Removes vertices in non-decreasing weight order (ties: smaller id);
// w must be index-aligned with g. value >= degeneracy(g).value always.
PeelingResult modified_degeneracy(const Graph& g, const std::vector<double>& w);

struct ArboricityBounds {
  int lower = 0;  // max over min-degree peel suffixes H of ceil(|E(H)| / (|V(H)| - 1))
  int upper = 0;  // degeneracy
};

ArboricityBounds arboricity_bounds(const Graph& g);  // needs n >= 2

// Columns: step,vertex,residual_degree
std::string peeling_to_csv(const PeelingResult& r);

}  // namespace sfmis
