#include "sfmis/peeling.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sfmis {

PeelingResult degeneracy(const Graph& g) {
  int n = g.n();
  PeelingResult r;
  r.order.reserve(n);
  r.trace.reserve(n);
  if (n == 0) return r;

  std::vector<int> deg(n);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(g.adj[v].size());
    max_deg = std::max(max_deg, deg[v]);
  }
  // Ordered buckets so the minimum-degree tie-break by smallest id is exact.
  std::vector<std::set<int>> bucket(max_deg + 1);
  for (int v = 0; v < n; ++v) bucket[deg[v]].insert(v);
  std::vector<char> removed(n, 0);

  int cur = 0;
  for (int step = 0; step < n; ++step) {
    while (bucket[cur].empty()) ++cur;
    int v = *bucket[cur].begin();
    bucket[cur].erase(bucket[cur].begin());
    removed[v] = 1;
    r.order.push_back(v);
    r.trace.push_back(deg[v]);
    r.value = std::max(r.value, deg[v]);
    for (int w : g.adj[v]) {
      if (removed[w]) continue;
      bucket[deg[w]].erase(w);
      --deg[w];
      bucket[deg[w]].insert(w);
    }
    // Neighbors dropped by at most one, so the minimum can fall by at most one.
    if (cur > 0) --cur;
  }
  return r;
}

PeelingResult modified_degeneracy(const Graph& g, const std::vector<double>& w) {
  int n = g.n();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("weight vector length does not match vertex count");

  PeelingResult r;
  r.order.resize(n);
  std::iota(r.order.begin(), r.order.end(), 0);
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](int a, int b) { return w[a] < w[b] || (w[a] == w[b] && a < b); });

  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(g.adj[v].size());
  std::vector<char> removed(n, 0);
  r.trace.reserve(n);
  for (int v : r.order) {
    r.trace.push_back(deg[v]);
    r.value = std::max(r.value, deg[v]);
    removed[v] = 1;
    for (int u : g.adj[v])
      if (!removed[u]) --deg[u];
  }
  return r;
}

ArboricityBounds arboricity_bounds(const Graph& g) {
  int n = g.n();
  if (n < 2) throw std::invalid_argument("arboricity bounds need at least 2 vertices");
  PeelingResult peel = degeneracy(g);

  ArboricityBounds b;
  b.upper = peel.value;
  // After j removals the suffix has n-j vertices and m - (trace prefix sum)
  // edges; each removal deletes exactly its residual degree in edges.
  long long edges = static_cast<long long>(g.m);
  for (int j = 0; n - j >= 2; ++j) {
    long long verts = n - j;
    long long cand = (edges + verts - 2) / (verts - 1);  // ceil(edges / (verts-1))
    b.lower = std::max(b.lower, static_cast<int>(cand));
    edges -= peel.trace[j];
  }
  return b;
}

std::string peeling_to_csv(const PeelingResult& r) {
  std::ostringstream os;
  os << "step,vertex,residual_degree\n";
  for (std::size_t i = 0; i < r.order.size(); ++i)
    os << i << ',' << r.order[i] << ',' << r.trace[i] << '\n';
  return os.str();
}

}  // namespace sfmis
