#include "sfmis/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sfmis {

namespace {

void require_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

void require_sorted_unique(const Graph& g, const VertexSet& s, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    require_vertex(g, s[i]);
    if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument(std::string(what) + " must be sorted and unique");
  }
}

}  // namespace

int Graph::degree(int v) const {
  require_vertex(*this, v);
  return static_cast<int>(adj[v].size());
}

int Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj) d = std::max(d, a.size());
  return static_cast<int>(d);
}

bool Graph::has_edge(int u, int v) const {
  require_vertex(*this, u);
  require_vertex(*this, v);
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adj.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("duplicate edge");
  }
  g.m = edges.size();
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
  require_sorted_unique(g, vs, "vertex set");
  std::vector<int> new_id(g.adj.size(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) new_id[vs[i]] = static_cast<int>(i);

  InducedSubgraph out;
  out.orig_id = vs;
  out.graph.adj.resize(vs.size());
  std::size_t half_edges = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto& row = out.graph.adj[i];
    for (int w : g.adj[vs[i]])
      if (new_id[w] >= 0) row.push_back(new_id[w]);  // stays sorted: new ids are order-preserving
    half_edges += row.size();
  }
  out.graph.m = half_edges / 2;
  return out;
}

bool is_valid_mis(const Graph& g, const VertexSet& s) {
  require_sorted_unique(g, s, "vertex set");
  std::vector<char> in(g.adj.size(), 0);
  for (int v : s) in[v] = 1;
  for (int v = 0; v < g.n(); ++v) {
    if (in[v]) {
      for (int w : g.adj[v])
        if (in[w]) return false;  // not independent
    } else {
      bool dominated = false;
      for (int w : g.adj[v])
        if (in[w]) { dominated = true; break; }
      if (!dominated) return false;  // not maximal
    }
  }
  return true;
}

VertexSet greedy_mis(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n())
    throw std::invalid_argument("order is not a permutation: wrong length");
  std::vector<char> seen(g.adj.size(), 0);
  for (int v : order) {
    require_vertex(g, v);
    if (seen[v]) throw std::invalid_argument("order is not a permutation: repeated vertex");
    seen[v] = 1;
  }
  std::vector<char> in(g.adj.size(), 0);
  VertexSet s;
  for (int v : order) {
    bool blocked = false;
    for (int w : g.adj[v])
      if (in[w]) { blocked = true; break; }
    if (!blocked) {
      in[v] = 1;
      s.push_back(v);
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// BFS with timestamped visitation so repeated calls cost O(|reached|).
struct BfsScratch {
  std::vector<int> dist;
  std::vector<int> stamp;
  std::vector<int> queue;
  int epoch = 0;

  explicit BfsScratch(int n) : dist(n), stamp(n, -1), queue(n) {}

  // Returns eccentricity of src within its component; fills dist for reached vertices.
  int run(const Graph& g, int src) {
    ++epoch;
    int head = 0, tail = 0;
    queue[tail++] = src;
    stamp[src] = epoch;
    dist[src] = 0;
    int ecc = 0;
    while (head < tail) {
      int v = queue[head++];
      ecc = dist[v];
      for (int w : g.adj[v]) {
        if (stamp[w] != epoch) {
          stamp[w] = epoch;
          dist[w] = dist[v] + 1;
          queue[tail++] = w;
        }
      }
    }
    return ecc;
  }
};

std::pair<std::vector<int>, std::vector<int>> label_components(const Graph& g) {
  int n = g.n();
  std::vector<int> comp_of(n, -1), comp_size;
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] >= 0) continue;
    int id = static_cast<int>(comp_size.size());
    int head = 0, tail = 0;
    queue[tail++] = s;
    comp_of[s] = id;
    while (head < tail) {
      int v = queue[head++];
      for (int w : g.adj[v])
        if (comp_of[w] < 0) { comp_of[w] = id; queue[tail++] = w; }
    }
    comp_size.push_back(tail);
  }
  return {std::move(comp_of), std::move(comp_size)};
}

}  // namespace

int ComponentInfo::largest_component() const {
  int best = -1;
  for (int c = 0; c < component_count(); ++c)
    if (best < 0 || comp_size[c] > comp_size[best]) best = c;
  return best;
}

ComponentInfo components_and_eccentricities(const Graph& g) {
  ComponentInfo info;
  auto [comp_of, comp_size] = label_components(g);
  info.comp_of = std::move(comp_of);
  info.comp_size = std::move(comp_size);
  info.comp_diameter.assign(info.comp_size.size(), 0);
  info.eccentricity.resize(g.adj.size());
  BfsScratch bfs(g.n());
  for (int v = 0; v < g.n(); ++v) {
    int e = bfs.run(g, v);
    info.eccentricity[v] = e;
    int c = info.comp_of[v];
    info.comp_diameter[c] = std::max(info.comp_diameter[c], e);
  }
  return info;
}

int ComponentDiameters::max_component_diameter() const {
  int d = 0;
  for (int x : comp_diameter) d = std::max(d, x);
  return d;
}

ComponentDiameters component_diameters(const Graph& g) {
  ComponentDiameters out;
  auto [comp_of, comp_size] = label_components(g);
  out.comp_of = std::move(comp_of);
  out.comp_size = std::move(comp_size);
  int nc = static_cast<int>(out.comp_size.size());
  out.comp_diameter.assign(nc, 0);
  for (int c = 0; c < nc; ++c)
    if (out.largest_component < 0 || out.comp_size[c] > out.comp_size[out.largest_component])
      out.largest_component = c;

  std::vector<std::vector<int>> members(nc);
  for (int v = 0; v < g.n(); ++v) members[out.comp_of[v]].push_back(v);

  BfsScratch bfs(g.n());
  for (int c = 0; c < nc; ++c) {
    const auto& vs = members[c];
    int size = static_cast<int>(vs.size());
    if (size <= 2) {
      out.comp_diameter[c] = size - 1;
      continue;
    }
    if (size <= 256) {
      int d = 0;
      for (int v : vs) d = std::max(d, bfs.run(g, v));
      out.comp_diameter[c] = d;
      continue;
    }

    // BFS bounding: root at a max-degree vertex, compute exact eccentricities
    // level by level from the deepest fringe inward; vertices at level <= i-1
    // are pairwise within distance 2(i-1) through the root, so once the best
    // lower bound reaches that, it is the diameter.
    int root = vs[0];
    for (int v : vs)
      if (g.adj[v].size() > g.adj[root].size()) root = v;
    int h = bfs.run(g, root);
    std::vector<std::vector<int>> fringe(h + 1);
    for (int v : vs) fringe[bfs.dist[v]].push_back(v);
    int lb = h;
    for (int i = h; i >= 1; --i) {
      if (lb >= 2 * i) break;
      for (int v : fringe[i]) lb = std::max(lb, bfs.run(g, v));
      if (lb >= 2 * (i - 1)) break;
    }
    out.comp_diameter[c] = lb;
  }
  return out;
}

int brute_force_degeneracy(const Graph& g) {
  int n = g.n();
  if (n > 16) throw std::length_error("brute force degeneracy limited to 16 vertices");
  if (n == 0) return 0;
  std::vector<unsigned> mask(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.adj[v]) mask[v] |= 1u << w;
  int best = 0;
  for (unsigned s = 1; s < (1u << n); ++s) {
    int min_deg = n;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) min_deg = std::min(min_deg, std::popcount(mask[v] & s));
    best = std::max(best, min_deg);
  }
  return best;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m << '\n';
  for (int u = 0; u < g.n(); ++u)
    for (int w : g.adj[u])
      if (w > u) os << u << ' ' << w << '\n';
  return os.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream is(text);
  long long n = 0, m = 0;
  if (!(is >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  long long u, v;
  while (is >> u >> v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  if (!is.eof()) throw std::invalid_argument("edge list: malformed line");
  if (static_cast<long long>(edges.size()) != m) throw std::invalid_argument("edge list: edge count mismatch");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << to_edge_list(g);
  if (!f) throw std::runtime_error("write failed: " + path);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return from_edge_list(buf.str());
}

}  // namespace sfmis
