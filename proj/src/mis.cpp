#include "sfmis/mis.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <memory>
#include <unordered_map>

#include "json.hpp"
#include "sfmis/netgen.hpp"
#include "sfmis/rng.hpp"

namespace sfmis {

namespace {

int ceil_log2(int n) {
  if (n < 2) return 1;
  return std::bit_width(static_cast<unsigned>(n) - 1u);
}

int default_luby_limit(int n) { return 16 * ceil_log2(n) + 64; }

// Random-priority protocol. Rounds alternate between drawing values (odd) and
// resolving winners (even); since every node starts in the draw phase and
// phase changes are lockstep, a node never sees a mix of the two message
// kinds in one inbox.
struct LubyProtocol {
  enum : std::uint8_t { kValue = 0, kJoined = 1 };
  enum class Status : std::uint8_t { undecided, in_mis, out };

  struct Message {
    std::uint8_t kind;
    std::uint64_t value;
  };
  struct Node {
    Status status = Status::undecided;
    bool draw_phase = true;
    bool won = false;
    std::uint64_t value = 0;
  };
  using Output = bool;

  Node init(const NodeContext&, Rng&) { return {}; }
  bool halted(const Node& n) const { return n.status != Status::undecided; }

  void send(Node& n, const NodeContext&, Sender<LubyProtocol>& out, Rng& rng) {
    if (n.draw_phase) {
      n.value = rng.next_u64();
      out.broadcast(Message{kValue, n.value});
    } else if (n.won) {
      out.broadcast(Message{kJoined, 0});
    }
  }

  void receive(Node& n, const NodeContext& ctx, std::span<const Mail<Message>> inbox, Rng&) {
    if (n.draw_phase) {
      if (inbox.empty()) {
        // No undecided neighbor is left (a neighbor in the set would have
        // knocked this node out already), so the node joins unopposed.
        n.status = Status::in_mis;
        return;
      }
      bool beaten = false;
      for (const auto& mail : inbox) {
        int nb = ctx.neighbors[mail.port];
        if (mail.payload.value > n.value ||
            (mail.payload.value == n.value && nb < ctx.id)) {
          beaten = true;
          break;
        }
      }
      n.won = !beaten;
      n.draw_phase = false;
    } else {
      for (const auto& mail : inbox) {
        if (mail.payload.kind == kJoined) {
          n.status = Status::out;
          return;
        }
      }
      if (n.won) {
        n.status = Status::in_mis;  // announcement already went out this round
        return;
      }
      n.draw_phase = true;
    }
  }

  Output output(const Node& n, const NodeContext&) const { return n.status == Status::in_mis; }

  std::size_t wire_size(const Message& m) const { return m.kind == kValue ? 9 : 1; }

  std::string state_summary(const Node& n) const {
    switch (n.status) {
      case Status::in_mis: return "in";
      case Status::out: return "out";
      default: return n.draw_phase ? "draw" : "resolve";
    }
  }
};

// Flooding protocol. Every node forwards adjacency records it has not
// forwarded before; one quiet round means its knowledge covers the whole
// component, at which point it locally runs the ascending-id greedy rule.
// Records travel by reference (the graph is the record store); the wire size
// charged per record is the serialized form: id, degree, neighbor list.
struct FloodProtocol {
  struct Message {
    std::shared_ptr<const std::vector<int>> records;
  };
  struct Node {
    std::vector<bool> known;
    std::vector<int> fresh;
    int known_count = 0;
    int min_known = 0;
    bool done = false;
    bool in_mis = false;
  };
  using Output = bool;

  explicit FloodProtocol(const Graph& g_) : g(&g_), mark(g_.n(), 0) {}

  const Graph* g;
  std::unordered_map<int, VertexSet> memo;  // component representative -> its MIS
  std::vector<int> mark;
  int epoch = 0;

  Node init(const NodeContext& ctx, Rng&) {
    Node n;
    n.known.assign(g->n(), false);
    n.known[ctx.id] = true;
    n.known_count = 1;
    n.min_known = ctx.id;
    n.fresh.push_back(ctx.id);
    return n;
  }

  bool halted(const Node& n) const { return n.done; }

  void send(Node& n, const NodeContext& ctx, Sender<FloodProtocol>& out, Rng&) {
    if (!n.fresh.empty() && ctx.degree > 0) {
      auto payload = std::make_shared<const std::vector<int>>(std::move(n.fresh));
      out.broadcast(Message{std::move(payload)});
    }
    n.fresh.clear();
  }

  void receive(Node& n, const NodeContext& ctx, std::span<const Mail<Message>> inbox, Rng&) {
    for (const auto& mail : inbox) {
      for (int rec : *mail.payload.records) {
        if (!n.known[rec]) {
          n.known[rec] = true;
          ++n.known_count;
          n.fresh.push_back(rec);
          if (rec < n.min_known) n.min_known = rec;
        }
      }
    }
    if (n.fresh.empty()) {
      n.done = true;
      n.in_mis = decide(n, ctx);
    }
  }

  Output output(const Node& n, const NodeContext&) const { return n.done && n.in_mis; }

  std::size_t wire_size(const Message& m) const {
    std::size_t bytes = 0;
    for (int rec : *m.records) bytes += 4 * (2 + g->adj[rec].size());
    return bytes;
  }

  std::string state_summary(const Node& n) const {
    return "known=" + std::to_string(n.known_count);
  }

  // All nodes of one component see the same record set, so the greedy result
  // only depends on the component; cache it under the smallest member id.
  bool decide(Node& n, const NodeContext& ctx) {
    auto it = memo.find(n.min_known);
    if (it == memo.end()) {
      ++epoch;
      VertexSet mis;
      int seen = 0;
      for (int v = n.min_known; v < static_cast<int>(n.known.size()) && seen < n.known_count; ++v) {
        if (!n.known[v]) continue;
        ++seen;
        bool blocked = false;
        for (int w : g->adj[v]) {
          if (w < v && mark[w] == epoch) {
            blocked = true;
            break;
          }
        }
        if (!blocked) {
          mark[v] = epoch;
          mis.push_back(v);
        }
      }
      it = memo.emplace(n.min_known, std::move(mis)).first;
    }
    return std::binary_search(it->second.begin(), it->second.end(), ctx.id);
  }
};

template <typename P>
MisOutcome finish(const Graph& g, const SimResult<P>& res, const char* phase) {
  MisOutcome out;
  out.stats = res.stats;
  for (int v = 0; v < g.n(); ++v)
    if (res.outputs[v]) out.mis.push_back(v);
  if (!res.stats.halted) throw PartialResult(phase, std::move(out));
  return out;
}

VertexSet map_back(const VertexSet& sub_ids, const InducedSubgraph& sub) {
  VertexSet mapped;
  mapped.reserve(sub_ids.size());
  for (int x : sub_ids) mapped.push_back(sub.orig_id[x]);
  return mapped;  // ascending because orig_id is ascending
}

}  // namespace

MisOutcome luby_mis(const Graph& g, std::uint64_t seed, int round_limit, std::ostream* trace) {
  LubyProtocol proto;
  RunOptions opt;
  opt.seed = seed;
  opt.round_limit = round_limit > 0 ? round_limit : default_luby_limit(g.n());
  opt.trace = trace;
  auto res = run_protocol(g, proto, opt);
  return finish<LubyProtocol>(g, res, "random-priority");
}

MisOutcome diameter_mis(const Graph& g, std::uint64_t seed, int round_limit, std::ostream* trace) {
  FloodProtocol proto(g);
  RunOptions opt;
  opt.seed = seed;
  opt.round_limit = round_limit > 0 ? round_limit : g.n() + 1;
  opt.trace = trace;
  auto res = run_protocol(g, proto, opt);
  return finish<FloodProtocol>(g, res, "flooding");
}

MisOutcome two_phase_mis(const Graph& g, std::uint64_t seed, int round_limit, std::ostream* trace) {
  const int n = g.n();
  const int tau = n >= 2 ? degree_threshold(n) : 0;

  VertexSet v1;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= tau) v1.push_back(v);

  if (v1.empty()) {
    if (trace) {
      *trace << "{\"phase\":\"phase I\",\"subgraph_size\":0}\n";
      *trace << "{\"phase\":\"phase II\",\"subgraph_size\":" << n << "}\n";
    }
    MisOutcome out;
    try {
      out = luby_mis(g, seed, round_limit, trace);
    } catch (PartialResult& e) {
      throw PartialResult("phase II", std::move(e.partial));
    }
    out.phase_stats = {{"phase I", 0, 0}, {"phase II", out.stats.rounds, n}};
    return out;
  }

  InducedSubgraph sub1 = induced_subgraph(g, v1);
  if (trace)
    *trace << "{\"phase\":\"phase I\",\"subgraph_size\":" << v1.size() << "}\n";
  MisOutcome p1;
  try {
    p1 = diameter_mis(sub1.graph, seed, round_limit, trace);
  } catch (PartialResult& e) {
    e.partial.mis = map_back(e.partial.mis, sub1);
    throw PartialResult("phase I", std::move(e.partial));
  }
  VertexSet mis1 = map_back(p1.mis, sub1);

  // One broadcast round: every phase I member announces itself to all of its
  // neighbors in the full graph.
  std::uint64_t announce_msgs = 0;
  for (int v : mis1) announce_msgs += g.degree(v);
  std::size_t announce_bytes = 1;

  std::vector<char> in_v1(n, 0), in_mis1(n, 0), dominated(n, 0);
  for (int v : v1) in_v1[v] = 1;
  for (int v : mis1) {
    in_mis1[v] = 1;
    dominated[v] = 1;
    for (int w : g.adj[v]) dominated[w] = 1;
  }

  VertexSet v2;
  for (int v = 0; v < n; ++v)
    if (!in_v1[v] && !dominated[v]) v2.push_back(v);

  InducedSubgraph sub2 = induced_subgraph(g, v2);
  if (trace)
    *trace << "{\"phase\":\"phase II\",\"subgraph_size\":" << v2.size() << "}\n";
  MisOutcome p2;
  try {
    p2 = luby_mis(sub2.graph, seed, round_limit, trace);
  } catch (PartialResult& e) {
    e.partial.mis = map_back(e.partial.mis, sub2);
    // Keep the phase I part of the answer in the partial result.
    VertexSet merged;
    std::merge(mis1.begin(), mis1.end(), e.partial.mis.begin(), e.partial.mis.end(),
               std::back_inserter(merged));
    e.partial.mis = std::move(merged);
    throw PartialResult("phase II", std::move(e.partial));
  }
  VertexSet mis2 = map_back(p2.mis, sub2);

  for (int v : mis2) {
    if (in_v1[v]) throw std::logic_error("phase II picked a high-degree vertex");
    for (int w : g.adj[v])
      if (in_mis1[w]) throw std::logic_error("phase II picked a dominated vertex");
  }

  MisOutcome out;
  std::merge(mis1.begin(), mis1.end(), mis2.begin(), mis2.end(), std::back_inserter(out.mis));
  out.stats.rounds = p1.stats.rounds + 1 + p2.stats.rounds;
  out.stats.messages_sent = p1.stats.messages_sent + announce_msgs + p2.stats.messages_sent;
  out.stats.max_message_bytes =
      std::max({p1.stats.max_message_bytes, announce_bytes, p2.stats.max_message_bytes});
  out.stats.halted = p1.stats.halted && p2.stats.halted;
  out.phase_stats = {{"phase I", p1.stats.rounds, static_cast<int>(v1.size())},
                     {"phase II", p2.stats.rounds, static_cast<int>(v2.size())}};
  return out;
}

MisOutcome dispatch_mis(const Graph& g, double beta, std::uint64_t seed, Dispatch rule,
                        int round_limit, std::ostream* trace) {
  if (rule == Dispatch::diameter_or_luby)
    return beta <= 3.0 ? diameter_mis(g, seed, round_limit, trace)
                       : luby_mis(g, seed, round_limit, trace);
  return beta < 3.0 ? diameter_mis(g, seed, round_limit, trace)
                    : two_phase_mis(g, seed, round_limit, trace);
}

std::string mis_outcome_to_json(const MisOutcome& o, std::uint64_t seed,
                                const std::string& config_hash) {
  nlohmann::json j;
  j["mis"] = o.mis;
  j["size"] = o.mis.size();
  j["rounds"] = o.stats.rounds;
  j["messages_sent"] = o.stats.messages_sent;
  j["max_message_bytes"] = o.stats.max_message_bytes;
  j["halted"] = o.stats.halted;
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& p : o.phase_stats) {
    phases.push_back({{"phase", p.phase}, {"rounds", p.rounds}, {"subgraph_size", p.subgraph_size}});
  }
  j["phases"] = phases;
  j["seed"] = seed;
  j["rng"] = kRngAlgorithm;
  j["config_hash"] = config_hash;
  return j.dump(2) + "\n";
}

}  // namespace sfmis
