#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfmis/graph.hpp"
#include "sfmis/localsim.hpp"
#include "sfmis/rng.hpp"

using namespace sfmis;

namespace {

using Edges = std::vector<std::pair<int, int>>;

Graph path_graph(int n) {
  Edges es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph::from_edges(n, es);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Edges es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < p) es.push_back({i, j});
  return Graph::from_edges(n, es);
}

// Halts in init; output reports the advertised graph parameters.
struct HaltNow {
  struct Message {};
  struct Node { int n; int max_deg; double beta; };
  using Output = int;

  Node init(const NodeContext& ctx, Rng&) {
    return Node{ctx.known_n, ctx.known_max_degree, ctx.known_beta};
  }
  bool halted(const Node&) const { return true; }
  void send(Node&, const NodeContext&, Sender<HaltNow>&, Rng&) {}
  void receive(Node&, const NodeContext&, std::span<const Mail<Message>>, Rng&) {}
  Output output(const Node& nd, const NodeContext&) const { return nd.n; }
  std::size_t wire_size(const Message&) const { return 0; }
};

// Broadcasts the smallest id seen so far, every round, forever.
struct MinFlood {
  struct Message { int value; };
  struct Node { int best; };
  using Output = int;

  Node init(const NodeContext& ctx, Rng&) { return Node{ctx.id}; }
  bool halted(const Node&) const { return false; }
  void send(Node& nd, const NodeContext&, Sender<MinFlood>& out, Rng&) {
    out.broadcast(Message{nd.best});
  }
  void receive(Node& nd, const NodeContext&, std::span<const Mail<Message>> in, Rng&) {
    for (const auto& mail : in) nd.best = std::min(nd.best, mail.payload.value);
  }
  Output output(const Node& nd, const NodeContext&) const { return nd.best; }
  std::size_t wire_size(const Message&) const { return sizeof(int); }
  std::string state_summary(const Node& nd) const { return "best=" + std::to_string(nd.best); }
};

// Broadcasts a random value each round; halts after `lifetime` rounds.
struct NoisyCounter {
  struct Message { std::uint64_t value; };
  struct Node { std::uint64_t acc; int rounds_left; };
  using Output = std::uint64_t;
  int lifetime;

  Node init(const NodeContext&, Rng& rng) { return Node{rng.next_u64(), lifetime}; }
  bool halted(const Node& nd) const { return nd.rounds_left <= 0; }
  void send(Node&, const NodeContext&, Sender<NoisyCounter>& out, Rng& rng) {
    out.broadcast(Message{rng.next_u64()});
  }
  void receive(Node& nd, const NodeContext&, std::span<const Mail<Message>> in, Rng&) {
    for (const auto& mail : in) nd.acc ^= mail.payload.value * 0x9e3779b97f4a7c15ULL;
    --nd.rounds_left;
  }
  Output output(const Node& nd, const NodeContext&) const { return nd.acc; }
  std::size_t wire_size(const Message&) const { return 8; }
};

// Node `victim` throws during receive of round `when`.
struct Saboteur {
  struct Message {};
  struct Node { int seen; };
  using Output = int;
  int victim;
  int when;

  Node init(const NodeContext&, Rng&) { return Node{0}; }
  bool halted(const Node&) const { return false; }
  void send(Node&, const NodeContext&, Sender<Saboteur>& out, Rng&) {
    out.broadcast(Message{});
  }
  void receive(Node& nd, const NodeContext& ctx, std::span<const Mail<Message>>, Rng&) {
    ++nd.seen;
    if (ctx.id == victim && nd.seen == when) throw std::runtime_error("boom");
  }
  Output output(const Node& nd, const NodeContext&) const { return nd.seen; }
  std::size_t wire_size(const Message&) const { return 0; }
};

// Node 0 halts once it has received anything; everyone broadcasts every round.
struct EarlySleeper {
  struct Message {};
  struct Node { int received; bool done; };
  using Output = int;

  Node init(const NodeContext&, Rng&) { return Node{0, false}; }
  bool halted(const Node& nd) const { return nd.done; }
  void send(Node&, const NodeContext&, Sender<EarlySleeper>& out, Rng&) {
    out.broadcast(Message{});
  }
  void receive(Node& nd, const NodeContext& ctx, std::span<const Mail<Message>> in, Rng&) {
    nd.received += static_cast<int>(in.size());
    if (ctx.id == 0 && nd.received > 0) nd.done = true;
  }
  Output output(const Node& nd, const NodeContext&) const { return nd.received; }
  std::size_t wire_size(const Message&) const { return 4; }
};

// Sends its id to port 0 only; receivers verify the port maps back to the
// true sender. Outputs 1 while no mismatch has been seen.
struct PortEcho {
  struct Message { int sender; };
  struct Node { bool ok; int rounds_left; };
  using Output = int;

  Node init(const NodeContext&, Rng&) { return Node{true, 3}; }
  bool halted(const Node& nd) const { return nd.rounds_left <= 0; }
  void send(Node&, const NodeContext& ctx, Sender<PortEcho>& out, Rng&) {
    if (ctx.degree > 0) out.to(0, Message{ctx.id});
  }
  void receive(Node& nd, const NodeContext& ctx, std::span<const Mail<Message>> in, Rng&) {
    for (const auto& mail : in)
      if (ctx.neighbors[mail.port] != mail.payload.sender) nd.ok = false;
    --nd.rounds_left;
  }
  Output output(const Node& nd, const NodeContext&) const { return nd.ok ? 1 : 0; }
  std::size_t wire_size(const Message&) const { return 4; }
};

}  // namespace

TEST_CASE("immediate halt costs zero rounds") {
  Graph g = path_graph(5);
  HaltNow proto;
  RunOptions opt;
  opt.beta = 3.5;
  auto res = run_protocol(g, proto, opt);
  CHECK(res.stats.rounds == 0);
  CHECK(res.stats.halted);
  CHECK(res.stats.messages_sent == 0);
  CHECK(res.outputs == std::vector<int>(5, 5));
}

TEST_CASE("empty graph runs trivially") {
  Graph g = Graph::from_edges(0, {});
  MinFlood proto;
  auto res = run_protocol(g, proto, RunOptions{});
  CHECK(res.stats.rounds == 0);
  CHECK(res.stats.halted);
  CHECK(res.outputs.empty());
}

TEST_CASE("information travels one hop per round") {
  // Path 0-1-2-3: the far endpoint needs exactly 3 rounds to learn id 0.
  Graph g = path_graph(4);
  MinFlood proto;
  RunOptions opt;

  opt.round_limit = 2;
  auto res = run_protocol(g, proto, opt);
  CHECK(res.stats.rounds == 2);
  CHECK_FALSE(res.stats.halted);
  CHECK(res.outputs == std::vector<int>{0, 0, 0, 1});

  opt.round_limit = 3;
  res = run_protocol(g, proto, opt);
  CHECK(res.outputs == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("per-round messages equal the active degree sum") {
  Graph g = path_graph(4);  // degree sum 6
  MinFlood proto;
  RunOptions opt;
  opt.round_limit = 5;
  auto res = run_protocol(g, proto, opt);
  CHECK(res.stats.messages_sent == 5 * 6);
  CHECK(res.stats.max_message_bytes == sizeof(int));
}

TEST_CASE("same seed reruns are identical, different seeds diverge") {
  Graph g = random_graph(40, 0.15, 11);
  NoisyCounter proto{6};
  RunOptions opt;
  opt.seed = 123;
  auto a = run_protocol(g, proto, opt);
  auto b = run_protocol(g, proto, opt);
  CHECK(a.outputs == b.outputs);
  CHECK(a.stats.rounds == b.stats.rounds);
  CHECK(a.stats.messages_sent == b.stats.messages_sent);
  CHECK(a.stats.halted == b.stats.halted);
  CHECK(a.stats.halted);
  CHECK(a.stats.rounds == 6);

  opt.seed = 124;
  auto c = run_protocol(g, proto, opt);
  CHECK(a.outputs != c.outputs);
}

TEST_CASE("a throwing node surfaces as a located fault") {
  Graph g = path_graph(4);
  Saboteur proto{1, 2};  // node 1, second receive
  try {
    run_protocol(g, proto, RunOptions{});
    FAIL("expected a fault");
  } catch (const SimulationFault& f) {
    CHECK(f.node == 1);
    CHECK(f.round == 2);
    CHECK(std::string(f.what()).find("boom") != std::string::npos);
  }
}

TEST_CASE("messages to a halted node are counted but not delivered") {
  // Star with center 0: the center halts after round 1; leaves keep sending.
  Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  EarlySleeper proto;
  RunOptions opt;
  opt.round_limit = 2;
  auto res = run_protocol(g, proto, opt);
  // Round 1: 6 messages (center 3 out, leaves 1 each). Round 2: leaves only.
  CHECK(res.stats.messages_sent == 9);
  CHECK_FALSE(res.stats.halted);
  CHECK(res.outputs[0] == 3);  // round 2 arrivals dropped
  CHECK(res.outputs[1] == 1);
  CHECK(res.stats.max_message_bytes == 4);
}

TEST_CASE("received ports identify the true sender") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_graph(30, 0.2, seed + 50);
    PortEcho proto;
    auto res = run_protocol(g, proto, RunOptions{});
    CHECK(std::all_of(res.outputs.begin(), res.outputs.end(),
                      [](int ok) { return ok == 1; }));
  }
}

TEST_CASE("trace emits one JSON line per active node per round") {
  Graph g = path_graph(2);
  MinFlood proto;
  std::ostringstream trace;
  RunOptions opt;
  opt.round_limit = 3;
  opt.trace = &trace;
  run_protocol(g, proto, opt);
  std::string text = trace.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(text.find("{\"round\":1,\"node\":0,\"received\":1,\"halted\":false")
        != std::string::npos);
  CHECK(text.find("\"state\":\"best=0\"") != std::string::npos);
}
