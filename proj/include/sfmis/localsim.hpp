#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sfmis/graph.hpp"
#include "sfmis/rng.hpp"

namespace sfmis {

struct RunStats {
  int rounds = 0;                     // synchronous rounds executed
  std::uint64_t messages_sent = 0;
  std::size_t max_message_bytes = 0;
  bool halted = false;                // every node halted before the round limit
};

struct NodeContext {
  int id = -1;
  int degree = 0;
  int known_n = 0;
  int known_max_degree = 0;
  double known_beta = 0.0;
  std::span<const int> neighbors;     // ascending ids; port p talks to neighbors[p]
};

struct SimulationFault : std::runtime_error {
  int node;
  int round;
  SimulationFault(int node_, int round_, const std::string& why)
      : std::runtime_error("node " + std::to_string(node_) + " faulted in round " +
                           std::to_string(round_) + ": " + why),
        node(node_), round(round_) {}
};

// Message as received: port identifies the sender in the receiver's neighbor list.
template <typename M>
struct Mail {
  int port;
  M payload;
};

struct RunOptions {
  std::uint64_t seed = 0;
  int round_limit = 1 << 20;
  double beta = 0.0;                  // advertised to nodes as known_beta
  std::ostream* trace = nullptr;      // JSON-lines, one record per (round, active node)
};

namespace detail {

template <typename P, typename N>
concept HasStateSummary = requires(const P& p, const N& n) {
  { p.state_summary(n) } -> std::convertible_to<std::string>;
};

}  // namespace detail

// A protocol P supplies:
//   types    Message, Node, Output
//   Node     init(const NodeContext&, Rng&)
//   bool     halted(const Node&)                        -- checked after init and after receive
//   void     send(Node&, const NodeContext&, Sender<P>&, Rng&)
//   void     receive(Node&, const NodeContext&, std::span<const Mail<Message>>, Rng&)
//   Output   output(const Node&, const NodeContext&)
//   size_t   wire_size(const Message&)
// and optionally std::string state_summary(const Node&) for trace logs.
//
// Round r: every unhalted node sends from its round r-1 state, messages are
// delivered in bulk, then every unhalted node processes its inbox and may
// halt. Sends therefore never see same-round messages. Randomness handed to
// each call is a pure function of (seed, node id, round).
template <typename P>
class Sender;

template <typename P>
struct SimResult {
  std::vector<typename P::Output> outputs;
  RunStats stats;
};

template <typename P>
class Simulation {
 public:
  using Message = typename P::Message;

  Simulation(const Graph& g, P& proto, const RunOptions& opt)
      : g_(g), proto_(proto), opt_(opt) {}

  SimResult<P> run();

 private:
  friend class Sender<P>;

  Rng node_rng(int v, int round, std::uint64_t phase) const {
    return Rng(opt_.seed).derive(static_cast<std::uint64_t>(v))
        .derive(static_cast<std::uint64_t>(round)).derive(phase);
  }

  void deliver(int from, int port, Message&& msg) {
    int dest = g_.adj[from][port];
    ++stats_.messages_sent;
    std::size_t bytes = proto_.wire_size(msg);
    if (bytes > stats_.max_message_bytes) stats_.max_message_bytes = bytes;
    if (!halted_[dest]) next_inbox_[dest].push_back(Mail<Message>{rev_port_[from][port], std::move(msg)});
  }

  const Graph& g_;
  P& proto_;
  RunOptions opt_;
  RunStats stats_;
  std::vector<char> halted_;
  std::vector<std::vector<int>> rev_port_;
  std::vector<std::vector<Mail<Message>>> inbox_, next_inbox_;
};

template <typename P>
class Sender {
 public:
  void to(int port, typename P::Message msg) {
    if (port < 0 || port >= ctx_->degree) throw std::out_of_range("bad port");
    sim_->deliver(ctx_->id, port, std::move(msg));
  }
  void broadcast(const typename P::Message& msg) {
    for (int p = 0; p < ctx_->degree; ++p) sim_->deliver(ctx_->id, p, typename P::Message(msg));
  }

 private:
  friend class Simulation<P>;
  Sender(Simulation<P>* sim, const NodeContext* ctx) : sim_(sim), ctx_(ctx) {}
  Simulation<P>* sim_;
  const NodeContext* ctx_;
};

template <typename P>
SimResult<P> Simulation<P>::run() {
  int n = g_.n();
  std::vector<NodeContext> ctx(n);
  int max_deg = g_.max_degree();
  for (int v = 0; v < n; ++v) {
    ctx[v] = NodeContext{v, static_cast<int>(g_.adj[v].size()), n, max_deg, opt_.beta,
                         std::span<const int>(g_.adj[v])};
  }

  rev_port_.resize(n);
  for (int v = 0; v < n; ++v) {
    rev_port_[v].resize(g_.adj[v].size());
    for (std::size_t p = 0; p < g_.adj[v].size(); ++p) {
      int w = g_.adj[v][p];
      auto it = std::lower_bound(g_.adj[w].begin(), g_.adj[w].end(), v);
      rev_port_[v][p] = static_cast<int>(it - g_.adj[w].begin());
    }
  }

  halted_.assign(n, 0);
  inbox_.resize(n);
  next_inbox_.resize(n);

  std::vector<typename P::Node> nodes;
  nodes.reserve(n);
  int active = n;
  for (int v = 0; v < n; ++v) {
    Rng r = node_rng(v, 0, 0);
    try {
      nodes.push_back(proto_.init(ctx[v], r));
    } catch (const SimulationFault&) {
      throw;
    } catch (const std::exception& e) {
      throw SimulationFault(v, 0, e.what());
    }
    if (proto_.halted(nodes[v])) {
      halted_[v] = 1;
      --active;
    }
  }

  for (int round = 1; active > 0 && round <= opt_.round_limit; ++round) {
    for (int v = 0; v < n; ++v) {
      if (halted_[v]) continue;
      Sender<P> out(this, &ctx[v]);
      Rng r = node_rng(v, round, 1);
      try {
        proto_.send(nodes[v], ctx[v], out, r);
      } catch (const std::exception& e) {
        throw SimulationFault(v, round, e.what());
      }
    }
    std::swap(inbox_, next_inbox_);
    for (int v = 0; v < n; ++v) {
      if (halted_[v]) continue;
      Rng r = node_rng(v, round, 2);
      try {
        proto_.receive(nodes[v], ctx[v], std::span<const Mail<Message>>(inbox_[v]), r);
      } catch (const std::exception& e) {
        throw SimulationFault(v, round, e.what());
      }
      if (proto_.halted(nodes[v])) {
        halted_[v] = 1;
        --active;
      }
      if (opt_.trace) {
        *opt_.trace << "{\"round\":" << round << ",\"node\":" << v
                    << ",\"received\":" << inbox_[v].size()
                    << ",\"halted\":" << (halted_[v] ? "true" : "false");
        if constexpr (detail::HasStateSummary<P, typename P::Node>)
          *opt_.trace << ",\"state\":\"" << proto_.state_summary(nodes[v]) << "\"";
        *opt_.trace << "}\n";
      }
      inbox_[v].clear();
    }
    stats_.rounds = round;
  }

  stats_.halted = (active == 0);
  SimResult<P> result;
  result.outputs.reserve(n);
  for (int v = 0; v < n; ++v) result.outputs.push_back(proto_.output(nodes[v], ctx[v]));
  result.stats = stats_;
  return result;
}

template <typename P>
SimResult<P> run_protocol(const Graph& g, P& proto, const RunOptions& opt) {
  return Simulation<P>(g, proto, opt).run();
}

}  // namespace sfmis
