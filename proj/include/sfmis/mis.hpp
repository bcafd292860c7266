#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfmis/graph.hpp"
#include "sfmis/localsim.hpp"

namespace sfmis {

struct PhaseStat {
  std::string phase;
  int rounds = 0;
  int subgraph_size = 0;
};

struct MisOutcome {
  VertexSet mis;
  RunStats stats;
  std::vector<PhaseStat> phase_stats;  // populated by the two-phase protocol
};

// Raised when a round limit cuts a protocol short; carries whatever was
// decided so far.
struct PartialResult : std::runtime_error {
  std::string phase;
  MisOutcome partial;
  PartialResult(std::string phase_, MisOutcome partial_)
      : std::runtime_error("round limit reached in " + phase_),
        phase(std::move(phase_)), partial(std::move(partial_)) {}
};

// round_limit <= 0 selects a generous per-protocol default; trace, when set,
// receives one JSON line per (round, active node).

// Random-priority rounds: every undecided node draws a fresh value, joins if
// it beats all undecided neighbors (ties: smaller id), neighbors of joiners
// drop out.
MisOutcome luby_mis(const Graph& g, std::uint64_t seed, int round_limit = 0,
                    std::ostream* trace = nullptr);

// Every node floods adjacency records; once a round brings nothing new its
// knowledge covers its component and it locally takes the greedy MIS in
// ascending id order. Finishes in exactly (max component diameter + 1) rounds.
MisOutcome diameter_mis(const Graph& g, std::uint64_t seed, int round_limit = 0,
                        std::ostream* trace = nullptr);

// Phase I: vertices with degree >= tau = ceil(log2(n) * log*(n)) solve their
// induced subgraph by flooding, then announce membership to all neighbors in
// one extra round; Phase II: undominated low-degree vertices run the
// random-priority protocol on their induced subgraph.
MisOutcome two_phase_mis(const Graph& g, std::uint64_t seed, int round_limit = 0,
                         std::ostream* trace = nullptr);

enum class Dispatch {
  diameter_or_luby,       // flood when beta <= 3, random-priority otherwise
  diameter_or_two_phase,  // flood when beta < 3, two-phase otherwise
};

MisOutcome dispatch_mis(const Graph& g, double beta, std::uint64_t seed, Dispatch rule,
                        int round_limit = 0, std::ostream* trace = nullptr);

std::string mis_outcome_to_json(const MisOutcome& o, std::uint64_t seed,
                                const std::string& config_hash);

}  // namespace sfmis
