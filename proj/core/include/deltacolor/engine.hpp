#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltacolor/errors.hpp"
#include "deltacolor/graph.hpp"
#include "deltacolor/random.hpp"

namespace deltacolor {

// What a node knows before the first round: its own identifier, its
// neighbors' identifiers and the global parameters n and Delta.
struct LocalView {
  NodeId index = 0;
  std::uint64_t id = 0;
  std::span<const NodeId> neighbors;
  std::span<const std::uint64_t> neighbor_ids;
  std::size_t n = 0;
  std::size_t max_degree = 0;
};

// Messages received in the current round, aligned with LocalView::neighbors.
template <class M>
using Inbox = std::span<const std::optional<M>>;

template <class S, class M, class O>
struct StepResult {
  S state;
  std::optional<M> broadcast;               // sent to every neighbor
  std::vector<std::optional<M>> directed;   // per neighbor slot; overrides broadcast when non-empty
  std::optional<O> output;                  // terminal output; the node stops after this step
};

template <class P>
concept NodeProgram = requires(const P& p, const LocalView& view, typename P::State s,
                               Inbox<typename P::Message> inbox, Rng& rng) {
  { p.init(view) } -> std::same_as<typename P::State>;
  { p.step(view, std::move(s), inbox, rng) }
      -> std::same_as<StepResult<typename P::State, typename P::Message, typename P::Output>>;
};

template <class O>
struct RunResult {
  std::vector<O> outputs;
  std::size_t rounds = 0;
};

// Lockstep LOCAL-model execution. Compute step k (k = 0, 1, ...) sees the
// messages sent in step k-1; the run ends after the first step in which every
// node has produced its output, and `rounds` is the number of message
// exchanges before that step. Randomness for node `id` in step k is
// node_stream(seed, id, k). `ids` defaults to the node indices.
template <NodeProgram P>
RunResult<typename P::Output> run_sync(const Graph& g, const P& program, std::uint64_t seed,
                                       std::size_t max_rounds, std::span<const std::uint64_t> ids = {}) {
  using State = typename P::State;
  using Message = typename P::Message;
  using Output = typename P::Output;

  const std::size_t n = g.num_nodes();
  std::vector<std::uint64_t> own_ids;
  if (ids.empty()) {
    own_ids.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      own_ids[i] = i;
    }
    ids = own_ids;
  }

  // neighbor ids laid out like the adjacency array; reverse[e] is the slot
  // of the sender in the receiver's adjacency list
  std::vector<std::uint64_t> neighbor_ids(2 * g.num_edges());
  std::vector<std::size_t> reverse(2 * g.num_edges());
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeId w = nbrs[i];
      neighbor_ids[g.offset(u) + i] = ids[w];
      const auto back = g.neighbors(w);
      reverse[g.offset(u) + i] =
          g.offset(w) + static_cast<std::size_t>(std::lower_bound(back.begin(), back.end(), u) - back.begin());
    }
  }
  auto view_of = [&](NodeId u) {
    LocalView view;
    view.index = u;
    view.id = ids[u];
    view.neighbors = g.neighbors(u);
    view.neighbor_ids = std::span<const std::uint64_t>(neighbor_ids.data() + g.offset(u), g.degree(u));
    view.n = n;
    view.max_degree = g.max_degree();
    return view;
  };

  std::vector<State> states;
  states.reserve(n);
  for (NodeId u = 0; u < n; ++u) {
    states.push_back(program.init(view_of(u)));
  }
  std::vector<std::optional<Output>> outputs(n);
  std::vector<std::optional<Message>> inbox(2 * g.num_edges());
  std::vector<std::optional<Message>> next(2 * g.num_edges());
  std::size_t done = 0;

  for (std::size_t round = 0;; ++round) {
    for (auto& slot : next) {
      slot.reset();
    }
    for (NodeId u = 0; u < n; ++u) {
      if (outputs[u]) {
        continue;
      }
      const LocalView view = view_of(u);
      Rng rng = node_stream(seed, view.id, round);
      Inbox<Message> in(inbox.data() + g.offset(u), g.degree(u));
      auto result = program.step(view, std::move(states[u]), in, rng);
      states[u] = std::move(result.state);
      if (!result.directed.empty()) {
        for (std::size_t i = 0; i < result.directed.size() && i < g.degree(u); ++i) {
          next[reverse[g.offset(u) + i]] = std::move(result.directed[i]);
        }
      } else if (result.broadcast) {
        for (std::size_t i = 0; i < g.degree(u); ++i) {
          next[reverse[g.offset(u) + i]] = result.broadcast;
        }
      }
      if (result.output) {
        outputs[u] = std::move(result.output);
        ++done;
      }
    }
    if (done == n) {
      RunResult<Output> out;
      out.rounds = round;
      out.outputs.reserve(n);
      for (auto& o : outputs) {
        out.outputs.push_back(std::move(*o));
      }
      return out;
    }
    if (round + 1 > max_rounds) {
      throw Error(ErrorCode::kRoundLimitExceeded,
                  std::to_string(n - done) + " nodes without output after " + std::to_string(max_rounds) + " rounds");
    }
    std::swap(inbox, next);
  }
}

// Induced subgraph on the r-ball around v with its id translation.
struct BallView {
  Subgraph sub;
  NodeId center = 0;  // local id of v
};

BallView collect_ball(const Graph& g, NodeId v, std::uint32_t r);

}  // namespace deltacolor
