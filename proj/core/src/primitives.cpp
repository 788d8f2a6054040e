#include "deltacolor/primitives.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "deltacolor/engine.hpp"
#include "deltacolor/errors.hpp"
#include "deltacolor/random.hpp"

namespace deltacolor {
namespace {

std::vector<std::uint64_t> default_ids(std::size_t n) {
  std::vector<std::uint64_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::uint64_t{0});
  return ids;
}

// Breadth-first search with reusable scratch, cleared by an epoch counter.
class Bfs {
 public:
  explicit Bfs(const Graph& g) : g_(g), stamp_(g.num_nodes(), 0), dist_(g.num_nodes(), 0) {}

  void start() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    queue_.clear();
    head_ = 0;
  }
  bool seen(NodeId v) const { return stamp_[v] == epoch_; }
  std::uint32_t dist(NodeId v) const { return dist_[v]; }
  void add_source(NodeId v) {
    if (!seen(v)) {
      stamp_[v] = epoch_;
      dist_[v] = 0;
      queue_.push_back(v);
    }
  }
  // Pops the next node, expanding its neighbors while within `limit`.
  std::optional<NodeId> next(std::uint32_t limit) {
    if (head_ == queue_.size()) {
      return std::nullopt;
    }
    const NodeId u = queue_[head_++];
    if (dist_[u] < limit) {
      for (NodeId w : g_.neighbors(u)) {
        if (!seen(w)) {
          stamp_[w] = epoch_;
          dist_[w] = dist_[u] + 1;
          queue_.push_back(w);
        }
      }
    }
    return u;
  }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> queue_;
  std::size_t head_ = 0;
  std::uint32_t epoch_ = 0;
};

bool is_prime(std::uint64_t x) {
  if (x < 2) {
    return false;
  }
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      return false;
    }
  }
  return true;
}

std::uint64_t prime_at_least(std::uint64_t x) {
  while (!is_prime(x)) {
    ++x;
  }
  return x;
}

// q^e, saturating at 2^64-1.
std::uint64_t sat_pow(std::uint64_t q, std::uint32_t e) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (q != 0 && acc > kMax / q) {
      return kMax;
    }
    acc *= q;
  }
  return acc;
}

// Smallest t with t^e >= m.
std::uint64_t ceil_root(std::uint64_t m, std::uint32_t e) {
  auto t = static_cast<std::uint64_t>(std::pow(static_cast<long double>(m), 1.0L / e));
  t = std::max<std::uint64_t>(t, 1);
  while (t > 1 && sat_pow(t - 1, e) >= m) {
    --t;
  }
  while (sat_pow(t, e) < m) {
    ++t;
  }
  return t;
}

struct LinialState {
  std::uint64_t color = 0;            // 0-based
  std::size_t step = 0;
  std::vector<std::uint64_t> nbr;     // last known neighbor colors, by slot
};

// Polynomial reduction steps, then one round per surplus color class in
// which that class moves to the smallest color below `target` unused by
// its neighbors.
struct LinialProgram {
  using State = LinialState;
  using Message = std::uint64_t;
  using Output = Color;

  std::span<const std::uint64_t> ids;
  const std::vector<LinialStep>* schedule;
  std::uint64_t palette;  // after the polynomial steps
  std::uint64_t target;

  State init(const LocalView& view) const { return {ids[view.index], 0, std::vector<std::uint64_t>(view.neighbors.size())}; }

  static std::uint64_t eval(std::uint64_t color, const LinialStep& s, std::uint64_t x) {
    // Horner on the base-q digits of color, most significant first.
    std::array<std::uint64_t, 64> digits{};
    for (std::uint32_t i = 0; i <= s.d; ++i) {
      digits[i] = color % s.q;
      color /= s.q;
    }
    std::uint64_t acc = 0;
    for (std::uint32_t i = s.d + 1; i-- > 0;) {
      acc = (acc * x + digits[i]) % s.q;
    }
    return acc;
  }

  StepResult<State, Message, Output> step(const LocalView&, State state, Inbox<Message> inbox, Rng&) const {
    for (std::size_t i = 0; i < inbox.size(); ++i) {
      if (inbox[i]) {
        state.nbr[i] = *inbox[i];
      }
    }
    const std::size_t k = state.step;
    const std::size_t poly = schedule->size();
    if (k >= 1 && k <= poly) {
      const LinialStep& s = (*schedule)[k - 1];
      for (std::uint64_t x = 0;; ++x) {
        const std::uint64_t mine = eval(state.color, s, x);
        const bool clash = std::any_of(state.nbr.begin(), state.nbr.end(),
                                       [&](std::uint64_t c) { return eval(c, s, x) == mine; });
        if (!clash) {
          state.color = x * s.q + mine;
          break;
        }
      }
    } else if (k > poly && state.color == palette - (k - poly)) {
      std::uint64_t c = 0;
      while (std::find(state.nbr.begin(), state.nbr.end(), c) != state.nbr.end()) {
        ++c;
      }
      state.color = c;
    }
    StepResult<State, Message, Output> out{std::move(state), std::nullopt, {}, std::nullopt};
    out.broadcast = out.state.color;
    if (k == poly + (palette - target)) {
      out.output = static_cast<Color>(out.state.color + 1);
    }
    ++out.state.step;
    return out;
  }
};

}  // namespace

std::vector<LinialStep> linial_schedule(std::uint64_t initial_palette, std::size_t max_degree) {
  std::vector<LinialStep> steps;
  if (max_degree == 0) {
    return steps;
  }
  std::uint64_t m = initial_palette;
  for (;;) {
    LinialStep best{std::numeric_limits<std::uint64_t>::max(), 0};
    for (std::uint32_t d = 1; d < 64; ++d) {
      const std::uint64_t q = prime_at_least(std::max<std::uint64_t>(max_degree * d + 1, ceil_root(m, d + 1)));
      if (q < best.q) {
        best = {q, d};
      }
      if (max_degree * d + 1 > best.q) {
        break;
      }
    }
    if (best.q * best.q >= m) {
      return steps;
    }
    steps.push_back(best);
    m = best.q * best.q;
  }
}

LinialResult linial_coloring(const Graph& g, std::span<const std::uint64_t> ids) {
  const std::size_t n = g.num_nodes();
  LinialResult result;
  if (n == 0) {
    return result;
  }
  if (g.max_degree() == 0) {
    result.colors.assign(n, 1);
    result.palette = 1;
    return result;
  }
  std::vector<std::uint64_t> own;
  if (ids.empty()) {
    own = default_ids(n);
    ids = own;
  }
  const std::uint64_t initial = *std::max_element(ids.begin(), ids.end()) + 1;
  const auto schedule = linial_schedule(initial, g.max_degree());
  const std::uint64_t palette = schedule.empty() ? initial : schedule.back().q * schedule.back().q;
  const std::uint64_t delta = g.max_degree();
  const std::uint64_t target = std::min(palette, 5 * delta * delta);
  LinialProgram program{ids, &schedule, palette, target};
  auto run = run_sync(g, program, 0, schedule.size() + (palette - target) + 1, ids);
  result.colors = std::move(run.outputs);
  result.rounds = run.rounds;
  result.palette = static_cast<Color>(target);
  return result;
}

Graph power_graph(const Graph& g, std::uint32_t k) {
  if (k <= 1) {
    return g;
  }
  Bfs bfs(g);
  std::vector<Edge> edges;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    bfs.start();
    bfs.add_source(v);
    while (auto u = bfs.next(k)) {
      if (*u > v) {
        edges.emplace_back(v, *u);
      }
    }
  }
  return Graph::from_edges(g.num_nodes(), edges);
}

std::uint32_t covering_radius(const Graph& g, std::span<const NodeId> members) {
  if (g.num_nodes() == 0) {
    return 0;
  }
  const auto dist = bfs_distances(g, members);
  return *std::max_element(dist.begin(), dist.end());
}

std::uint32_t min_pairwise_distance(const Graph& g, std::span<const NodeId> members, std::uint32_t cap) {
  std::vector<char> member(g.num_nodes(), 0);
  for (NodeId v : members) {
    member[v] = 1;
  }
  std::uint32_t best = cap;
  Bfs bfs(g);
  for (NodeId v : members) {
    bfs.start();
    bfs.add_source(v);
    while (auto u = bfs.next(best > 0 ? best - 1 : 0)) {
      if (*u != v && member[*u]) {
        best = std::min(best, bfs.dist(*u));
      }
    }
  }
  return best;
}

namespace {

// Recursive splitting on key bits: the chosen groups of the 0-half stay, a
// chosen group of the 1-half survives when no member of the 0-half's choice
// is within rho.
class SplitRuling {
 public:
  SplitRuling(const Graph& g, std::span<const std::vector<NodeId>> groups, std::span<const std::uint64_t> keys,
              std::uint32_t rho)
      : g_(g), groups_(groups), keys_(keys), rho_(rho), bfs_(g), target_(g.num_nodes(), 0) {
    // Twice any node's eccentricity bounds a component's diameter; when rho
    // reaches it, any two groups of the component are within rho.
    auto [comp, count] = connected_components(g);
    component_ = std::move(comp);
    within_rho_.assign(count, 0);
    std::vector<char> done(count, 0);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (done[component_[v]]) {
        continue;
      }
      done[component_[v]] = 1;
      bfs_.start();
      bfs_.add_source(v);
      std::uint32_t ecc = 0;
      while (auto u = bfs_.next(kUnreached)) {
        ecc = std::max(ecc, bfs_.dist(*u));
      }
      within_rho_[component_[v]] = static_cast<std::uint64_t>(ecc) * 2 <= rho ? 1 : 0;
    }
    component_seen_.assign(count, 0);
  }

  std::vector<std::uint32_t> run(std::vector<std::uint32_t> order, int top_bit) {
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys_[a] < keys_[b]; });
    return solve(order, 0, order.size(), top_bit);
  }

 private:
  std::vector<std::uint32_t> solve(const std::vector<std::uint32_t>& order, std::size_t lo, std::size_t hi,
                                   int bit) {
    if (hi - lo <= 1 || bit < 0) {
      return {order.begin() + lo, order.begin() + hi};
    }
    std::size_t mid = lo;
    while (mid < hi && ((keys_[order[mid]] >> bit) & 1) == 0) {
      ++mid;
    }
    auto left = solve(order, lo, mid, bit - 1);
    auto right = solve(order, mid, hi, bit - 1);
    if (left.empty() || right.empty()) {
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    // Right groups in a small component that also holds a left group clash
    // outright; only the rest need a search.
    ++component_epoch_;
    for (auto gi : left) {
      component_seen_[component_[groups_[gi].front()]] = component_epoch_;
    }
    std::vector<std::uint32_t> open;
    for (auto gi : right) {
      const auto c = component_[groups_[gi].front()];
      if (!(within_rho_[c] && component_seen_[c] == component_epoch_)) {
        open.push_back(gi);
      }
    }
    right = std::move(open);
    if (right.empty()) {
      return left;
    }
    // Mark the right side's nodes, then grow from the left side's nodes.
    ++target_epoch_;
    std::size_t pending = 0;
    for (auto gi : right) {
      for (NodeId v : groups_[gi]) {
        if (target_[v] != target_epoch_) {
          target_[v] = target_epoch_;
          ++pending;
        }
      }
    }
    bfs_.start();
    for (auto gi : left) {
      for (NodeId v : groups_[gi]) {
        bfs_.add_source(v);
      }
    }
    while (pending > 0) {
      auto u = bfs_.next(rho_);
      if (!u) {
        break;
      }
      if (target_[*u] == target_epoch_) {
        --pending;
      }
    }
    for (auto gi : right) {
      const bool clash = std::any_of(groups_[gi].begin(), groups_[gi].end(),
                                     [&](NodeId v) { return bfs_.seen(v) && bfs_.dist(v) <= rho_; });
      if (!clash) {
        left.push_back(gi);
      }
    }
    return left;
  }

  const Graph& g_;
  std::span<const std::vector<NodeId>> groups_;
  std::span<const std::uint64_t> keys_;
  std::uint32_t rho_;
  Bfs bfs_;
  std::vector<std::uint32_t> target_;
  std::uint32_t target_epoch_ = 0;
  std::vector<std::uint32_t> component_;
  std::vector<char> within_rho_;
  std::vector<std::uint32_t> component_seen_;
  std::uint32_t component_epoch_ = 0;
};

int top_bit_of(std::uint64_t max_key) { return max_key == 0 ? -1 : static_cast<int>(std::bit_width(max_key)) - 1; }

RulingSetResult greedy_by_class(const Graph& g, std::uint32_t alpha, std::span<const std::uint64_t> ids) {
  const Graph h = power_graph(g, alpha - 1);
  const auto linial = linial_coloring(h, ids);
  RulingSetResult result;
  result.rounds = linial.rounds * (alpha - 1);
  std::vector<NodeId> order(g.num_nodes());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return linial.colors[a] < linial.colors[b]; });
  // nodes of one class are more than alpha-1 apart, so the sequential sweep
  // equals the parallel one
  std::vector<char> blocked(g.num_nodes(), 0);
  for (NodeId v : order) {
    if (blocked[v]) {
      continue;
    }
    result.members.push_back(v);
    blocked[v] = 1;
    for (NodeId u : h.neighbors(v)) {
      blocked[u] = 1;
    }
  }
  result.rounds += static_cast<std::size_t>(linial.palette) * (alpha - 1);
  std::sort(result.members.begin(), result.members.end());
  return result;
}

RulingSetResult random_priority(const Graph& g, std::uint32_t alpha, std::uint64_t seed,
                                std::span<const std::uint64_t> ids) {
  const Graph h = power_graph(g, alpha - 1);
  const std::size_t n = g.num_nodes();
  RulingSetResult result;
  std::vector<char> active(n, 1);
  std::size_t remaining = n;
  std::vector<std::uint64_t> priority(n);
  for (std::uint64_t iter = 0; remaining > 0; ++iter) {
    for (NodeId v = 0; v < n; ++v) {
      if (active[v]) {
        priority[v] = node_stream(seed, ids[v], iter).next();
      }
    }
    auto beats = [&](NodeId a, NodeId b) {
      return priority[a] != priority[b] ? priority[a] > priority[b] : ids[a] < ids[b];
    };
    std::vector<NodeId> joined;
    for (NodeId v = 0; v < n; ++v) {
      if (!active[v]) {
        continue;
      }
      const auto nbrs = h.neighbors(v);
      if (std::none_of(nbrs.begin(), nbrs.end(), [&](NodeId u) { return active[u] && beats(u, v); })) {
        joined.push_back(v);
      }
    }
    for (NodeId v : joined) {
      result.members.push_back(v);
      if (active[v]) {
        active[v] = 0;
        --remaining;
      }
      for (NodeId u : h.neighbors(v)) {
        if (active[u]) {
          active[u] = 0;
          --remaining;
        }
      }
    }
    result.rounds += 2 * (alpha - 1);
  }
  std::sort(result.members.begin(), result.members.end());
  return result;
}

}  // namespace

GroupRulingResult group_ruling_set(const Graph& g, std::span<const std::vector<NodeId>> groups,
                                   std::uint32_t rho) {
  GroupRulingResult result;
  if (groups.empty()) {
    return result;
  }
  std::vector<std::uint64_t> keys(groups.size());
  std::iota(keys.begin(), keys.end(), std::uint64_t{0});
  std::vector<std::uint32_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0u);
  const int top = top_bit_of(keys.back());
  SplitRuling split(g, groups, keys, rho);
  result.chosen = split.run(std::move(order), top);
  std::sort(result.chosen.begin(), result.chosen.end());
  result.levels = static_cast<std::size_t>(top + 1);
  result.rounds = result.levels * rho;
  return result;
}

RulingSetResult ruling_set(const Graph& g, const RulingSetParams& params, std::uint64_t seed,
                           std::span<const std::uint64_t> ids) {
  if (params.alpha < 2) {
    throw Error(ErrorCode::kParamUnsupported, "alpha must be at least 2");
  }
  const std::size_t n = g.num_nodes();
  if (n == 0) {
    return {};
  }
  std::vector<std::uint64_t> own;
  if (ids.empty()) {
    own = default_ids(n);
    ids = own;
  }
  RulingSetResult result;
  switch (params.method) {
    case RulingMethod::kDet2Beta:
      if (params.alpha > 3) {
        throw Error(ErrorCode::kParamUnsupported, "det-2beta supports alpha 2 or 3, got " + std::to_string(params.alpha));
      }
      result = greedy_by_class(g, params.alpha, ids);
      break;
    case RulingMethod::kDetK: {
      std::vector<std::vector<NodeId>> singletons(n);
      std::vector<std::uint32_t> order(n);
      for (NodeId v = 0; v < n; ++v) {
        singletons[v] = {v};
        order[v] = v;
      }
      const int top = top_bit_of(*std::max_element(ids.begin(), ids.end()));
      SplitRuling split(g, singletons, ids, params.alpha - 1);
      for (auto gi : split.run(std::move(order), top)) {
        result.members.push_back(gi);
      }
      std::sort(result.members.begin(), result.members.end());
      result.rounds = static_cast<std::size_t>(top + 1) * (params.alpha - 1);
      break;
    }
    case RulingMethod::kRandLogLog:
      result = random_priority(g, params.alpha, seed, ids);
      break;
  }
  result.beta = covering_radius(g, result.members);
  return result;
}

namespace {

struct SweepState {
  std::vector<Color> taken;  // colors fixed by neighbors so far
  std::size_t step = 0;
};

// Step k lets base class k+1 pick its smallest free list color.
struct SweepProgram {
  using State = SweepState;
  using Message = Color;
  using Output = Color;

  const ListAssignment* lists;
  const Coloring* base;

  State init(const LocalView&) const { return {}; }

  StepResult<State, Message, Output> step(const LocalView& view, State state, Inbox<Message> inbox, Rng&) const {
    for (const auto& msg : inbox) {
      if (msg) {
        state.taken.push_back(*msg);
      }
    }
    StepResult<State, Message, Output> out{std::move(state), std::nullopt, {}, std::nullopt};
    if ((*base)[view.index] == out.state.step + 1) {
      const auto& taken = out.state.taken;
      for (Color c : (*lists)[view.index]) {
        if (std::find(taken.begin(), taken.end(), c) == taken.end()) {
          out.output = c;
          out.broadcast = c;
          break;
        }
      }
      if (!out.output) {
        throw Error(ErrorCode::kInternal, "no free list color at node " + std::to_string(view.index));
      }
    }
    ++out.state.step;
    return out;
  }
};

struct Proposal {
  Color color = kUncolored;
  bool final = false;
};

struct TrialState {
  ColorList available;
  Color proposal = kUncolored;
};

// Propose a random available color; keep it when no neighbor proposed or
// fixed the same color in the same round.
struct TrialProgram {
  using State = TrialState;
  using Message = Proposal;
  using Output = Color;

  const ListAssignment* lists;

  State init(const LocalView& view) const { return {(*lists)[view.index], kUncolored}; }

  StepResult<State, Message, Output> step(const LocalView&, State state, Inbox<Message> inbox, Rng& rng) const {
    bool clash = false;
    for (const auto& msg : inbox) {
      if (!msg) {
        continue;
      }
      if (msg->color == state.proposal) {
        clash = true;
      }
      if (msg->final) {
        std::erase(state.available, msg->color);
      }
    }
    StepResult<State, Message, Output> out{std::move(state), std::nullopt, {}, std::nullopt};
    auto& s = out.state;
    if (s.proposal != kUncolored && !clash) {
      out.output = s.proposal;
      out.broadcast = Proposal{s.proposal, true};
      return out;
    }
    if (s.available.empty()) {
      throw Error(ErrorCode::kInternal, "empty list during randomized list coloring");
    }
    s.proposal = s.available[rng.uniform(s.available.size())];
    out.broadcast = Proposal{s.proposal, false};
    return out;
  }
};

}  // namespace

ListColorResult list_color(const Graph& g, const ListAssignment& lists, const Coloring& base_coloring,
                           ListMode mode, std::uint64_t seed, std::span<const std::uint64_t> ids,
                           std::size_t max_rounds) {
  const std::size_t n = g.num_nodes();
  if (lists.size() != n) {
    throw Error(ErrorCode::kListTooSmall, "expected " + std::to_string(n) + " lists, got " + std::to_string(lists.size()));
  }
  for (NodeId v = 0; v < n; ++v) {
    if (lists[v].size() < g.degree(v) + 1) {
      throw Error(ErrorCode::kListTooSmall, "node " + std::to_string(v) + " has " + std::to_string(lists[v].size()) +
                                                " colors for degree " + std::to_string(g.degree(v)));
    }
  }
  ListColorResult result;
  if (n == 0) {
    return result;
  }
  std::vector<std::uint64_t> own;
  if (ids.empty()) {
    own = default_ids(n);
    ids = own;
  }
  if (mode == ListMode::kDeterministic) {
    if (base_coloring.size() != n || count_uncolored(base_coloring) > 0 || !is_proper_partial(g, base_coloring)) {
      throw Error(ErrorCode::kBadPartial, "base coloring must be total and proper");
    }
    const Color palette = *std::max_element(base_coloring.begin(), base_coloring.end());
    auto run = run_sync(g, SweepProgram{&lists, &base_coloring}, seed, palette, ids);
    result.colors = std::move(run.outputs);
    result.rounds = run.rounds;
  } else {
    auto run = run_sync(g, TrialProgram{&lists}, seed, max_rounds, ids);
    result.colors = std::move(run.outputs);
    result.rounds = run.rounds;
  }
  return result;
}

std::size_t LayerDecomposition::covered() const {
  std::size_t total = 0;
  for (const auto& layer : layers) {
    total += layer.size();
  }
  return total;
}

LayerDecomposition distance_layers(const Graph& g, std::span<const NodeId> base, std::uint32_t max_layer,
                                   const std::vector<char>& inside) {
  LayerDecomposition d;
  if (base.empty()) {
    return d;
  }
  const bool restricted = !inside.empty();
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<NodeId> current;
  for (NodeId v : base) {
    if (!seen[v]) {
      seen[v] = 1;
      current.push_back(v);
    }
  }
  while (!current.empty()) {
    std::sort(current.begin(), current.end());
    std::vector<NodeId> next;
    if (d.layers.size() < max_layer) {
      for (NodeId u : current) {
        for (NodeId w : g.neighbors(u)) {
          if (!seen[w] && (!restricted || inside[w])) {
            seen[w] = 1;
            next.push_back(w);
          }
        }
      }
    }
    d.layers.push_back(std::move(current));
    current = std::move(next);
  }
  return d;
}

std::size_t color_layer(const Graph& g, std::span<const NodeId> layer, Color palette, Coloring& colors,
                        const LayeredConfig& config, std::size_t layer_index) {
  std::vector<NodeId> nodes;
  for (NodeId v : layer) {
    if (colors[v] == kUncolored) {
      nodes.push_back(v);
    }
  }
  if (nodes.empty()) {
    return 0;
  }
  const Subgraph sub = induced_subgraph(g, nodes);
  const std::size_t k = sub.to_parent.size();
  ListAssignment lists(k);
  std::vector<std::uint64_t> sub_ids(k);
  std::vector<char> used(palette + 1, 0);
  for (NodeId local = 0; local < k; ++local) {
    const NodeId v = sub.to_parent[local];
    sub_ids[local] = config.ids.empty() ? v : config.ids[v];
    std::fill(used.begin(), used.end(), 0);
    for (NodeId w : g.neighbors(v)) {
      if (colors[w] <= palette) {
        used[colors[w]] = 1;
      }
    }
    for (Color c = 1; c <= palette; ++c) {
      if (!used[c]) {
        lists[local].push_back(c);
      }
    }
    if (lists[local].size() < sub.graph.degree(local) + 1) {
      throw Error(ErrorCode::kLayerListViolation,
                  "node " + std::to_string(v) + " in layer " + std::to_string(layer_index) + " has " +
                      std::to_string(lists[local].size()) + " free colors for layer degree " +
                      std::to_string(sub.graph.degree(local)));
    }
  }
  std::size_t rounds = 0;
  Coloring base(k);
  if (config.base_coloring != nullptr) {
    for (NodeId local = 0; local < k; ++local) {
      base[local] = (*config.base_coloring)[sub.to_parent[local]];
    }
  } else if (config.mode == ListMode::kDeterministic) {
    auto linial = linial_coloring(sub.graph, sub_ids);
    base = std::move(linial.colors);
    rounds += linial.rounds;
  }
  auto colored = list_color(sub.graph, lists, base, config.mode, config.seed, sub_ids);
  rounds += colored.rounds;
  for (NodeId local = 0; local < k; ++local) {
    colors[sub.to_parent[local]] = colored.colors[local];
  }
  return rounds;
}

LayeredResult layered_color(const Graph& g, const LayerDecomposition& decomposition, Color palette,
                            const Coloring& fixed, const LayeredConfig& config) {
  LayeredResult result;
  result.colors = fixed;
  result.colors.resize(g.num_nodes(), kUncolored);
  for (std::size_t i = decomposition.layers.size(); i-- > 1;) {
    result.rounds += color_layer(g, decomposition.layers[i], palette, result.colors, config, i);
  }
  return result;
}

NetworkDecomposition network_decomposition(const Graph& g, std::uint32_t target_diameter,
                                           std::size_t target_colors, std::uint64_t seed,
                                           std::uint32_t separation, std::span<const std::uint64_t> ids) {
  (void)target_colors;
  const std::size_t n = g.num_nodes();
  separation = std::max<std::uint32_t>(separation, 1);
  NetworkDecomposition nd;
  nd.cluster.assign(n, kUnreached);
  nd.color.assign(n, kUnreached);
  const std::uint32_t cap = target_diameter / (2 * separation) + 1;
  const std::uint32_t base_radius = std::max<std::uint32_t>(1, (cap + 1) / 2);
  nd.diameter_bound = 2 * (cap - 1) * separation;
  if (n == 0) {
    return nd;
  }
  std::vector<std::uint64_t> own;
  if (ids.empty()) {
    own = default_ids(n);
    ids = own;
  }
  std::vector<NodeId> by_id(n);
  std::iota(by_id.begin(), by_id.end(), NodeId{0});
  std::sort(by_id.begin(), by_id.end(), [&](NodeId a, NodeId b) { return ids[a] > ids[b]; });

  Bfs bfs(g);
  std::vector<NodeId> claimed_by(n);
  std::vector<char> interior(n);
  std::size_t remaining = n;
  for (std::uint32_t phase = 0; remaining > 0; ++phase) {
    std::fill(claimed_by.begin(), claimed_by.end(), kNoNode);
    std::fill(interior.begin(), interior.end(), 0);
    // Centers in descending id order claim unclustered nodes in their ball;
    // a claim is interior when it lies strictly inside the radius.
    std::size_t claimed = 0;
    for (NodeId v : by_id) {
      if (claimed == remaining) {
        break;  // later centers would find nothing left to claim
      }
      if (nd.cluster[v] != kUnreached) {
        continue;
      }
      Rng rng = node_stream(seed, ids[v], phase);
      std::uint32_t radius = base_radius;
      while (radius < cap && rng.bernoulli(0.5)) {
        ++radius;
      }
      bfs.start();
      bfs.add_source(v);
      while (auto u = bfs.next(radius * separation)) {
        if (nd.cluster[*u] != kUnreached || claimed_by[*u] != kNoNode) {
          continue;
        }
        claimed_by[*u] = v;
        ++claimed;
        const std::uint32_t hops = (bfs.dist(*u) + separation - 1) / separation;
        interior[*u] = hops < radius ? 1 : 0;
      }
    }
    std::vector<std::uint32_t> cluster_of_center(n, kUnreached);
    for (NodeId v : by_id) {
      if (nd.cluster[v] == kUnreached && interior[v] && claimed_by[v] == v) {
        cluster_of_center[v] = static_cast<std::uint32_t>(nd.centers.size());
        nd.centers.push_back(v);
      }
    }
    for (NodeId u = 0; u < n; ++u) {
      if (nd.cluster[u] == kUnreached && interior[u]) {
        const NodeId c = claimed_by[u];
        if (cluster_of_center[c] == kUnreached) {
          cluster_of_center[c] = static_cast<std::uint32_t>(nd.centers.size());
          nd.centers.push_back(c);
        }
        nd.cluster[u] = cluster_of_center[c];
        nd.color[u] = phase;
        --remaining;
      }
    }
    nd.num_colors = phase + 1;
    nd.rounds += static_cast<std::size_t>(cap) * separation;
  }
  return nd;
}

std::uint32_t weak_diameter(const Graph& g, const NetworkDecomposition& nd) {
  std::uint32_t best = 0;
  Bfs bfs(g);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    bfs.start();
    bfs.add_source(v);
    while (auto u = bfs.next(kUnreached)) {
      if (nd.cluster[*u] == nd.cluster[v]) {
        best = std::max(best, bfs.dist(*u));
      }
    }
  }
  return best;
}

}  // namespace deltacolor
