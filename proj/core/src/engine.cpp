#include "deltacolor/engine.hpp"

namespace deltacolor {

BallView collect_ball(const Graph& g, NodeId v, std::uint32_t r) {
  BallView view;
  view.sub = induced_subgraph(g, ball(g, v, r));
  view.center = view.sub.to_local(v);
  return view;
}

}  // namespace deltacolor
