#include "wlsim/baselines.hpp"

#include <algorithm>

namespace wlsim {

const char* to_label(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::WeakestLink: return "weakest-link";
    case StrategyKind::HanStyle: return "han-style";
    case StrategyKind::PandanaStyle: return "pandana-style";
  }
  return "unknown";
}

bool announces_punishment(StrategyKind kind) {
  return kind != StrategyKind::HanStyle;
}

std::vector<NodeId> punishment_targets(
    StrategyKind kind, NodeId observer, NodeId defector,
    const std::vector<std::vector<NodeId>>& successors) {
  if (kind != StrategyKind::HanStyle) return {defector};
  std::vector<NodeId> targets = successors[observer];
  if (std::find(targets.begin(), targets.end(), defector) == targets.end()) {
    targets.push_back(defector);
  }
  return targets;
}

void pandana_style_update(NodeState& state) {
  if (state.punished()) {
    state.alpha = std::min(1.0, state.alpha + state.epsilon);
  } else {
    const double delta = state.current_utility - state.last_utility;
    if (delta > 0.0) {
      state.alpha = std::min(1.0, state.alpha + state.lambda * delta);
    }
  }
  state.last_utility = state.current_utility;
  state.current_utility = 0.0;
}

}  // namespace wlsim
