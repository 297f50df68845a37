#pragma once

#include <vector>

#include "wlsim/engine.hpp"
#include "wlsim/topology.hpp"

namespace wlsim {

enum class StrategyKind {
  WeakestLink,
  // Stylized re-creation of the scheme it is named after: an observed
  // refusal makes the detector punish every one of its successors, and its
  // own disciplinary drops are never announced upstream, so punishment
  // spreads instead of staying contained.
  HanStyle,
  // Stylized: keeps the targeted punishment scope but the learning update
  // ignores utility losses, so alpha never decreases of its own accord.
  PandanaStyle,
};

const char* to_label(StrategyKind kind);

// False for the Han-style baseline: its punishers stay silent, so the next
// observer upstream treats the drop as a fresh defection.
bool announces_punishment(StrategyKind kind);

// Who the observer punishes after seeing `defector` refuse: just the
// defector, or (Han-style) every successor the observer routes for.
std::vector<NodeId> punishment_targets(
    StrategyKind kind, NodeId observer, NodeId defector,
    const std::vector<std::vector<NodeId>>& successors);

// Pandana-style learning: punished nodes recover exactly as in the
// weakest-link rule, but the voluntary part only ever moves alpha up.
void pandana_style_update(NodeState& state);

}  // namespace wlsim
