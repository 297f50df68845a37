#pragma once

#include <optional>
#include <vector>

#include "wlsim/engine.hpp"
#include "wlsim/topology.hpp"

namespace wlsim {

struct Totals {
  long generated = 0;
  long delivered = 0;
  long forwards = 0;

  bool operator==(const Totals&) const = default;
};

// Per-node transmission bookkeeping. own_tx counts packets the node injected
// as a source (a packet it held back is not a transmission), own_delivered_tx
// the injected packets that reached their destination, forwards the
// forwarding transmissions it performed for others.
struct NodeLedger {
  long own_tx = 0;
  long own_delivered_tx = 0;
  long forwards = 0;

  bool operator==(const NodeLedger&) const = default;
};

struct StepMetrics {
  long step = 0;
  double avg_alpha = 0.0;
  double cum_pdr = 0.0;  // cumulative over the run so far
  std::optional<double> fwd_per_dlv;  // empty until something was delivered
  double avg_efficiency = 0.0;

  bool operator==(const StepMetrics&) const = default;
};

struct MetricsSeries {
  std::vector<StepMetrics> rows;
  Totals totals;

  bool operator==(const MetricsSeries&) const = default;
};

// delivered / generated; 0 when nothing was generated yet.
double packet_delivery_rate(const Totals& totals);

// Total forwarding transmissions per delivered packet; empty while the
// delivered count is zero (the ratio means nothing then).
std::optional<double> forwards_per_delivered(const Totals& totals);

// Useful throughput per unit of transmission energy:
// own_delivered_tx / ((own_tx + forwards) * power_per_tx).
// 0 for a node that never transmitted.
double transmission_efficiency(const NodeLedger& ledger,
                               double power_per_tx = 1.0);

// Mean over participating nodes that transmitted at least once.
double average_transmission_efficiency(const std::vector<NodeLedger>& ledgers,
                                       const std::vector<bool>& participating,
                                       double power_per_tx = 1.0);

// Mean alpha over participating nodes.
double average_alpha(const std::vector<NodeState>& states,
                     const std::vector<bool>& participating);

// Folds one StepEvents after another into cumulative counters and one
// StepMetrics row per step. Alpha is sampled after the learning update.
class MetricsAccumulator {
 public:
  explicit MetricsAccumulator(const Scenario& scenario);

  void observe_step(const StepEvents& events,
                    const std::vector<NodeState>& states);

  const MetricsSeries& series() const { return series_; }
  const Totals& totals() const { return series_.totals; }
  const std::vector<NodeLedger>& ledgers() const { return ledgers_; }
  const std::vector<bool>& participating() const { return participating_; }

 private:
  std::vector<NodeId> route_source_;
  std::vector<bool> participating_;
  std::vector<NodeLedger> ledgers_;
  MetricsSeries series_;
};

}  // namespace wlsim
