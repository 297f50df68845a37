#include "wlsim/metrics.hpp"

#include <stdexcept>

namespace wlsim {

double packet_delivery_rate(const Totals& totals) {
  if (totals.generated == 0) return 0.0;
  return static_cast<double>(totals.delivered) /
         static_cast<double>(totals.generated);
}

std::optional<double> forwards_per_delivered(const Totals& totals) {
  if (totals.delivered == 0) return std::nullopt;
  return static_cast<double>(totals.forwards) /
         static_cast<double>(totals.delivered);
}

double transmission_efficiency(const NodeLedger& ledger, double power_per_tx) {
  if (!(power_per_tx > 0.0)) {
    throw std::invalid_argument("transmission_efficiency: power_per_tx must be > 0");
  }
  const long tx = ledger.own_tx + ledger.forwards;
  if (tx == 0) return 0.0;
  return static_cast<double>(ledger.own_delivered_tx) /
         (static_cast<double>(tx) * power_per_tx);
}

double average_transmission_efficiency(const std::vector<NodeLedger>& ledgers,
                                       const std::vector<bool>& participating,
                                       double power_per_tx) {
  double sum = 0.0;
  long count = 0;
  for (std::size_t i = 0; i < ledgers.size(); ++i) {
    if (!participating[i]) continue;
    if (ledgers[i].own_tx + ledgers[i].forwards == 0) continue;
    sum += transmission_efficiency(ledgers[i], power_per_tx);
    ++count;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double average_alpha(const std::vector<NodeState>& states,
                     const std::vector<bool>& participating) {
  double sum = 0.0;
  long count = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!participating[i]) continue;
    sum += states[i].alpha;
    ++count;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

MetricsAccumulator::MetricsAccumulator(const Scenario& scenario)
    : participating_(participating_nodes(scenario)),
      ledgers_(scenario.num_nodes) {
  route_source_.reserve(scenario.routes.size());
  for (const Route& r : scenario.routes) route_source_.push_back(r.source());
}

void MetricsAccumulator::observe_step(const StepEvents& events,
                                      const std::vector<NodeState>& states) {
  Totals& totals = series_.totals;
  for (const PacketOutcome& out : events.outcomes) {
    ++totals.generated;
    const NodeId src = route_source_[out.route_index];
    if (out.break_position >= 1) ++ledgers_[src].own_tx;
    if (out.delivered) {
      ++totals.delivered;
      ++ledgers_[src].own_delivered_tx;
    }
    totals.forwards += static_cast<long>(out.forwards_performed.size());
    for (NodeId f : out.forwards_performed) ++ledgers_[f].forwards;
  }

  StepMetrics row;
  row.step = events.step;
  row.avg_alpha = average_alpha(states, participating_);
  row.cum_pdr = packet_delivery_rate(totals);
  row.fwd_per_dlv = forwards_per_delivered(totals);
  row.avg_efficiency = average_transmission_efficiency(ledgers_, participating_);
  series_.rows.push_back(row);
}

}  // namespace wlsim
