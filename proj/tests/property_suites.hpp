#pragma once

#include <cstdint>
#include <string>

// Randomized invariant suites shared by the unit tests and the acceptance
// harness. Each suite runs `cases` independent configurations and reports
// the first failing case, if any.

namespace wlsim::props {

struct SuiteResult {
  long cases = 0;
  long failures = 0;
  std::string detail;  // first failure

  bool ok() const { return failures == 0; }
};

// Every alpha stays inside [0, 1] after every step, including under update
// steps large enough to overshoot both ends.
SuiteResult alpha_clamping(long cases, std::uint64_t seed);

// Settled utilities reconstruct exactly from the step outcomes: positions
// 0..b collect the chain gain, forwarding intermediates pay the cost.
SuiteResult settlement_conservation(long cases, std::uint64_t seed);

// A punishment issued at step s blocks the directed edge during s+1..s+T
// and never outside that window; recorded drops match an independently
// maintained window table.
SuiteResult punished_edge_blocking(long cases, std::uint64_t seed);

// Punishments land exactly on the strategy's scope: the refusing node for
// the targeted strategies, every successor of the observer plus the refuser
// for the han-style baseline; announcements stand observers down.
SuiteResult punishment_scope(long cases, std::uint64_t seed);

// The pandana-style update never lowers a forwarding probability.
SuiteResult pandana_monotonicity(long cases, std::uint64_t seed);

}  // namespace wlsim::props
