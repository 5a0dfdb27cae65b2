#pragma once

#include <vector>

#include "emd/geometry.hpp"

namespace emd {

struct MassPoint {
  Vec rep;
  double mass = 0.0;
};

/// Balanced transportation instance between two weighted point sets.
struct DiscreteTransportProblem {
  std::vector<MassPoint> supplies;
  std::vector<MassPoint> demands;
  Metric metric = Metric::L2;
};

struct FlowEntry {
  int i = 0;  // supply index
  int j = 0;  // demand index
  double mass = 0.0;
};

struct DiscreteFlow {
  std::vector<FlowEntry> entries;
  double cost = 0.0;
  // dual certificate (complementary slackness verified before returning)
  std::vector<double> potential_supply;
  std::vector<double> potential_demand;
  double max_dual_violation = 0.0;
  long long pivots = 0;
};

/// Exact optimal flow via network simplex on the bipartite transportation
/// graph. Throws if the instance is unbalanced beyond 1e-9 or if the dual
/// certificate cannot be verified to 1e-7 relative slack.
DiscreteFlow solve_transportation(const DiscreteTransportProblem& p);

}  // namespace emd
