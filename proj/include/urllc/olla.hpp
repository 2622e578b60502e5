#pragma once

#include <algorithm>
#include <vector>

#include "urllc/mcs.hpp"
#include "urllc/phy.hpp"

namespace urllc {

// Outer-loop link adaptation. One corrective term per device, driven toward
// the target BLER by ACK/NACK feedback:
//   delta += step * (target - F) / (1 - target),  F = 0 on ACK, 1 on NACK.
struct OllaState {
  std::vector<double> delta;
  double step = 0.09;
  double target = 1e-3;
  double delta_min = -8.0;  // windup clamp, [-r_max, +2]
  double delta_max = 2.0;

  OllaState() = default;
  OllaState(int devices, double step_size, double bler_target, double rate_max)
      : delta(devices, 0.0), step(step_size), target(bler_target), delta_min(-rate_max) {}

  void reset() { std::fill(delta.begin(), delta.end(), 0.0); }

  void update(int device, Feedback feedback) {
    const double f = feedback == Feedback::Ack ? 0.0 : 1.0;
    double d = delta[device] + step * (target - f) / (1.0 - target);
    delta[device] = std::clamp(d, delta_min, delta_max);
  }
};

// Corrected rate in continuous mode: max(0, rate + delta).
inline double olla_apply(double rate, double delta) { return std::max(0.0, rate + delta); }

// Discrete mode: floor to the MCS grid after adding the corrective term.
inline McsTable::Entry olla_apply_discrete(double rate, double delta, const McsTable& table) {
  return table.floor(rate + delta);
}

}  // namespace urllc
