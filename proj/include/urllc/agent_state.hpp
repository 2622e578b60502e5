#pragma once

#include <deque>
#include <vector>

#include "urllc/phy.hpp"
#include "urllc/types.hpp"

namespace urllc {

// Flattens per-device observations into the fixed-length network input.
//
// Each device block holds tau CQI values (oldest to newest), the feedback
// flag of the previous slot (+1 ACK / -1 NACK if this device was served, 0
// otherwise), the served-last-slot share, the device's last selected rate and
// its OLLA corrective term. Blocks of served devices are zeroed; the
// unserved mask is appended after the blocks, so the full vector is
// K*(tau+4) + K long.
struct StateBuilder {
  int devices = 4;
  int tau = 12;
  int cqi_levels = 16;
  double rate_max = 8.0;

  int block_size() const { return tau + 4; }
  int blocks_size() const { return devices * block_size(); }
  int state_size() const { return blocks_size() + devices; }
  int mask_offset() const { return blocks_size(); }
  int last_rate_offset(int device) const { return device * block_size() + tau + 2; }

  vec build(const std::vector<std::deque<int>>& cqi_history, int last_device,
            Feedback last_feedback, const std::vector<double>& last_rate,
            const std::vector<double>& olla_delta, const std::vector<bool>& mask) const;

  // Readers against the flattened layout (used by the training path).
  bool unserved(const vec& state, int device) const {
    return state(mask_offset() + device) > 0.5;
  }
  double last_rate_of(const vec& state, int device) const {
    return state(last_rate_offset(device)) * rate_max;
  }
};

}  // namespace urllc
