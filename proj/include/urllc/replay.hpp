#pragma once

#include <deque>
#include <vector>

#include "urllc/phy.hpp"
#include "urllc/types.hpp"

namespace urllc {

struct Transition {
  vec state;
  int device = 0;
  double rate_delta = 0.0;
  double rate_abs = 0.0;  // pre-correction absolute rate of the action
  double reward = 0.0;
  vec next_state;
  Feedback feedback = Feedback::Ack;
};

// Dual replay storage: NACK transitions go to a dedicated buffer that is
// drained wholesale every nack_period slots; ACK batches mix uniform draws
// with the most recent transitions.
class ReplayBuffers {
 public:
  ReplayBuffers(size_t capacity, int nack_period, int batch)
      : capacity_(capacity), nack_period_(nack_period), batch_(batch) {}

  void push(Transition t);
  size_t ack_size() const { return ack_.size(); }
  size_t nack_size() const { return nack_.size(); }
  int batch_size() const { return batch_; }

  // Empty result means "not enough data, skip this training step".
  std::vector<Transition> sample(long slot, Rng& rng) const;

 private:
  size_t capacity_;
  int nack_period_;
  int batch_;
  std::deque<Transition> ack_;
  std::deque<Transition> nack_;
};

}  // namespace urllc
