#include "urllc/replay.hpp"

namespace urllc {

void ReplayBuffers::push(Transition t) {
  auto& buf = t.feedback == Feedback::Nack ? nack_ : ack_;
  buf.push_back(std::move(t));
  if (buf.size() > capacity_) buf.pop_front();
}

std::vector<Transition> ReplayBuffers::sample(long slot, Rng& rng) const {
  std::vector<Transition> batch;
  if (nack_period_ > 0 && slot % nack_period_ == 0 && !nack_.empty()) {
    std::uniform_int_distribution<size_t> pick(0, nack_.size() - 1);
    batch.reserve(batch_);
    for (int i = 0; i < batch_; ++i) batch.push_back(nack_[pick(rng)]);
    return batch;
  }
  const int half = batch_ / 2;
  if (static_cast<int>(ack_.size()) < batch_) return batch;  // skip: not enough data
  std::uniform_int_distribution<size_t> pick(0, ack_.size() - 1);
  batch.reserve(batch_);
  for (int i = 0; i < half; ++i) batch.push_back(ack_[pick(rng)]);
  for (size_t i = ack_.size() - half; i < ack_.size(); ++i) batch.push_back(ack_[i]);
  return batch;
}

}  // namespace urllc
