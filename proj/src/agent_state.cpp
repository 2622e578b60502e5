#include "urllc/agent_state.hpp"

#include <stdexcept>

namespace urllc {

vec StateBuilder::build(const std::vector<std::deque<int>>& cqi_history, int last_device,
                        Feedback last_feedback, const std::vector<double>& last_rate,
                        const std::vector<double>& olla_delta,
                        const std::vector<bool>& mask) const {
  const size_t k_total = static_cast<size_t>(devices);
  if (cqi_history.size() != k_total || last_rate.size() != k_total ||
      olla_delta.size() != k_total || mask.size() != k_total)
    throw std::invalid_argument("StateBuilder::build: per-device input size mismatch");

  vec state = vec::Zero(state_size());
  const double cqi_scale = 1.0 / (cqi_levels - 1);
  for (int k = 0; k < devices; ++k) {
    state(mask_offset() + k) = mask[k] ? 1.0 : 0.0;
    if (!mask[k]) continue;  // served blocks stay zeroed

    const auto& hist = cqi_history[k];
    double* block = state.data() + k * block_size();
    for (int i = 0; i < tau; ++i) {
      // newest at the end of the block's CQI section; short histories are
      // padded with their oldest entry
      const long idx = static_cast<long>(hist.size()) - tau + i;
      const int cqi = hist.empty() ? 0 : hist[static_cast<size_t>(std::max(0L, idx))];
      block[i] = cqi * cqi_scale;
    }
    if (k == last_device) {
      block[tau] = last_feedback == Feedback::Ack ? 1.0 : -1.0;
      block[tau + 1] = 1.0;
    }
    block[tau + 2] = last_rate[k] / rate_max;
    block[tau + 3] = olla_delta[k] / rate_max;
  }
  return state;
}

}  // namespace urllc
