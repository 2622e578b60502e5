#include "urllc/gexp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace urllc {

std::vector<double> gexp_probabilities(const GexpState& state,
                                       const std::vector<double>& actor_scores,
                                       const std::vector<bool>& mask) {
  const size_t k_total = state.weights.size();
  if (actor_scores.size() != k_total || mask.size() != k_total)
    throw std::invalid_argument("gexp_probabilities: size mismatch");

  double weight_sum = 0.0;
  for (size_t k = 0; k < k_total; ++k)
    if (mask[k]) weight_sum += state.weights[k];
  if (!(weight_sum > 0.0)) throw std::logic_error("gexp_probabilities: no unserved device");

  // Mixture probabilities p_hat, then the preference-assisted softmax tilt.
  // exp() terms are shifted by the max exponent for overflow safety; the
  // final renormalization cancels the shift.
  double max_exp = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < k_total; ++k)
    if (mask[k]) max_exp = std::max(max_exp, state.preferences[k] * actor_scores[k]);

  std::vector<double> p(k_total, 0.0);
  double total = 0.0;
  for (size_t k = 0; k < k_total; ++k) {
    if (!mask[k]) continue;
    const double p_hat = (1.0 - state.exploration) * state.weights[k] / weight_sum +
                         state.exploration / static_cast<double>(k_total + 1);
    const double tilt = std::exp(state.preferences[k] * actor_scores[k] - max_exp);
    p[k] = tilt * p_hat;
    total += p[k];
  }
  for (double& v : p) v /= total;
  return p;
}

int select_device(const GexpState& state, const std::vector<double>& actor_scores,
                  const std::vector<bool>& mask, Rng& rng) {
  const auto p = gexp_probabilities(state, actor_scores, mask);
  std::discrete_distribution<int> dist(p.begin(), p.end());
  return dist(rng);
}

void update_bandit(GexpState& state, int chosen, double q_observed,
                   const std::vector<double>& probabilities) {
  const size_t k_total = state.weights.size();
  if (chosen < 0 || static_cast<size_t>(chosen) >= k_total)
    throw std::out_of_range("update_bandit: chosen arm out of range");
  const double p_k = probabilities[chosen];
  if (!(p_k > 0.0)) throw std::invalid_argument("update_bandit: chosen probability must be > 0");

  const double phi_hat = q_observed / (p_k * state.implicit_exploration);
  state.weights[chosen] *=
      std::exp(state.bandit_lr * phi_hat / static_cast<double>(k_total + 1));

  const double advantage = q_observed - state.mean_q;
  for (size_t k = 0; k < k_total; ++k) {
    if (static_cast<int>(k) == chosen)
      state.preferences[k] += state.pref_step * advantage * (1.0 - probabilities[k]);
    else
      state.preferences[k] -= state.pref_step * advantage * probabilities[k];
  }

  state.q_count += 1;
  state.mean_q += (q_observed - state.mean_q) / static_cast<double>(state.q_count);

  double max_w = 0.0;
  for (double w : state.weights) max_w = std::max(max_w, w);
  if (max_w > 1e6 || (max_w > 0.0 && max_w < 1e-6)) {
    for (double& w : state.weights) w /= max_w;
  }
}

}  // namespace urllc
