#pragma once

#include <vector>

#include "urllc/types.hpp"

namespace urllc {

// Gradient-EXP3 device-selection bandit: exponential expert weights mixed
// with uniform exploration, sharpened by a preference-assisted softmax over
// actor scores.
struct GexpState {
  std::vector<double> weights;      // w_k > 0
  std::vector<double> preferences;  // d_hat_k
  double mean_q = 0.0;              // running average of observed Q
  long q_count = 0;
  double exploration = 0.3;         // zeta in (0,1]
  double implicit_exploration = 1.0;  // beta_ix
  double bandit_lr = 0.1;           // gamma_bd
  double pref_step = 0.05;          // alpha

  explicit GexpState(int devices = 0)
      : weights(devices, 1.0), preferences(devices, 0.0) {}

  void reset_round() {}  // weights persist across frames by design
};

// Selection distribution over unserved devices:
//   p_hat_k = (1-zeta) w_k / sum_unserved(w) + zeta/(K+1), zeroed for served,
//   p_k ∝ exp(d_hat_k * v_k) * p_hat_k, renormalized to sum 1.
// `mask[k]` true means device k is still unserved this frame.
std::vector<double> gexp_probabilities(const GexpState& state,
                                       const std::vector<double>& actor_scores,
                                       const std::vector<bool>& mask);

// Samples a device from gexp_probabilities. Throws when every device is
// served.
int select_device(const GexpState& state, const std::vector<double>& actor_scores,
                  const std::vector<bool>& mask, Rng& rng);

// Importance-weighted exponential update of the chosen arm plus the
// gradient-bandit preference step:
//   phi_hat = Q / (p_k * beta_ix);  w_k *= exp(gamma_bd * phi_hat / (K+1))
//   d_k += alpha (Q - Qbar)(1 - p_k);  d_j -= alpha (Q - Qbar) p_j, j != k.
// Weights renormalize when the largest exceeds 1e6 (the distribution is
// invariant under common scaling).
void update_bandit(GexpState& state, int chosen, double q_observed,
                   const std::vector<double>& probabilities);

}  // namespace urllc
