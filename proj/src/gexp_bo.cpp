#include "urllc/gexp_bo.hpp"

namespace urllc {

GexpBo::GexpBo(int devices, size_t dataset_capacity, double r_max)
    : bandit_(devices), dataset_(dataset_capacity), r_max_(r_max) {
  // Q magnitudes drift over training; standardizing keeps the unit-scale
  // Matern kernel meaningful. EI's argmax is invariant to the affine target
  // transform.
  model_.standardize_inputs = true;
  model_.standardize_targets = true;
}

GexpBoResult GexpBo::optimize_step(const vec& env_state,
                                   const std::vector<double>& actor_scores,
                                   const std::vector<bool>& mask,
                                   const std::function<double(int, double)>& min_twin_q,
                                   Rng& rng) {
  model_.fit(dataset_);

  const auto probs = gexp_probabilities(bandit_, actor_scores, mask);
  std::discrete_distribution<int> dist(probs.begin(), probs.end());
  const int device = dist(rng);

  const double incumbent = model_.transformed_best(dataset_.best_target());
  const double rate = select_rate_ei(model_, dataset_, env_state, incumbent, r_max_);

  const double q = min_twin_q(device, rate);
  update_bandit(bandit_, device, q, probs);

  vec x(env_state.size() + 1);
  x(0) = rate;
  x.tail(env_state.size()) = env_state;
  dataset_.add(x, q);

  return {device, rate, q};
}

}  // namespace urllc
