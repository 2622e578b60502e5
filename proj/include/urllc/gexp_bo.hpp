#pragma once

#include <functional>

#include "urllc/gexp.hpp"
#include "urllc/gp.hpp"

namespace urllc {

struct GexpBoResult {
  int device = -1;
  double rate = 0.0;  // absolute rate in (0, r_max]
  double q_value = 0.0;
};

// One GEXP-BO iteration: GP posterior over (rate, state), device from the
// GEXP bandit, rate from EI, observation from the min of the twin target
// critics, then bandit and dataset updates.
class GexpBo {
 public:
  GexpBo(int devices, size_t dataset_capacity, double r_max);

  GexpState& bandit() { return bandit_; }
  GpModel& model() { return model_; }
  SurrogateDataset& dataset() { return dataset_; }
  double r_max() const { return r_max_; }

  // `min_twin_q(device, rate)` must evaluate min{Q1', Q2'} at the env state
  // this step optimizes for.
  GexpBoResult optimize_step(const vec& env_state, const std::vector<double>& actor_scores,
                             const std::vector<bool>& mask,
                             const std::function<double(int, double)>& min_twin_q, Rng& rng);

 private:
  GexpState bandit_;
  GpModel model_;
  SurrogateDataset dataset_;
  double r_max_;
};

}  // namespace urllc
