#pragma once

#include <deque>
#include <utility>

#include "urllc/types.hpp"

namespace urllc {

// FIFO-bounded dataset of (input, observed Q) pairs feeding the surrogate.
class SurrogateDataset {
 public:
  explicit SurrogateDataset(size_t capacity = 256) : capacity_(capacity) {}

  void add(const vec& input, double target) {
    inputs_.push_back(input);
    targets_.push_back(target);
    if (inputs_.size() > capacity_) {
      inputs_.pop_front();
      targets_.pop_front();
    }
  }

  size_t size() const { return inputs_.size(); }
  bool empty() const { return inputs_.empty(); }
  size_t capacity() const { return capacity_; }
  const vec& input(size_t i) const { return inputs_[i]; }
  double target(size_t i) const { return targets_[i]; }

  // Incumbent best observation; 0 for an empty dataset (matches the zero-mean
  // prior).
  double best_target() const;

 private:
  size_t capacity_;
  std::deque<vec> inputs_;
  std::deque<double> targets_;
};

// Matern-5/2 GP with observation noise. fit() rebuilds the Cholesky factor of
// (A + sigma_o^2 I); posterior queries reuse it. Optional per-dimension input
// standardization and target z-scoring are fitted from the dataset (both off
// by default so the posterior matches the textbook equations verbatim).
class GpModel {
 public:
  double length_scale = 1.0;
  double signal_variance = 1.0;
  double noise_variance = 1e-2;
  bool standardize_inputs = false;
  bool standardize_targets = false;

  double kernel(const vec& a, const vec& b) const;

  void fit(const SurrogateDataset& data);
  bool fitted() const { return fitted_; }
  size_t fitted_size() const { return n_; }

  // Posterior mean/variance at `query`; tiny negative variances from round-off
  // are clamped to 0. Valid only after fit().
  std::pair<double, double> posterior(const vec& query) const;

  // Incumbent in the (possibly target-standardized) space posterior() reports.
  double transformed_best(double raw_best) const;

 private:
  vec transform_input(const vec& x) const;

  bool fitted_ = false;
  size_t n_ = 0;
  std::vector<vec> train_inputs_;   // already transformed
  Eigen::LLT<mat> chol_;            // of A + sigma_o^2 I
  vec alpha_;                       // (A + sigma_o^2 I)^-1 Q
  vec input_mean_, input_scale_;
  double target_mean_ = 0.0, target_scale_ = 1.0;
};

// Convenience wrapper implementing the posterior equations in one call:
//   mu       = a(x)^T (A + s^2 I)^-1 Q
//   sigma^2  = k(x,x) - a(x)^T (A + s^2 I)^-1 a(x)
std::pair<double, double> gp_posterior(GpModel& model, const SurrogateDataset& data,
                                       const vec& query);

// Expected improvement of posterior (mu, sigma2) over incumbent `best`:
//   (mu - best) Phi(Z) + sigma phi(Z), Z = (mu - best)/sigma,
// degenerating to max(mu - best, 0) when sigma = 0.
double expected_improvement(double mu, double sigma2, double best);

// Maximizes EI over the rate r in (0, r_max], with the remaining input
// dimensions pinned to `state` (query = [r; state]). 64-point grid of cell
// midpoints refined by 8 gradient-ascent starts; model must be fitted (or the
// dataset empty, in which case the prior is used).
double select_rate_ei(GpModel& model, const SurrogateDataset& data, const vec& state,
                      double incumbent, double r_max);

}  // namespace urllc
