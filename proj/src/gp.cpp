#include "urllc/gp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace urllc {

double SurrogateDataset::best_target() const {
  if (targets_.empty()) return 0.0;
  return *std::max_element(targets_.begin(), targets_.end());
}

double GpModel::kernel(const vec& a, const vec& b) const {
  const double d = (a - b).norm() / length_scale;
  const double s5d = std::sqrt(5.0) * d;
  return signal_variance * (1.0 + s5d + 5.0 * d * d / 3.0) * std::exp(-s5d);
}

vec GpModel::transform_input(const vec& x) const {
  if (!standardize_inputs || input_mean_.size() == 0) return x;
  return (x - input_mean_).cwiseQuotient(input_scale_);
}

void GpModel::fit(const SurrogateDataset& data) {
  n_ = data.size();
  fitted_ = true;
  train_inputs_.clear();
  if (n_ == 0) return;

  const Eigen::Index dim = data.input(0).size();
  if (standardize_inputs) {
    input_mean_ = vec::Zero(dim);
    for (size_t i = 0; i < n_; ++i) input_mean_ += data.input(i);
    input_mean_ /= static_cast<double>(n_);
    vec var = vec::Zero(dim);
    for (size_t i = 0; i < n_; ++i) var += (data.input(i) - input_mean_).array().square().matrix();
    var /= static_cast<double>(n_);
    input_scale_ = var.array().sqrt().max(1e-8).matrix();
  }

  vec targets(n_);
  for (size_t i = 0; i < n_; ++i) targets(static_cast<Eigen::Index>(i)) = data.target(i);
  if (standardize_targets) {
    target_mean_ = targets.mean();
    double var = (targets.array() - target_mean_).square().mean();
    target_scale_ = std::max(std::sqrt(var), 1e-8);
    targets = (targets.array() - target_mean_) / target_scale_;
  } else {
    target_mean_ = 0.0;
    target_scale_ = 1.0;
  }

  train_inputs_.reserve(n_);
  for (size_t i = 0; i < n_; ++i) train_inputs_.push_back(transform_input(data.input(i)));

  mat cov(n_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j <= i; ++j) {
      double k = kernel(train_inputs_[i], train_inputs_[j]);
      cov(i, j) = k;
      cov(j, i) = k;
    }
  cov.diagonal().array() += noise_variance;
  chol_.compute(cov);
  if (chol_.info() != Eigen::Success)
    throw std::runtime_error("GpModel::fit: covariance factorization failed");
  alpha_ = chol_.solve(targets);
}

std::pair<double, double> GpModel::posterior(const vec& query) const {
  if (!fitted_) throw std::logic_error("GpModel::posterior: fit() not called");
  const vec x = transform_input(query);
  const double prior_var = kernel(x, x);
  if (n_ == 0) return {0.0, prior_var};

  vec a(n_);
  for (size_t i = 0; i < n_; ++i)
    a(static_cast<Eigen::Index>(i)) = kernel(train_inputs_[i], x);
  const double mu = a.dot(alpha_);
  const double var = prior_var - a.dot(chol_.solve(a));
  return {mu, std::max(0.0, var)};
}

double GpModel::transformed_best(double raw_best) const {
  return (raw_best - target_mean_) / target_scale_;
}

std::pair<double, double> gp_posterior(GpModel& model, const SurrogateDataset& data,
                                       const vec& query) {
  if (!model.fitted() || model.fitted_size() != data.size()) model.fit(data);
  return model.posterior(query);
}

namespace {

double norm_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); }
double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

double expected_improvement(double mu, double sigma2, double best) {
  const double sigma = std::sqrt(std::max(0.0, sigma2));
  const double gain = mu - best;
  if (sigma <= 0.0) return std::max(gain, 0.0);
  const double z = gain / sigma;
  return std::max(0.0, gain * norm_cdf(z) + sigma * norm_pdf(z));
}

double select_rate_ei(GpModel& model, const SurrogateDataset& data, const vec& state,
                      double incumbent, double r_max) {
  if (!(r_max > 0.0)) throw std::invalid_argument("select_rate_ei: r_max must be > 0");
  if (!model.fitted() || model.fitted_size() != data.size()) model.fit(data);

  vec query(state.size() + 1);
  query.tail(state.size()) = state;
  auto ei_at = [&](double r) {
    query(0) = r;
    auto [mu, var] = model.posterior(query);
    return expected_improvement(mu, var, incumbent);
  };

  constexpr int kGridPoints = 64;
  constexpr int kStarts = 8;
  const double cell = r_max / kGridPoints;

  // Grid of cell midpoints; ties keep the lowest rate.
  double best_r = 0.5 * cell;
  double best_ei = ei_at(best_r);
  std::array<std::pair<double, double>, kGridPoints> scored;  // (ei, r)
  scored[0] = {best_ei, best_r};
  for (int i = 1; i < kGridPoints; ++i) {
    const double r = (i + 0.5) * cell;
    const double ei = ei_at(r);
    scored[i] = {ei, r};
    if (ei > best_ei) {
      best_ei = ei;
      best_r = r;
    }
  }

  // Gradient ascent from the top starts, numeric derivative, backtracking step.
  std::partial_sort(scored.begin(), scored.begin() + kStarts, scored.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
  const double lo = 1e-9 * r_max;
  for (int s = 0; s < kStarts; ++s) {
    double r = scored[s].second;
    double ei = scored[s].first;
    double step_size = 0.5 * cell;
    const double h = 1e-6 * r_max;
    for (int it = 0; it < 12 && step_size > 1e-10 * r_max; ++it) {
      const double grad = (ei_at(std::min(r + h, r_max)) - ei_at(std::max(r - h, lo))) / (2.0 * h);
      if (grad == 0.0) break;
      double cand = std::clamp(r + step_size * (grad > 0.0 ? 1.0 : -1.0), lo, r_max);
      double cand_ei = ei_at(cand);
      if (cand_ei > ei) {
        r = cand;
        ei = cand_ei;
      } else {
        step_size *= 0.5;
      }
    }
    if (ei > best_ei + 1e-15 * std::max(1.0, std::abs(best_ei))) {
      best_ei = ei;
      best_r = r;
    }
  }
  return best_r;
}

}  // namespace urllc
