#include "urllc/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace urllc {

Mlp Mlp::random(const std::vector<int>& sizes, Activation out_act, Rng& rng,
                double final_layer_scale) {
  if (sizes.size() < 2) throw std::invalid_argument("Mlp: need at least two layer sizes");
  Mlp net;
  net.layer_sizes = sizes;
  net.output_activation = out_act;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (size_t l = 0; l + 1 < sizes.size(); ++l) {
    double std_dev = std::sqrt(2.0 / sizes[l]);  // He init for ReLU stacks
    if (l + 2 == sizes.size()) std_dev *= final_layer_scale;
    mat w(sizes[l + 1], sizes[l]);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = std_dev * gauss(rng);
    net.weights.push_back(std::move(w));
    net.biases.push_back(vec::Zero(sizes[l + 1]));
  }
  return net;
}

long Mlp::num_params() const {
  long n = 0;
  for (int l = 0; l < num_layers(); ++l) n += weights[l].size() + biases[l].size();
  return n;
}

namespace {

inline void apply_output_activation(Activation act, mat& z) {
  if (act == Activation::Tanh) z = z.array().tanh();
}

}  // namespace

mat Mlp::forward(const mat& input) const {
  if (input.rows() != input_size()) throw std::invalid_argument("Mlp::forward: input size mismatch");
  mat a = input;
  for (int l = 0; l < num_layers(); ++l) {
    mat z = (weights[l] * a).colwise() + biases[l];
    if (l + 1 < num_layers())
      a = z.cwiseMax(0.0);
    else {
      apply_output_activation(output_activation, z);
      a = std::move(z);
    }
  }
  return a;
}

vec Mlp::forward(const vec& input) const { return forward(mat(input)).col(0); }

mat forward_cached(const Mlp& net, const mat& input, MlpCache& cache) {
  if (input.rows() != net.input_size())
    throw std::invalid_argument("forward_cached: input size mismatch");
  cache.activations.assign(1, input);
  for (int l = 0; l < net.num_layers(); ++l) {
    mat z = (net.weights[l] * cache.activations.back()).colwise() + net.biases[l];
    if (l + 1 < net.num_layers())
      cache.activations.push_back(z.cwiseMax(0.0));
    else {
      apply_output_activation(net.output_activation, z);
      cache.activations.push_back(std::move(z));
    }
  }
  return cache.activations.back();
}

MlpGrads MlpGrads::zeros_like(const Mlp& net) {
  MlpGrads g;
  for (int l = 0; l < net.num_layers(); ++l) {
    g.dw.push_back(mat::Zero(net.weights[l].rows(), net.weights[l].cols()));
    g.db.push_back(vec::Zero(net.biases[l].size()));
  }
  return g;
}

void MlpGrads::scale(double s) {
  for (auto& w : dw) w *= s;
  for (auto& b : db) b *= s;
}

void MlpGrads::accumulate(const MlpGrads& other, double s) {
  for (size_t l = 0; l < dw.size(); ++l) {
    dw[l] += s * other.dw[l];
    db[l] += s * other.db[l];
  }
}

MlpGrads backward(const Mlp& net, const MlpCache& cache, const mat& output_grad,
                  mat* input_grad) {
  const int layers = net.num_layers();
  if (static_cast<int>(cache.activations.size()) != layers + 1)
    throw std::invalid_argument("backward: cache does not match network");
  if (output_grad.rows() != net.output_size() ||
      output_grad.cols() != cache.activations.back().cols())
    throw std::invalid_argument("backward: output gradient shape mismatch");

  MlpGrads grads = MlpGrads::zeros_like(net);
  mat delta = output_grad;
  if (net.output_activation == Activation::Tanh) {
    const mat& y = cache.activations.back();
    delta = delta.cwiseProduct((1.0 - y.array().square()).matrix());
  }
  for (int l = layers - 1; l >= 0; --l) {
    grads.dw[l] = delta * cache.activations[l].transpose();
    grads.db[l] = delta.rowwise().sum();
    if (l > 0) {
      delta = net.weights[l].transpose() * delta;
      // ReLU mask: gradient flows only where the forward output was positive
      delta = delta.cwiseProduct((cache.activations[l].array() > 0.0).cast<double>().matrix());
    } else if (input_grad) {
      *input_grad = net.weights[0].transpose() * delta;
    }
  }
  return grads;
}

AdamState AdamState::for_net(const Mlp& net, double lr) {
  AdamState s;
  s.lr = lr;
  s.m = MlpGrads::zeros_like(net);
  s.v = MlpGrads::zeros_like(net);
  return s;
}

void adam_step(Mlp& net, const MlpGrads& grads, AdamState& state) {
  state.t += 1;
  const double bc1 = 1.0 - std::pow(state.beta1, state.t);
  const double bc2 = 1.0 - std::pow(state.beta2, state.t);
  for (int l = 0; l < net.num_layers(); ++l) {
    state.m.dw[l] = state.beta1 * state.m.dw[l] + (1.0 - state.beta1) * grads.dw[l];
    state.v.dw[l] =
        state.beta2 * state.v.dw[l] + (1.0 - state.beta2) * grads.dw[l].array().square().matrix();
    net.weights[l].array() -= state.lr * (state.m.dw[l].array() / bc1) /
                              ((state.v.dw[l].array() / bc2).sqrt() + state.eps);

    state.m.db[l] = state.beta1 * state.m.db[l] + (1.0 - state.beta1) * grads.db[l];
    state.v.db[l] =
        state.beta2 * state.v.db[l] + (1.0 - state.beta2) * grads.db[l].array().square().matrix();
    net.biases[l].array() -= state.lr * (state.m.db[l].array() / bc1) /
                             ((state.v.db[l].array() / bc2).sqrt() + state.eps);
  }
}

void polyak_update(const Mlp& source, Mlp& target, double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("polyak_update: tau outside (0,1]");
  for (int l = 0; l < source.num_layers(); ++l) {
    target.weights[l] = tau * source.weights[l] + (1.0 - tau) * target.weights[l];
    target.biases[l] = tau * source.biases[l] + (1.0 - tau) * target.biases[l];
  }
}

}  // namespace urllc
