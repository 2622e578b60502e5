#pragma once

#include <iosfwd>
#include <vector>

#include "urllc/types.hpp"

namespace urllc {

enum class Activation { Identity, Tanh };

// Dense feed-forward network, ReLU on hidden layers, identity or tanh on the
// output. Columns are samples throughout.
struct Mlp {
  std::vector<int> layer_sizes;
  std::vector<mat> weights;  // weights[l] maps layer l -> l+1
  std::vector<vec> biases;
  Activation output_activation = Activation::Identity;

  static Mlp random(const std::vector<int>& sizes, Activation out_act, Rng& rng,
                    double final_layer_scale = 1.0);

  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  int num_layers() const { return static_cast<int>(weights.size()); }
  long num_params() const;

  mat forward(const mat& input) const;
  vec forward(const vec& input) const;
};

// Post-activation values per layer; activations[0] is the input batch.
struct MlpCache {
  std::vector<mat> activations;
};

mat forward_cached(const Mlp& net, const mat& input, MlpCache& cache);

// Parameter gradients shaped like the network.
struct MlpGrads {
  std::vector<mat> dw;
  std::vector<vec> db;

  static MlpGrads zeros_like(const Mlp& net);
  void scale(double s);
  void accumulate(const MlpGrads& other, double s = 1.0);
};

// Reverse-mode gradients of forward() for the batch held in `cache`.
// `output_grad` is dL/dY; optionally also produces dL/dX.
MlpGrads backward(const Mlp& net, const MlpCache& cache, const mat& output_grad,
                  mat* input_grad = nullptr);

struct AdamState {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  long t = 0;
  MlpGrads m;
  MlpGrads v;

  static AdamState for_net(const Mlp& net, double lr);
};

void adam_step(Mlp& net, const MlpGrads& grads, AdamState& state);

// theta' <- tau * theta + (1 - tau) * theta'.
void polyak_update(const Mlp& source, Mlp& target, double tau);

// Text serialization, full double precision.
void save_mlp(std::ostream& out, const Mlp& net);
Mlp load_mlp(std::istream& in);

}  // namespace urllc
