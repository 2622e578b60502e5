#pragma once

#include <vector>

#include "urllc/types.hpp"

namespace urllc {

// A remote device in uniform circular motion around its center point, with a
// fixed pause after each full revolution.
struct Device {
  int id = 0;
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double orbit_radius = 1.0;  // m
  double speed = 0.0;         // m/s
  double phase = 0.0;         // rad
  double pause_timer = 0.0;   // s remaining of the post-revolution pause
  double phase_at_rev = 0.0;  // phase at the start of the current revolution

  Eigen::Vector2d position() const {
    return center + orbit_radius * Eigen::Vector2d(std::cos(phase), std::sin(phase));
  }
};

struct RicianParams {
  double rician_factor_db = 3.0;
  double pathloss_ref_db = -65.0;  // at d0
  double pathloss_exponent = 2.2;
  double d0 = 1.0;                 // m
  double rho = 0.98;               // Gauss-Markov correlation
  int antennas = 4;
};

// Per-slot snapshot of the true channel across devices.
struct ChannelState {
  std::vector<cvec> gains;   // one length-M vector per device
  vec true_snr;              // linear, per device
  long slot = 0;
};

// Advances circular motion by dt. A device that completes a revolution pauses
// for 0.1 s (position frozen, phase held) before resuming.
void step_mobility(std::vector<Device>& devices, double dt);

// Linear path loss rho0 * (d/d0)^-alpha.
double pathloss(double distance, const RicianParams& params);

// Steering vector [1, e^{j pi sin a}, ..., e^{j(M-1) pi sin a}] toward the
// device as seen from the BS.
cvec los_steering(const Eigen::Vector2d& bs, const Eigen::Vector2d& device, int antennas);

// Unit-variance NLoS scattering component, i.i.d. CN(0,1) entries.
cvec draw_nlos(int antennas, Rng& rng);

// Full Rician channel sqrt(k L/(k+1)) h_los + sqrt(L/(k+1)) h_nlos with a
// fresh NLoS draw. Rejects zero BS-device distance.
cvec draw_channel(const Device& device, const RicianParams& params,
                  const Eigen::Vector2d& bs_position, Rng& rng);

// First-order Gauss-Markov step h_t = rho h_{t-1} + sqrt(1-rho^2) e with
// e ~ CN(0, entry_var I); entry_var is the stationary per-entry variance of
// the process being evolved.
cvec evolve_channel(const cvec& prev, double rho, Rng& rng, double entry_var = 1.0);

// Composes the Rician channel from tracked geometry and an externally evolved
// unit-variance NLoS state.
cvec compose_channel(const Device& device, const RicianParams& params,
                     const Eigen::Vector2d& bs_position, const cvec& nlos);

// p * ||h||^2 / noise. Rejects a zero-norm channel.
double zf_snr(const cvec& h, double tx_power, double noise_power);

}  // namespace urllc
