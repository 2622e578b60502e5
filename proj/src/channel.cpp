#include "urllc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace urllc {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kRevolutionPause = 0.1;  // s
}  // namespace

void step_mobility(std::vector<Device>& devices, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_mobility: dt must be > 0");
  for (Device& dev : devices) {
    if (dev.pause_timer > 0.0) {
      dev.pause_timer = std::max(0.0, dev.pause_timer - dt);
      continue;
    }
    if (dev.speed <= 0.0) continue;
    dev.phase += dev.speed * dt / dev.orbit_radius;
    if (dev.phase - dev.phase_at_rev >= kTwoPi) {
      dev.phase_at_rev += kTwoPi;
      dev.pause_timer = kRevolutionPause;
    }
  }
}

double pathloss(double distance, const RicianParams& params) {
  if (!(distance > 0.0)) throw std::domain_error("pathloss: distance must be > 0");
  return db_to_linear(params.pathloss_ref_db) *
         std::pow(distance / params.d0, -params.pathloss_exponent);
}

cvec los_steering(const Eigen::Vector2d& bs, const Eigen::Vector2d& device, int antennas) {
  const double dist = (bs - device).norm();
  if (!(dist > 0.0)) throw std::domain_error("los_steering: zero BS-device distance");
  const double sin_a = (bs.y() - device.y()) / dist;
  cvec h(antennas);
  for (int m = 0; m < antennas; ++m) h(m) = std::polar(1.0, m * M_PI * sin_a);
  return h;
}

cvec draw_nlos(int antennas, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  cvec h(antennas);
  for (int m = 0; m < antennas; ++m) h(m) = cplx(gauss(rng), gauss(rng));
  return h;
}

cvec compose_channel(const Device& device, const RicianParams& params,
                     const Eigen::Vector2d& bs_position, const cvec& nlos) {
  const double dist = (bs_position - device.position()).norm();
  const double loss = pathloss(dist, params);
  const double kappa = db_to_linear(params.rician_factor_db);
  const cvec los = los_steering(bs_position, device.position(), params.antennas);
  return std::sqrt(kappa * loss / (kappa + 1.0)) * los + std::sqrt(loss / (kappa + 1.0)) * nlos;
}

cvec draw_channel(const Device& device, const RicianParams& params,
                  const Eigen::Vector2d& bs_position, Rng& rng) {
  return compose_channel(device, params, bs_position, draw_nlos(params.antennas, rng));
}

cvec evolve_channel(const cvec& prev, double rho, Rng& rng, double entry_var) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("evolve_channel: rho outside [0,1]");
  if (rho == 1.0) return prev;
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5 * entry_var));
  cvec e(prev.size());
  for (Eigen::Index m = 0; m < prev.size(); ++m) e(m) = cplx(gauss(rng), gauss(rng));
  return rho * prev + std::sqrt(1.0 - rho * rho) * e;
}

double zf_snr(const cvec& h, double tx_power, double noise_power) {
  const double norm2 = h.squaredNorm();
  if (!(norm2 > 0.0)) throw std::domain_error("zf_snr: zero-norm channel");
  return tx_power * norm2 / noise_power;
}

}  // namespace urllc
