#pragma once

#include <stdexcept>

#include "urllc/types.hpp"

namespace urllc {

// Finite-blocklength link parameters: blocklength in symbols and the BLER
// target the scheduler must respect.
struct FblParams {
  int blocklength = 192;
  double bler_threshold = 1e-3;
};

enum class Feedback : int { Nack = 0, Ack = 1 };

struct LinkOutcome {
  int device = -1;
  double rate = 0.0;       // coding rate actually transmitted, bits/symbol
  int mcs_index = -1;      // discrete mode only, -1 otherwise
  double bler = 0.0;
  Feedback feedback = Feedback::Ack;
  double reward = 0.0;
  long slot = -1;
};

// Gaussian Q-function and its inverse. Q(x) = 0.5*erfc(x/sqrt(2)).
double qfunc(double x);
double qfunc_inv(double p);

// Block error probability of a finite-blocklength transmission at linear SNR
// `snr`, coding rate `rate` (bits/symbol) and blocklength `m` symbols:
//   Q( (log2(1+snr) - rate) / sqrt(W/m) ),  W = 1 - (1+snr)^-2.
// Throws std::domain_error for snr <= 0 (dispersion undefined).
double bler(double snr, double rate, int m);

// Largest coding rate whose BLER does not exceed `eps`:
//   r* = log2(1+snr) - Qinv(eps) * sqrt(W/m), clamped at 0.
double ideal_rate(double snr, double eps, int m);

// Evaluates one transmission: BLER at the true SNR, deterministic ACK/NACK
// against the threshold (ACK iff bler < threshold). Reward is filled in by
// the caller.
LinkOutcome transmit(double snr_true, double rate, const FblParams& fbl, long slot);

}  // namespace urllc
