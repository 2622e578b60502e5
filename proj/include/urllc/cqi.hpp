#pragma once

#include <stdexcept>

#include "urllc/types.hpp"

namespace urllc {

// SNR -> CQI quantizer. Operates on dB-scale SNR with hard clipping at the
// configured bounds. `error_radius` records the bounded CSI mismatch; it is
// carried for reporting but not enforced anywhere.
struct CqiCodec {
  int bits = 4;
  double snr_min_db = -10.0;
  double snr_max_db = 30.0;
  int delay_slots = 1;
  double error_radius = 0.0;

  int levels() const { return 1 << bits; }
};

inline int quantize_cqi(double snr_db, const CqiCodec& codec) {
  const int n = codec.levels();
  if (snr_db <= codec.snr_min_db) return 0;
  if (snr_db >= codec.snr_max_db) return n - 1;
  const double span = codec.snr_max_db - codec.snr_min_db;
  int cqi = static_cast<int>(std::floor((snr_db - codec.snr_min_db) * (n - 1) / span));
  return std::min(cqi, n - 1);
}

// Midpoint (in dB) of the CQI's SNR bin.
inline double dequantize_cqi(int cqi, const CqiCodec& codec) {
  const int n = codec.levels();
  if (cqi < 0 || cqi > n - 1) throw std::out_of_range("dequantize_cqi: cqi out of range");
  const double bin = (codec.snr_max_db - codec.snr_min_db) / (n - 1);
  return codec.snr_min_db + (cqi + 0.5) * bin;
}

}  // namespace urllc
