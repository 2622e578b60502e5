#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace urllc {

using vec = Eigen::VectorXd;
using mat = Eigen::MatrixXd;
using cvec = Eigen::VectorXcd;
using ivec = Eigen::VectorXi;
using cplx = std::complex<double>;

using Rng = std::mt19937_64;

// Derives an independent RNG stream from a base seed and a stream tag, so the
// channel trace never depends on how many draws a policy consumed.
inline Rng make_stream(std::uint64_t seed, std::uint64_t tag) {
  // splitmix64 scramble of (seed, tag)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return Rng(z);
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace urllc
