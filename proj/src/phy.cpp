#include "urllc/phy.hpp"

#include <algorithm>
#include <cmath>

namespace urllc {

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

// Acklam's rational approximation to the inverse normal CDF, ~1.15e-9
// relative accuracy before refinement.
double norminv_acklam(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - plow) {
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double qfunc_inv(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("qfunc_inv: p outside (0,1)");
  // Q^-1(p) = -norminv(p); refine with two Halley steps on Phi(x)-(1-p)=0.
  double x = -norminv_acklam(p);
  for (int it = 0; it < 2; ++it) {
    double e = qfunc(x) - p;
    double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    if (pdf <= 0.0) break;
    double u = e / pdf;  // Q'(x) = -pdf
    x += u / (1.0 - 0.5 * x * u);
  }
  return x;
}

double bler(double snr, double rate, int m) {
  if (!(snr > 0.0)) throw std::domain_error("bler: snr must be > 0");
  if (rate < 0.0) throw std::domain_error("bler: rate must be >= 0");
  if (m < 1) throw std::domain_error("bler: blocklength must be >= 1");
  const double w = 1.0 - std::pow(1.0 + snr, -2.0);
  const double z = (std::log2(1.0 + snr) - rate) / std::sqrt(w / m);
  return qfunc(z);
}

double ideal_rate(double snr, double eps, int m) {
  if (!(snr > 0.0)) throw std::domain_error("ideal_rate: snr must be > 0");
  if (!(eps > 0.0 && eps < 0.5)) throw std::domain_error("ideal_rate: eps outside (0,0.5)");
  const double w = 1.0 - std::pow(1.0 + snr, -2.0);
  const double r = std::log2(1.0 + snr) - qfunc_inv(eps) * std::sqrt(w / m);
  return std::max(0.0, r);
}

LinkOutcome transmit(double snr_true, double rate, const FblParams& fbl, long slot) {
  LinkOutcome out;
  out.rate = rate;
  out.slot = slot;
  out.bler = bler(snr_true, rate, fbl.blocklength);
  out.feedback = out.bler < fbl.bler_threshold ? Feedback::Ack : Feedback::Nack;
  return out;
}

}  // namespace urllc
