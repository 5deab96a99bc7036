#include "binkg/normal.hpp"

#include <cmath>
#include <limits>

namespace binkg::normal {
namespace {

constexpr double kTailSwitch = -8.0;
constexpr int kFractionDepth = 200;

// Laplace's continued fraction for the Mills ratio,
//   Phi(-t) / phi(t) = 1 / (t + F1),  F_k = k / (t + F_{k+1}),
// returns F1 for t >= 8, where 200 levels are far past convergence.
double mills_tail(double t) {
  double tail = 0.0;
  for (int k = kFractionDepth; k >= 1; --k) tail = k / (t + tail);
  return tail;
}

}  // namespace

double pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double cdf(double z) { return 0.5 * std::erfc(-z * kSqrt1_2); }

double log_cdf(double z) {
  if (z < kTailSwitch) {
    const double t = -z;
    return -0.5 * z * z + std::log(kInvSqrt2Pi) - std::log(t + mills_tail(t));
  }
  if (z > 0.0) return std::log1p(-0.5 * std::erfc(z * kSqrt1_2));
  return std::log(cdf(z));
}

double mills_v(double z) {
  if (z < kTailSwitch) {
    const double t = -z;
    return t + mills_tail(t);
  }
  return pdf(z) / cdf(z);
}

double mills_w(double z) {
  double w;
  if (z < kTailSwitch) {
    // v + z equals the fraction tail exactly, which avoids cancelling t against v.
    const double t = -z;
    const double f1 = mills_tail(t);
    w = (t + f1) * f1;
  } else {
    const double v = mills_v(z);
    w = v * (v + z);
  }
  constexpr double kBelowOne = 1.0 - std::numeric_limits<double>::epsilon() / 2;
  if (w >= 1.0) w = kBelowOne;
  if (w < 0.0) w = 0.0;
  return w;
}

}  // namespace binkg::normal
