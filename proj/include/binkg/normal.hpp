#pragma once

// Standard normal density, distribution and the inverse Mills ratio pair
// v(z) = phi(z) / Phi(z),  w(z) = v(z) (v(z) + z),
// evaluated so that the left tail never produces 0/0.

namespace binkg::normal {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kSqrt1_2 = 0.707106781186547524400844362105;

double pdf(double z);
double cdf(double z);
double log_cdf(double z);

/// phi(z) / Phi(z). Continued fraction for z < -8.
double mills_v(double z);

/// v(z) (v(z) + z), in [0, 1).
double mills_w(double z);

}  // namespace binkg::normal
