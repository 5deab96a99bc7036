#include "binkg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "binkg/errors.hpp"

namespace binkg {

// Newton iteration on the orthonormal Hermite recurrence, with the classic
// asymptotic starting guesses for the largest roots.
GaussHermiteRule::GaussHermiteRule(std::size_t n) : nodes(n), weights(n) {
  if (n < 2) throw ConfigError("Gauss-Hermite rule needs at least 2 nodes");
  constexpr double kPiM4 = 0.7511255444649425;  // pi^{-1/4}
  const double dn = static_cast<double>(n);
  std::vector<double> x(n), w(n);
  double z = 0.0;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * dn + 1.0) - 1.85575 * std::pow(2.0 * dn + 1.0, -1.0 / 6.0);
    else if (i == 1)
      z -= 1.14 * std::pow(dn, 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[i - 2];

    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = kPiM4, p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double dj = static_cast<double>(j);
        p1 = z * std::sqrt(2.0 / (dj + 1.0)) * p2 - std::sqrt(dj / (dj + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * dn) * p2;
      const double prev = z;
      z = prev - p1 / pp;
      if (std::abs(z - prev) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = w[n - 1 - i] = 2.0 / (pp * pp);
  }
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = std::numbers::sqrt2 * x[i];
    weights[i] = w[i] / std::sqrt(std::numbers::pi);
  }
}

}  // namespace binkg
