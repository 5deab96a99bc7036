#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace binkg {

/// Gauss-Hermite rule rescaled for expectations under N(0, 1):
///   E[f(Z)] ~= sum_i weights[i] * f(nodes[i]).
/// Weights sum to one; exact for polynomials of degree < 2n.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussHermiteRule(std::size_t n);

  template <class F>
  double expect(double mean, double variance, F&& f) const {
    const double sd = variance > 0.0 ? std::sqrt(variance) : 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(mean + sd * nodes[i]);
    return acc;
  }
};

}  // namespace binkg
