#pragma once

#include <span>

#include "binkg/belief.hpp"
#include "binkg/links.hpp"

namespace binkg {

/// One measured alternative and its outcome. Non-owning view of x.
struct ObservedOutcome {
  std::span<const double> x;
  Label y = Label::positive;
};

struct BisectionConfig {
  double tol = 1e-10;
  int max_iter = 200;

  void validate() const;
};

/// Root p* of  p = (sigma'/sigma)(p * sum_i x_i^2 / q_i + y m^T x).
///
/// The right-hand side is non-increasing in p (log-concave link), positive at
/// p = 0 and no larger than p at p = (sigma'/sigma)(y m^T x), so the root is
/// bracketed by [0, (sigma'/sigma)(y m^T x)] and bisection converges.
/// Throws ConvergenceError if the bracket is still wider than tol after max_iter.
double solve_p_star(const GaussianBelief& belief, const ObservedOutcome& obs, Link link,
                    const BisectionConfig& cfg = {});

/// Online Laplace update for a single observation.
///
/// The MAP of  -1/2 sum_i q_i (w_i - m_i)^2 + log sigma(y w^T x)  is
/// w_i = m_i + y p* x_i / q_i; precision picks up the curvature of the
/// log-likelihood at the MAP, q_i' = q_i + t x_i^2 with t = -d^2 log sigma(y f)/df^2.
GaussianBelief laplace_step(const GaussianBelief& belief, const ObservedOutcome& obs, Link link,
                            const BisectionConfig& cfg = {});

}  // namespace binkg
