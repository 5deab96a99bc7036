#include "binkg/laplace.hpp"

#include <cmath>

#include "binkg/errors.hpp"

namespace binkg {
namespace {

bool is_zero(std::span<const double> x) {
  for (double v : x)
    if (v != 0.0) return false;
  return true;
}

void check_shapes(const GaussianBelief& belief, std::span<const double> x) {
  if (x.size() != belief.dim())
    throw DimensionError("observation dimension does not match the belief");
}

}  // namespace

void BisectionConfig::validate() const {
  if (!(tol > 0.0)) throw ConfigError("bisection tolerance must be positive");
  if (max_iter < 1) throw ConfigError("bisection max_iter must be at least 1");
}

double solve_p_star(const GaussianBelief& belief, const ObservedOutcome& obs, Link link,
                    const BisectionConfig& cfg) {
  cfg.validate();
  check_shapes(belief, obs.x);
  const LatentMoments mom = marginal_moments(belief, obs.x);
  const double offset = sign(obs.y) * mom.mu;
  const double spread = mom.var;  // sum_i x_i^2 / q_i
  const double upper = deriv_ratio(link, offset);
  if (spread == 0.0) return upper;

  auto residual = [&](double p) { return deriv_ratio(link, p * spread + offset) - p; };

  double lo = 0.0;
  double hi = upper;
  // Stop once both the bracket and the fixed-point residual are within tol,
  // or the bracket can no longer be split in double precision.
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double r = residual(mid);
    if (r == 0.0 || (hi - lo <= cfg.tol && std::abs(r) <= cfg.tol)) return mid;
    if (r > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  throw ConvergenceError("bisection for p* did not reach tolerance within max_iter");
}

GaussianBelief laplace_step(const GaussianBelief& belief, const ObservedOutcome& obs, Link link,
                            const BisectionConfig& cfg) {
  check_shapes(belief, obs.x);
  if (is_zero(obs.x)) return belief;

  const double p = solve_p_star(belief, obs, link, cfg);
  const double y = sign(obs.y);
  GaussianBelief next = belief;
  for (std::size_t i = 0; i < next.dim(); ++i)
    next.mean[i] += y * p * obs.x[i] / belief.precision[i];

  const double t = neg_curvature(link, dot(next.mean, obs.x), obs.y);
  for (std::size_t i = 0; i < next.dim(); ++i) next.precision[i] += t * obs.x[i] * obs.x[i];
  return next;
}

}  // namespace binkg
