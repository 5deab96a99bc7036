#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "binkg/belief.hpp"
#include "binkg/laplace.hpp"

namespace binkg::validation {

/// Outcome of one oracle comparison: worst deviation seen against its bound.
struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

using StepFn = std::function<GaussianBelief(const GaussianBelief&, const ObservedOutcome&)>;

/// adf_step against quadrature of the tilted posterior on random d = 1 states.
CheckResult adf_moments(int cases, std::uint64_t seed, const StepFn& step = {});

/// laplace_step mean against a Newton oracle on the MAP objective (d <= 2,
/// logistic and probit), plus the fixed-point residual of the bisection root.
std::vector<CheckResult> laplace_map(int cases, std::uint64_t seed);

/// Closed-form predictive against quadrature on a grid x grid of
/// (mu, var) in [-3, 3] x [0, 4]: exact for probit, approximate for logistic.
std::vector<CheckResult> predictive_grid(int grid);

/// p+ p(+1|x', s+) + p- p(+1|x', s-) - p(+1|x', s) under probit + ADF, d <= 2.
CheckResult adf_martingale(int cases, std::uint64_t seed);

/// The same identity for the exact Bayesian update (d = 1, quadrature).
CheckResult exact_bayes_martingale(int cases, std::uint64_t seed);

/// min kg over random states: probit + adf, then logistic + laplace.
std::vector<CheckResult> kg_nonnegative(int states, std::uint64_t seed);

/// kg of the zero alternative is exactly 0 for every updater/link pairing.
CheckResult zero_information(int states, std::uint64_t seed);

/// Every suite above at its default size.
std::vector<CheckResult> run_all(std::uint64_t seed);

void print(std::ostream& out, const CheckResult& r);

}  // namespace binkg::validation
