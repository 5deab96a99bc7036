#include <cmath>
#include <random>

#include "doctest.h"

#include "binkg/errors.hpp"
#include "binkg/laplace.hpp"
#include "binkg/oracles.hpp"

using namespace binkg;

namespace {

// Dense grid then golden-section refinement of a 1-D concave objective.
template <class F>
double grid_argmax(F&& f, double lo, double hi) {
  const int n = 20000;
  double best = lo, best_v = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double w = lo + (hi - lo) * i / n;
    const double v = f(w);
    if (v > best_v) best_v = v, best = w;
  }
  double a = best - (hi - lo) / n, b = best + (hi - lo) / n;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double c = b - g * (b - a), d = a + g * (b - a);
    if (f(c) > f(d))
      b = d;
    else
      a = c;
  }
  return 0.5 * (a + b);
}

const GaussianBelief kUnit{{0.0}, {1.0}};
const Vector kOne{1.0};

}  // namespace

TEST_CASE("p* for logistic from the MAP oracle") {
  const double w_hat = grid_argmax(
      [](double w) { return -0.5 * w * w - std::log1p(std::exp(-w)); }, -5.0, 5.0);
  // p* = sigma'/sigma at the MAP = 1 - sigma(w_hat); for x = q = 1 it also equals w_hat.
  const double p_ref = 1.0 / (1.0 + std::exp(w_hat));
  CHECK(p_ref == doctest::Approx(0.40106).epsilon(1e-5));
  CHECK(std::abs(solve_p_star(kUnit, {kOne, Label::positive}, Link::logistic) - p_ref) < 1e-7);
}

TEST_CASE("p* for probit from the MAP oracle") {
  const double w_hat = grid_argmax(
      [](double w) { return -0.5 * w * w + oracle::log_link(Link::probit, w); }, -5.0, 5.0);
  CHECK(std::abs(w_hat - 0.5060545) < 1e-6);
  CHECK(std::abs(solve_p_star(kUnit, {kOne, Label::positive}, Link::probit) - w_hat) < 1e-7);
}

TEST_CASE("p* stays inside the bracket for a confident prior") {
  const GaussianBelief b{{5.0}, {1.0}};
  const ObservedOutcome obs{kOne, Label::positive};
  const double upper = 1.0 - 1.0 / (1.0 + std::exp(-5.0));
  CHECK(upper == doctest::Approx(0.00669).epsilon(1e-3));
  const double p = solve_p_star(b, obs, Link::logistic);
  CHECK(p >= 0.0);
  CHECK(p <= upper);
  // Residual sign change across the bracket.
  CHECK(deriv_ratio(Link::logistic, 0.0 * 1.0 + 5.0) - 0.0 > 0.0);
  CHECK(deriv_ratio(Link::logistic, upper * 1.0 + 5.0) - upper < 0.0);
}

TEST_CASE("laplace_step reference updates") {
  const GaussianBelief logit = laplace_step(kUnit, {kOne, Label::positive}, Link::logistic);
  CHECK(logit.mean[0] == doctest::Approx(0.40106).epsilon(2e-5));
  const double s = 1.0 / (1.0 + std::exp(-logit.mean[0]));
  CHECK(logit.precision[0] == doctest::Approx(1.0 + s * (1.0 - s)).epsilon(1e-12));
  CHECK(logit.precision[0] == doctest::Approx(1.24021).epsilon(2e-5));

  const GaussianBelief prob = laplace_step(kUnit, {kOne, Label::positive}, Link::probit);
  CHECK(std::abs(prob.mean[0] - 0.5060545) < 1e-6);
  // At the root v(w) = w, so the curvature is w (w + w).
  const double w = prob.mean[0];
  CHECK(prob.precision[0] == doctest::Approx(1.0 + 2.0 * w * w).epsilon(1e-8));
  CHECK(std::abs(prob.precision[0] - 1.5121823) < 1e-6);
}

TEST_CASE("zero feature leaves the belief unchanged") {
  for (Link link : {Link::logistic, Link::probit, Link::cloglog, Link::loglog})
    for (Label y : {Label::positive, Label::negative}) {
      const GaussianBelief b{{0.3, -0.2}, {1.5, 2.0}};
      CHECK(laplace_step(b, {Vector{0.0, 0.0}, y}, link) == b);
    }
}

TEST_CASE("random instances: MAP stationarity, precision growth, bracketing") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0), uq(0.25, 4.0);
  for (Link link : {Link::logistic, Link::probit, Link::cloglog, Link::loglog}) {
    CAPTURE(to_string(link));
    for (int k = 0; k < 100; ++k) {
      const std::size_t d = 1 + k % 3;
      GaussianBelief b{Vector(d), Vector(d)};
      Vector x(d);
      for (std::size_t j = 0; j < d; ++j) {
        b.mean[j] = u(rng);
        b.precision[j] = uq(rng);
        x[j] = u(rng);
      }
      const Label y = k % 2 ? Label::positive : Label::negative;

      // Bracket endpoints have opposite residual signs.
      const LatentMoments mom = marginal_moments(b, x);
      const double c = sign(y) * mom.mu;
      const double upper = deriv_ratio(link, c);
      CHECK(deriv_ratio(link, c) >= 0.0);
      CHECK(deriv_ratio(link, upper * mom.var + c) - upper <= 0.0);

      const GaussianBelief post = laplace_step(b, {x, y}, link);
      const Vector grad =
          oracle::map_gradient(post.mean, b.mean, b.precision, x, static_cast<int>(y), link);
      for (double g : grad) CHECK(std::abs(g) < 1e-6);
      for (std::size_t j = 0; j < d; ++j) CHECK(post.precision[j] >= b.precision[j]);

      if (d <= 2) {
        const Vector ref =
            oracle::map_maximizer(b.mean, b.precision, x, static_cast<int>(y), link);
        for (std::size_t j = 0; j < d; ++j) CHECK(std::abs(post.mean[j] - ref[j]) < 1e-5);
      }
    }
  }
}

TEST_CASE("label symmetry from a zero-mean prior") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0), uq(0.25, 4.0);
  for (Link link : {Link::logistic, Link::probit}) {
    for (int k = 0; k < 50; ++k) {
      GaussianBelief b{Vector(2, 0.0), {uq(rng), uq(rng)}};
      const Vector x{u(rng), u(rng)};
      const GaussianBelief up = laplace_step(b, {x, Label::positive}, link);
      const GaussianBelief down = laplace_step(b, {x, Label::negative}, link);
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(std::abs(up.mean[j] + down.mean[j]) < 1e-10);
        CHECK(std::abs(up.precision[j] - down.precision[j]) < 1e-10);
      }
    }
  }
}

TEST_CASE("bisection configuration and convergence errors") {
  CHECK_THROWS_AS(solve_p_star(kUnit, {kOne, Label::positive}, Link::logistic, {0.0, 10}),
                  ConfigError);
  CHECK_THROWS_AS(solve_p_star(kUnit, {kOne, Label::positive}, Link::logistic, {1e-10, 0}),
                  ConfigError);
  CHECK_THROWS_AS(solve_p_star(kUnit, {kOne, Label::positive}, Link::logistic, {1e-12, 3}),
                  ConvergenceError);
  CHECK_THROWS_AS(laplace_step(kUnit, {Vector{1.0, 2.0}, Label::positive}, Link::logistic),
                  DimensionError);
}

TEST_CASE("the update consults only the current state") {
  // Two observations applied one by one equal the composition of single steps,
  // and the result depends on nothing else.
  const Vector x1{1.0, -0.5}, x2{0.3, 2.0};
  const GaussianBelief prior = GaussianBelief::prior(2, 1.0);
  const GaussianBelief mid = laplace_step(prior, {x1, Label::positive}, Link::logistic);
  const GaussianBelief a = laplace_step(mid, {x2, Label::negative}, Link::logistic);
  const GaussianBelief b = laplace_step(GaussianBelief{mid.mean, mid.precision},
                                        {x2, Label::negative}, Link::logistic);
  CHECK(a == b);
}
