#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"

#include "binkg/baselines.hpp"
#include "binkg/errors.hpp"
#include "binkg/oracles.hpp"
#include "binkg/quadrature.hpp"

using namespace binkg;

namespace {

BaselinePolicy make(BaselineKind kind) {
  BaselinePolicy p;
  p.kind = kind;
  return p;
}

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// P(w^T x_i > w^T x_j for all j != i) for w ~ N(m, diag(s2)) in two dimensions:
// condition on w_0, the remaining constraints bound w_1 to an interval.
double thompson_probability(const Vector& m, const Vector& s2, const std::vector<Vector>& xs,
                            std::size_t i) {
  const double sd0 = std::sqrt(s2[0]), sd1 = std::sqrt(s2[1]);
  auto inner = [&](double w0) {
    double lo = -INFINITY, hi = INFINITY;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      // (x_i - x_j)^T w > 0  <=>  a w0 + b w1 > 0
      const double a = xs[i][0] - xs[j][0], b = xs[i][1] - xs[j][1];
      if (b > 0)
        lo = std::max(lo, -a * w0 / b);
      else if (b < 0)
        hi = std::min(hi, -a * w0 / b);
      else if (a * w0 <= 0)
        return 0.0;
    }
    if (hi <= lo) return 0.0;
    const double p = std_normal_cdf((hi - m[1]) / sd1) - std_normal_cdf((lo - m[1]) / sd1);
    const double z = (w0 - m[0]) / sd0;
    return p * std::exp(-0.5 * z * z) / (sd0 * std::sqrt(2.0 * std::numbers::pi));
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      inner, m[0] - 12 * sd0, m[0] + 12 * sd0, 15, 1e-13);
}

}  // namespace

TEST_CASE("ucb reference score") {
  const GaussianBelief b{{1.0}, {4.0}};
  const AlternativeSet alts(std::vector<Vector>{{1.0}});
  CHECK(ucb_score(marginal_moments(b, alts[0]), 1.0) == doctest::Approx(1.5));
  Rng rng(1);
  CHECK(baseline_select(make(BaselineKind::ucb), b, alts, Link::logistic, 0, rng) == 0);
}

TEST_CASE("most uncertain prefers the zero feature") {
  const GaussianBelief b{{0.0}, {1.0}};
  const AlternativeSet alts({{0.0}, {1.0}});
  Rng rng(1);
  CHECK(predict_success(b, alts[0], Link::probit) == 0.5);
  CHECK(baseline_select(make(BaselineKind::most_uncertain), GaussianBelief{{0.8}, {1.0}}, alts,
                        Link::probit, 0, rng) == 0);
}

TEST_CASE("thompson on a near point mass") {
  const GaussianBelief b{{1.0}, {1e8}};
  const AlternativeSet alts({{1.0}, {-1.0}});
  Rng rng(99);
  int zeros = 0;
  for (int i = 0; i < 10000; ++i)
    zeros += baseline_select(make(BaselineKind::thompson), b, alts, Link::logistic, 0, rng) == 0;
  CHECK(zeros >= 9999);
}

TEST_CASE("thompson frequencies match the orthant probabilities") {
  const Vector m{0.3, -0.2}, s2{1.0, 0.5};
  const GaussianBelief b{m, {1.0 / s2[0], 1.0 / s2[1]}};
  const std::vector<Vector> xs{{1.0, 0.0}, {0.0, 1.0}, {-0.5, -0.5}};
  const AlternativeSet alts(xs);

  std::array<double, 3> prob{};
  double total = 0.0;
  for (std::size_t i = 0; i < 3; ++i) total += prob[i] = thompson_probability(m, s2, xs, i);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-8));

  Rng rng(4242);
  std::array<int, 3> counts{};
  const int draws = 100000;
  for (int i = 0; i < draws; ++i)
    ++counts[baseline_select(make(BaselineKind::thompson), b, alts, Link::probit, 0, rng)];
  double chi2 = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double e = draws * prob[i];
    chi2 += (counts[i] - e) * (counts[i] - e) / e;
  }
  CHECK(chi2 < 13.82);  // 2 degrees of freedom, 99.9% quantile
}

TEST_CASE("expected improvement") {
  for (Link link : {Link::logistic, Link::probit}) {
    const double inc = oracle::link_value(link, 0.7);
    CHECK(std::abs(expected_improvement(LatentMoments{0.7, 0.0}, inc, link, 32)) < 1e-8);
    CHECK(expected_improvement(LatentMoments{0.7, 1e-14}, inc, link, 32) < 1e-6);

    // The hinge in max(sigma(a) - incumbent, 0) limits Gauss-Hermite accuracy;
    // the error shrinks as the rule grows.
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(-3.0, 3.0), uv(0.0, 4.0), ui(0.0, 1.0);
    double worst32 = 0.0, worst128 = 0.0;
    for (int k = 0; k < 200; ++k) {
      const LatentMoments mom{u(gen), uv(gen)};
      const double incumbent = ui(gen);
      const double ei = expected_improvement(mom, incumbent, link, 32);
      CHECK(ei >= 0.0);
      // Adaptive quadrature oracle of E[max(sigma(a) - incumbent, 0)].
      const double sd = std::sqrt(mom.var);
      const double ref =
          mom.var == 0.0
              ? std::max(oracle::link_value(link, mom.mu) - incumbent, 0.0)
              : boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                    [&](double z) {
                      return std::max(oracle::link_value(link, mom.mu + sd * z) - incumbent,
                                      0.0) *
                             std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
                    },
                    -12.0, 12.0, 15, 1e-12);
      worst32 = std::max(worst32, std::abs(ei - ref));
      worst128 = std::max(worst128,
                          std::abs(expected_improvement(mom, incumbent, link, 128) - ref));
    }
    CHECK(worst32 < 1e-2);
    CHECK(worst128 < 0.5 * worst32);
  }
}

TEST_CASE("ucb with zero width is greedy on the latent mean") {
  std::mt19937_64 gen(12);
  std::normal_distribution<double> n01;
  BaselinePolicy p = make(BaselineKind::ucb);
  p.alpha = 0.0;
  for (int k = 0; k < 50; ++k) {
    const GaussianBelief b{{n01(gen), n01(gen)}, {1.0, 3.0}};
    std::vector<Vector> xs;
    for (int i = 0; i < 7; ++i) xs.push_back({n01(gen), n01(gen)});
    const AlternativeSet alts(xs);
    std::size_t best = 0;
    for (std::size_t i = 1; i < xs.size(); ++i)
      if (dot(b.mean, xs[i]) > dot(b.mean, xs[best])) best = i;
    Rng rng(k);
    CHECK(baseline_select(p, b, alts, Link::logistic, 3, rng) == best);
  }
}

TEST_CASE("every baseline stays in range") {
  std::mt19937_64 gen(13);
  std::normal_distribution<double> n01;
  Rng rng(7);
  for (BaselineKind kind : {BaselineKind::random, BaselineKind::most_uncertain,
                            BaselineKind::thompson, BaselineKind::ei, BaselineKind::ucb}) {
    for (int k = 0; k < 40; ++k) {
      const GaussianBelief b{{n01(gen), n01(gen)}, {2.0, 0.5}};
      std::vector<Vector> xs;
      const std::size_t m = 1 + k % 6;
      for (std::size_t i = 0; i < m; ++i) xs.push_back({n01(gen), n01(gen)});
      const std::size_t pick =
          baseline_select(make(kind), b, AlternativeSet(xs), Link::probit, k % 8, rng);
      CHECK(pick < m);
    }
  }
}

TEST_CASE("ei warm start is uniform, then deterministic") {
  const GaussianBelief b{{0.5}, {2.0}};
  const AlternativeSet alts({{1.0}, {0.2}, {-1.0}, {2.0}});
  Rng rng(31);
  std::array<int, 4> counts{};
  const int draws = 8000;
  for (int i = 0; i < draws; ++i)
    ++counts[baseline_select(make(BaselineKind::ei), b, alts, Link::logistic, i % 5, rng)];
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - draws / 4.0) * (c - draws / 4.0) / (draws / 4.0);
  CHECK(chi2 < 16.27);  // 3 degrees of freedom

  const std::size_t first = baseline_select(make(BaselineKind::ei), b, alts, Link::logistic, 5, rng);
  for (int i = 0; i < 20; ++i)
    CHECK(baseline_select(make(BaselineKind::ei), b, alts, Link::logistic, 5 + i, rng) == first);
}

TEST_CASE("baseline argument validation") {
  const GaussianBelief b{{0.0}, {1.0}};
  const AlternativeSet alts(std::vector<Vector>{{1.0}});
  Rng rng(1);
  CHECK_THROWS_AS(baseline_select(make(BaselineKind::ucb), b, alts, Link::cloglog, 0, rng),
                  UnsupportedLinkError);
  CHECK_THROWS_AS(baseline_select(make(BaselineKind::ucb), b, alts, Link::probit, -1, rng),
                  DomainError);
  BaselinePolicy bad = make(BaselineKind::ucb);
  bad.alpha = -1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = make(BaselineKind::ei);
  bad.quad_nodes = 1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  CHECK(parse_baseline("thompson") == BaselineKind::thompson);
  CHECK_THROWS_AS(parse_baseline("disc"), ConfigError);
}

TEST_CASE("gauss-hermite rule integrates polynomials exactly") {
  const GaussHermiteRule rule(10);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
  // Moments of N(0, 1): 0, 1, 0, 3, 0, 15, 0, 105
  const double expected[] = {1.0, 0.0, 1.0, 0.0, 3.0, 0.0, 15.0, 0.0, 105.0};
  for (int k = 0; k < 9; ++k)
    CHECK(rule.expect(0.0, 1.0, [k](double z) { return std::pow(z, k); }) ==
          doctest::Approx(expected[k]).epsilon(1e-12).scale(1.0));
  CHECK(rule.expect(2.0, 0.25, [](double a) { return a * a; }) ==
        doctest::Approx(4.25).epsilon(1e-13));
}
