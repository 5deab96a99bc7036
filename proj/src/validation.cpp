#include "binkg/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "binkg/adf.hpp"
#include "binkg/kg.hpp"
#include "binkg/oracles.hpp"
#include "binkg/rng.hpp"

namespace binkg::validation {
namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Label random_label(Rng& rng) {
  return uniform_index(rng, 2) == 0 ? Label::negative : Label::positive;
}

GaussianBelief random_belief(Rng& rng, std::size_t d, double mean_sd, double q_lo, double q_hi) {
  GaussianBelief b{Vector(d), Vector(d)};
  std::normal_distribution<double> mean(0.0, mean_sd);
  for (std::size_t j = 0; j < d; ++j) {
    b.mean[j] = mean(rng);
    b.precision[j] = uniform(rng, q_lo, q_hi);
  }
  return b;
}

Vector random_vector(Rng& rng, std::size_t d, double lo, double hi) {
  Vector x(d);
  for (auto& v : x) v = uniform(rng, lo, hi);
  return x;
}

CheckResult finish(std::string name, double dev, double tol, const Timer& t,
                   std::string detail = {}) {
  return CheckResult{std::move(name), dev, tol, dev <= tol, t.seconds(), std::move(detail)};
}

}  // namespace

CheckResult adf_moments(int cases, std::uint64_t seed, const StepFn& step) {
  Timer timer;
  Rng rng(seed);
  const StepFn update = step ? step : StepFn([](const GaussianBelief& b, const ObservedOutcome& o) {
    return adf_step(b, o);
  });
  double worst = 0.0;
  for (int c = 0; c < cases; ++c) {
    const double m = uniform(rng, -3.0, 3.0);
    const double s2 = uniform(rng, 0.05, 4.0);
    const double x = uniform(rng, -2.0, 2.0);
    const Label y = random_label(rng);
    const GaussianBelief prior{{m}, {1.0 / s2}};
    const Vector xv{x};
    const GaussianBelief post = update(prior, {xv, y});
    const oracle::Moments ref = oracle::tilted_moments(m, s2, x, static_cast<int>(y));
    worst = std::max({worst, std::abs(post.mean[0] - ref.mean),
                      std::abs(post.variance(0) - ref.var)});
  }
  return finish("adf moment matching vs quadrature (d=1)", worst, 1e-8, timer,
                std::to_string(cases) + " states");
}

std::vector<CheckResult> laplace_map(int cases, std::uint64_t seed) {
  Timer timer;
  Rng rng(seed);
  double worst_map = 0.0, worst_residual = 0.0;
  const BisectionConfig cfg{};
  for (int c = 0; c < cases; ++c) {
    const Link link = c % 2 == 0 ? Link::logistic : Link::probit;
    const std::size_t d = 1 + uniform_index(rng, 2);
    const GaussianBelief prior = random_belief(rng, d, 1.0, 0.25, 4.0);
    const Vector x = random_vector(rng, d, -2.0, 2.0);
    const Label y = random_label(rng);

    const double p = solve_p_star(prior, {x, y}, link, cfg);
    const LatentMoments mom = marginal_moments(prior, x);
    worst_residual = std::max(
        worst_residual, std::abs(deriv_ratio(link, p * mom.var + sign(y) * mom.mu) - p));

    const GaussianBelief post = laplace_step(prior, {x, y}, link, cfg);
    const Vector ref =
        oracle::map_maximizer(prior.mean, prior.precision, x, static_cast<int>(y), link);
    for (std::size_t j = 0; j < d; ++j)
      worst_map = std::max(worst_map, std::abs(post.mean[j] - ref[j]));
  }
  const std::string detail = std::to_string(cases) + " instances, d<=2, logistic+probit";
  return {finish("laplace mean vs Newton MAP oracle", worst_map, 1e-5, timer, detail),
          finish("laplace bisection fixed-point residual", worst_residual, 1e-10, timer, detail)};
}

std::vector<CheckResult> predictive_grid(int grid) {
  Timer timer;
  double worst_probit = 0.0, worst_logistic = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const LatentMoments mom{-3.0 + 6.0 * i / (grid - 1), 4.0 * j / (grid - 1)};
      worst_probit = std::max(worst_probit, std::abs(predict_success(mom, Link::probit) -
                                                     oracle::predictive(Link::probit, mom.mu,
                                                                        mom.var)));
      worst_logistic = std::max(worst_logistic, std::abs(predict_success(mom, Link::logistic) -
                                                         oracle::predictive(Link::logistic,
                                                                            mom.mu, mom.var)));
    }
  }
  const std::string detail = std::to_string(grid) + "x" + std::to_string(grid) + " grid";
  return {finish("probit predictive vs quadrature", worst_probit, 1e-10, timer, detail),
          finish("logistic predictive approximation vs quadrature", worst_logistic, 0.02, timer,
                 detail)};
}

CheckResult adf_martingale(int cases, std::uint64_t seed) {
  Timer timer;
  Rng rng(seed);
  double worst = 0.0;
  for (int c = 0; c < cases; ++c) {
    const std::size_t d = 1 + uniform_index(rng, 2);
    const GaussianBelief s = random_belief(rng, d, 1.0, 0.25, 4.0);
    const Vector x = random_vector(rng, d, -2.0, 2.0);
    const Vector x_new = random_vector(rng, d, -2.0, 2.0);
    const double p_plus = predict_success(s, x, Link::probit);
    const GaussianBelief up = adf_step(s, {x, Label::positive});
    const GaussianBelief down = adf_step(s, {x, Label::negative});
    const double mixed = p_plus * predict_success(up, x_new, Link::probit) +
                         (1.0 - p_plus) * predict_success(down, x_new, Link::probit);
    worst = std::max(worst, std::abs(mixed - predict_success(s, x_new, Link::probit)));
  }
  return finish("predictive martingale under probit+adf", worst, 1e-6, timer,
                std::to_string(cases) + " (s, x, x') triples, d<=2");
}

CheckResult exact_bayes_martingale(int cases, std::uint64_t seed) {
  Timer timer;
  Rng rng(seed);
  double worst = 0.0;
  for (int c = 0; c < cases; ++c) {
    const double m = std::normal_distribution<double>(0.0, 1.0)(rng);
    const double s2 = 1.0 / uniform(rng, 0.25, 4.0);
    const double x = uniform(rng, -2.0, 2.0);
    const double x_new = uniform(rng, -2.0, 2.0);
    const double p_plus = oracle::predictive(Link::probit, m * x, s2 * x * x);
    const double mixed = p_plus * oracle::exact_posterior_predictive(m, s2, x, +1, x_new) +
                         (1.0 - p_plus) * oracle::exact_posterior_predictive(m, s2, x, -1, x_new);
    worst = std::max(worst, std::abs(mixed - oracle::predictive(Link::probit, m * x_new,
                                                                s2 * x_new * x_new)));
  }
  return finish("predictive martingale under exact Bayes update", worst, 1e-6, timer,
                std::to_string(cases) + " (s, x, x') triples, d=1, quadrature");
}

std::vector<CheckResult> kg_nonnegative(int states, std::uint64_t seed) {
  struct Setting {
    const char* name;
    Link link;
    Updater updater;
    double tol;
  };
  const Setting settings[] = {{"kg nonnegativity, probit+adf", Link::probit, Updater::adf, 1e-9},
                              {"kg nonnegativity, logistic+laplace", Link::logistic,
                               Updater::laplace, 5e-3}};
  std::vector<CheckResult> out;
  for (const auto& s : settings) {
    Timer timer;
    Rng rng(seed);
    KgConfig cfg;
    cfg.link = s.link;
    cfg.updater = s.updater;
    double min_kg = INFINITY;
    int negative = 0;
    for (int k = 0; k < states; ++k) {
      const std::size_t d = 1 + uniform_index(rng, 3);
      const std::size_t m = 1 + uniform_index(rng, 6);
      const GaussianBelief belief = random_belief(rng, d, 1.0, 0.5, 4.0);
      std::vector<Vector> xs;
      for (std::size_t i = 0; i < m; ++i) xs.push_back(random_vector(rng, d, -2.0, 2.0));
      const KgScores scores = kg_scores(belief, AlternativeSet(std::move(xs)), cfg);
      const double lo = *std::min_element(scores.kg.begin(), scores.kg.end());
      min_kg = std::min(min_kg, lo);
      if (lo < -s.tol) ++negative;
    }
    out.push_back(finish(s.name, std::max(0.0, -min_kg), s.tol, timer,
                         std::to_string(states) + " states, min kg " + std::to_string(min_kg) +
                             ", " + std::to_string(negative) + " below -tol"));
  }
  return out;
}

CheckResult zero_information(int states, std::uint64_t seed) {
  Timer timer;
  Rng rng(seed);
  const std::pair<Link, Updater> combos[] = {{Link::probit, Updater::adf},
                                             {Link::probit, Updater::laplace},
                                             {Link::logistic, Updater::laplace}};
  double worst = 0.0;
  for (int k = 0; k < states; ++k) {
    const std::size_t d = 1 + uniform_index(rng, 3);
    const GaussianBelief belief = random_belief(rng, d, 1.0, 0.5, 4.0);
    std::vector<Vector> xs{Vector(d, 0.0)};
    for (int i = 0; i < 3; ++i) xs.push_back(random_vector(rng, d, -2.0, 2.0));
    const AlternativeSet alts(std::move(xs));
    for (const auto& [link, updater] : combos) {
      KgConfig cfg;
      cfg.link = link;
      cfg.updater = updater;
      worst = std::max(worst, std::abs(kg_scores(belief, alts, cfg).kg[0]));
    }
  }
  return finish("kg of the zero alternative", worst, 0.0, timer,
                std::to_string(states) + " states x 3 link/updater pairs");
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(adf_moments(500, derive_seed(seed, 1)));
  for (auto& r : laplace_map(200, derive_seed(seed, 2))) out.push_back(std::move(r));
  for (auto& r : predictive_grid(50)) out.push_back(std::move(r));
  out.push_back(adf_martingale(100, derive_seed(seed, 4)));
  for (auto& r : kg_nonnegative(200, derive_seed(seed, 5))) out.push_back(std::move(r));
  out.push_back(zero_information(50, derive_seed(seed, 6)));
  return out;
}

void print(std::ostream& out, const CheckResult& r) {
  char line[256];
  std::snprintf(line, sizeof line, "[%s] %-50s max_dev=%.3e tol=%.1e (%.2fs)",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_deviation, r.tolerance,
                r.seconds);
  out << line;
  if (!r.detail.empty()) out << "  " << r.detail;
  out << '\n';
}

}  // namespace binkg::validation
