#include "binkg/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "binkg/errors.hpp"
#include "binkg/quadrature.hpp"

namespace binkg {
namespace {

void require_predictive_link(Link link) {
  if (link != Link::logistic && link != Link::probit)
    throw UnsupportedLinkError("baselines need a closed-form predictive, got " +
                               std::string(to_string(link)));
}

double ei_with_rule(const GaussHermiteRule& rule, const LatentMoments& mom, double incumbent,
                    Link link) {
  return rule.expect(mom.mu, mom.var,
                     [&](double a) { return std::max(sigma(link, a) - incumbent, 0.0); });
}

template <class Score>
std::size_t argmax_first(std::size_t n, Score&& score) {
  std::size_t best = 0;
  double best_score = score(0);
  for (std::size_t i = 1; i < n; ++i) {
    const double s = score(i);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

}  // namespace

std::string_view to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::random: return "random";
    case BaselineKind::most_uncertain: return "most_uncertain";
    case BaselineKind::thompson: return "thompson";
    case BaselineKind::ei: return "ei";
    case BaselineKind::ucb: return "ucb";
  }
  return "unknown";
}

BaselineKind parse_baseline(std::string_view name) {
  if (name == "random") return BaselineKind::random;
  if (name == "most_uncertain") return BaselineKind::most_uncertain;
  if (name == "thompson") return BaselineKind::thompson;
  if (name == "ei") return BaselineKind::ei;
  if (name == "ucb") return BaselineKind::ucb;
  throw ConfigError("unknown baseline policy '" + std::string(name) + "'");
}

void BaselinePolicy::validate() const {
  if (!(alpha >= 0.0)) throw ConfigError("UCB alpha must be non-negative");
  if (ei_init < 0) throw ConfigError("EI warm-start count must be non-negative");
  if (quad_nodes < 2) throw ConfigError("EI needs at least 2 quadrature nodes");
}

double expected_improvement(const LatentMoments& moments, double incumbent, Link link,
                            int quad_nodes) {
  require_predictive_link(link);
  if (quad_nodes < 2) throw ConfigError("EI needs at least 2 quadrature nodes");
  return ei_with_rule(GaussHermiteRule(static_cast<std::size_t>(quad_nodes)), moments, incumbent,
                      link);
}

double ucb_score(const LatentMoments& moments, double alpha) {
  return moments.mu + alpha * std::sqrt(moments.var);
}

std::size_t baseline_select(const BaselinePolicy& policy, const GaussianBelief& belief,
                            const AlternativeSet& alts, Link link, int step, Rng& rng) {
  policy.validate();
  require_predictive_link(link);
  if (alts.empty()) throw DimensionError("alternative set is empty");
  if (step < 0) throw DomainError("step must be non-negative");
  const std::size_t m = alts.size();

  switch (policy.kind) {
    case BaselineKind::random:
      return uniform_index(rng, m);

    case BaselineKind::most_uncertain:
      return argmax_first(m, [&](std::size_t i) {
        return -std::abs(predict_success(belief, alts[i], link) - 0.5);
      });

    case BaselineKind::thompson: {
      Vector w(belief.dim());
      for (std::size_t j = 0; j < w.size(); ++j)
        w[j] = std::normal_distribution<double>(belief.mean[j],
                                                std::sqrt(belief.variance(j)))(rng);
      return argmax_first(m, [&](std::size_t i) { return dot(w, alts[i]); });
    }

    case BaselineKind::ucb:
      return argmax_first(m, [&](std::size_t i) {
        return ucb_score(marginal_moments(belief, alts[i]), policy.alpha);
      });

    case BaselineKind::ei: {
      if (step < policy.ei_init) return uniform_index(rng, m);
      const double incumbent =
          predict_success(belief, alts[implementation_decision(belief, alts, link)], link);
      const GaussHermiteRule rule(static_cast<std::size_t>(policy.quad_nodes));
      return argmax_first(m, [&](std::size_t i) {
        return ei_with_rule(rule, marginal_moments(belief, alts[i]), incumbent, link);
      });
    }
  }
  throw ConfigError("invalid baseline policy kind");
}

}  // namespace binkg
