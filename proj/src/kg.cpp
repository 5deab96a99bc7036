#include "binkg/kg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binkg/errors.hpp"

namespace binkg {
namespace {

double best_predict(const GaussianBelief& belief, const AlternativeSet& alts, Link link) {
  double best = 0.0;
  for (const auto& x : alts) best = std::max(best, predict_success(belief, x, link));
  return best;
}

}  // namespace

void KgConfig::validate() const {
  if (link != Link::logistic && link != Link::probit)
    throw ConfigError("knowledge gradient needs a closed-form predictive (logistic or probit), got " +
                      std::string(to_string(link)));
  if (link == Link::logistic && updater != Updater::laplace)
    throw ConfigError("logistic knowledge gradient requires the laplace updater");
  if (!(tie_epsilon >= 0.0)) throw ConfigError("tie_epsilon must be non-negative");
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw ConfigError("tau must be non-negative");
  transition().validate();
}

KgScores kg_scores(const GaussianBelief& belief, const AlternativeSet& alts,
                   const KgConfig& cfg) {
  cfg.validate();
  if (alts.empty()) throw DimensionError("alternative set is empty");
  if (alts.dim() != belief.dim())
    throw DimensionError("alternative dimension does not match the belief");

  const Transition step = cfg.transition();
  const std::size_t m = alts.size();
  KgScores out;
  out.nu_tilde.resize(m);
  out.kg.resize(m);
  out.predict.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.predict[i] = predict_success(belief, alts[i], cfg.link);
  out.baseline_value = *std::max_element(out.predict.begin(), out.predict.end());

  for (std::size_t i = 0; i < m; ++i) {
    const double p_plus = out.predict[i];
    const GaussianBelief up = step(belief, {alts[i], Label::positive});
    const GaussianBelief down = step(belief, {alts[i], Label::negative});
    out.nu_tilde[i] = p_plus * best_predict(up, alts, cfg.link) +
                      (1.0 - p_plus) * best_predict(down, alts, cfg.link);
    out.kg[i] = out.nu_tilde[i] - out.baseline_value;
  }
  return out;
}

std::size_t select_with_ties(std::span<const double> scores, double tie_epsilon, Rng& rng) {
  if (scores.empty()) throw DimensionError("cannot select from an empty score vector");
  const double best = *std::max_element(scores.begin(), scores.end());
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (scores[i] >= best - tie_epsilon) tied.push_back(i);
  if (tied.size() == 1) return tied.front();
  return tied[uniform_index(rng, tied.size())];
}

std::size_t select_offline(const KgScores& scores, const KgConfig& cfg, Rng& rng) {
  return select_with_ties(scores.kg, cfg.tie_epsilon, rng);
}

std::size_t select_online(const GaussianBelief& belief, const AlternativeSet& alts,
                          const KgConfig& cfg, Rng& rng) {
  const KgScores scores = kg_scores(belief, alts, cfg);
  Vector combined(alts.size());
  for (std::size_t i = 0; i < combined.size(); ++i)
    combined[i] = scores.predict[i] + cfg.tau * scores.kg[i];
  return select_with_ties(combined, cfg.tie_epsilon, rng);
}

Vector contextual_features(std::span<const double> context, std::span<const double> action) {
  Vector x;
  x.reserve(1 + context.size() + action.size());
  x.push_back(1.0);
  x.insert(x.end(), context.begin(), context.end());
  x.insert(x.end(), action.begin(), action.end());
  return x;
}

std::size_t contextual_select(const GaussianBelief& belief, std::span<const double> context,
                              const std::vector<Vector>& actions, const KgConfig& cfg, Rng& rng) {
  if (actions.empty()) throw DimensionError("no actions offered");
  std::vector<Vector> xs;
  xs.reserve(actions.size());
  for (const auto& a : actions) {
    xs.push_back(contextual_features(context, a));
    if (xs.back().size() != belief.dim())
      throw DimensionError("1 + |context| + |action| must equal the belief dimension");
  }
  if (xs.size() == 1) return 0;
  return select_online(belief, AlternativeSet(std::move(xs)), cfg, rng);
}

}  // namespace binkg
