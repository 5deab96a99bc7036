#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "binkg/belief.hpp"
#include "binkg/rng.hpp"
#include "binkg/transition.hpp"

namespace binkg {

struct KgConfig {
  Link link = Link::logistic;
  Updater updater = Updater::laplace;
  /// Scores within tie_epsilon of the best are treated as tied and broken uniformly.
  double tie_epsilon = 1e-9;
  /// Planning horizon of the online rule; no default value is meaningful.
  double tau = 0.0;
  std::uint64_t rng_seed = 0;
  BisectionConfig bisection{};

  /// logistic requires laplace, adf requires probit, and the link must have a
  /// closed-form predictive (logistic or probit).
  void validate() const;
  Transition transition() const { return Transition{link, updater, bisection}; }
};

/// One-step look-ahead values for every alternative.
///
/// nu_tilde[x] = E[ max_x' p(+1 | x', T(s, x, y)) ] over y ~ p(y | x, s),
/// baseline_value = max_x' p(+1 | x', s), kg = nu_tilde - baseline_value.
struct KgScores {
  Vector nu_tilde;
  double baseline_value = 0.0;
  Vector kg;
  Vector predict;  ///< p(+1 | x, s), kept for the online rule and snapshots
};

/// Evaluates both hypothetical posteriors of each candidate with the configured
/// updater and scans all alternatives for the inner max: O(M^2 d) predictive
/// evaluations plus 2M updates.
KgScores kg_scores(const GaussianBelief& belief, const AlternativeSet& alts,
                   const KgConfig& cfg);

/// Uniform choice among {i : scores[i] >= max - tie_epsilon}.
std::size_t select_with_ties(std::span<const double> scores, double tie_epsilon, Rng& rng);

/// Offline KG: argmax kg with epsilon ties broken at random.
std::size_t select_offline(const KgScores& scores, const KgConfig& cfg, Rng& rng);

/// Online KG: argmax_x p(+1 | x, s) + tau * kg_x.
std::size_t select_online(const GaussianBelief& belief, const AlternativeSet& alts,
                          const KgConfig& cfg, Rng& rng);

/// Feature vector 1 || phi_c || psi_a used as the alternative for (context, action).
Vector contextual_features(std::span<const double> context, std::span<const double> action);

/// Online KG over the actions offered under one context. The inner max of the
/// look-ahead ranges over the same offered set.
std::size_t contextual_select(const GaussianBelief& belief, std::span<const double> context,
                              const std::vector<Vector>& actions, const KgConfig& cfg, Rng& rng);

}  // namespace binkg
