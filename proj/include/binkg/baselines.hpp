#pragma once

#include <cstddef>
#include <string_view>

#include "binkg/belief.hpp"
#include "binkg/rng.hpp"

namespace binkg {

enum class BaselineKind { random, most_uncertain, thompson, ei, ucb };

std::string_view to_string(BaselineKind kind);
BaselineKind parse_baseline(std::string_view name);

struct BaselinePolicy {
  BaselineKind kind = BaselineKind::random;
  double alpha = 1.0;         // UCB width on the latent scale
  int ei_init = 5;            // uniform-random warm-start steps before EI
  int quad_nodes = 32;        // Gauss-Hermite nodes for EI

  void validate() const;
};

/// Expected improvement on the success-probability scale,
/// E_{a ~ N(mu, var)} [max(sigma(a) - incumbent, 0)].
double expected_improvement(const LatentMoments& moments, double incumbent, Link link,
                            int quad_nodes);

/// Latent upper confidence bound mu + alpha * sqrt(var).
double ucb_score(const LatentMoments& moments, double alpha);

/// Next measurement chosen by a baseline policy at the given step (0-based).
std::size_t baseline_select(const BaselinePolicy& policy, const GaussianBelief& belief,
                            const AlternativeSet& alts, Link link, int step, Rng& rng);

}  // namespace binkg
