#pragma once

#include <string_view>

#include "binkg/belief.hpp"
#include "binkg/laplace.hpp"
#include "binkg/links.hpp"

namespace binkg {

enum class Updater { laplace, adf };

std::string_view to_string(Updater updater);
Updater parse_updater(std::string_view name);

/// Belief transition s' = T(s, x, y) for a fixed link and approximation.
struct Transition {
  Link link = Link::logistic;
  Updater updater = Updater::laplace;
  BisectionConfig bisection{};

  /// ADF is probit-only; Laplace accepts every link.
  void validate() const;

  GaussianBelief operator()(const GaussianBelief& belief, const ObservedOutcome& obs) const;
};

}  // namespace binkg
