#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "binkg/links.hpp"

namespace binkg {

using Vector = std::vector<double>;

/// Diagonal Gaussian belief over the weight vector: w_j ~ N(mean_j, 1 / precision_j).
///
/// Plain value type. Updaters never mutate a belief in place; they return the
/// successor state, so a trajectory is a sequence of values.
struct GaussianBelief {
  Vector mean;
  Vector precision;

  /// Prior N(0, lambda^{-1} I) of dimension d.
  static GaussianBelief prior(std::size_t d, double lambda);

  std::size_t dim() const { return mean.size(); }
  double variance(std::size_t j) const { return 1.0 / precision[j]; }

  /// Throws DimensionError / DomainError when the invariants fail.
  void validate() const;

  friend bool operator==(const GaussianBelief&, const GaussianBelief&) = default;
};

/// Finite decision set; every alternative shares one dimension.
class AlternativeSet {
 public:
  AlternativeSet() = default;
  explicit AlternativeSet(std::vector<Vector> alternatives);

  std::size_t size() const { return alternatives_.size(); }
  std::size_t dim() const { return dim_; }
  bool empty() const { return alternatives_.empty(); }

  const Vector& operator[](std::size_t i) const { return alternatives_[i]; }
  auto begin() const { return alternatives_.begin(); }
  auto end() const { return alternatives_.end(); }

  /// Checks ||x||_2 <= 1 on every alternative, skipping the first
  /// `skip_leading` coordinates (the intercept slot).
  bool within_unit_ball(std::size_t skip_leading = 0) const;

 private:
  std::vector<Vector> alternatives_;
  std::size_t dim_ = 0;
};

/// Distribution of the latent score a = w^T x under the belief.
struct LatentMoments {
  double mu = 0.0;
  double var = 0.0;
};

double dot(std::span<const double> a, std::span<const double> b);

LatentMoments marginal_moments(const GaussianBelief& belief, std::span<const double> x);

/// Posterior predictive p(y = +1 | a ~ N(mu, var)).
///
/// Probit is exact, Phi(mu / sqrt(1 + var)). Logistic uses the probit-matched
/// surrogate sigma(kappa(var) mu), kappa(var) = (1 + pi var / 8)^{-1/2}.
/// Other links throw UnsupportedLinkError.
double predict_success(const LatentMoments& moments, Link link);
double predict_success(const GaussianBelief& belief, std::span<const double> x, Link link);

/// argmax_x predict_success, lowest index on ties.
std::size_t implementation_decision(const GaussianBelief& belief, const AlternativeSet& alts,
                                    Link link);

}  // namespace binkg
