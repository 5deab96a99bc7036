#include "binkg/belief.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "binkg/errors.hpp"
#include "binkg/normal.hpp"

namespace binkg {

GaussianBelief GaussianBelief::prior(std::size_t d, double lambda) {
  if (d == 0) throw DimensionError("belief dimension must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("prior precision lambda must be positive and finite");
  return GaussianBelief{Vector(d, 0.0), Vector(d, lambda)};
}

void GaussianBelief::validate() const {
  if (mean.size() != precision.size())
    throw DimensionError("belief mean and precision lengths differ");
  if (mean.empty()) throw DimensionError("belief dimension must be positive");
  for (std::size_t j = 0; j < mean.size(); ++j) {
    if (!std::isfinite(mean[j])) throw DomainError("belief mean is not finite");
    if (!(precision[j] > 0.0) || !std::isfinite(precision[j]))
      throw DomainError("belief precision must be positive and finite");
  }
}

AlternativeSet::AlternativeSet(std::vector<Vector> alternatives)
    : alternatives_(std::move(alternatives)) {
  if (alternatives_.empty()) throw DimensionError("alternative set is empty");
  dim_ = alternatives_.front().size();
  if (dim_ == 0) throw DimensionError("alternatives must have positive dimension");
  for (const auto& x : alternatives_) {
    if (x.size() != dim_) throw DimensionError("alternatives have mixed dimensions");
    for (double v : x)
      if (!std::isfinite(v)) throw DomainError("alternative feature is not finite");
  }
}

bool AlternativeSet::within_unit_ball(std::size_t skip_leading) const {
  for (const auto& x : alternatives_) {
    double sq = 0.0;
    for (std::size_t j = skip_leading; j < x.size(); ++j) sq += x[j] * x[j];
    if (sq > 1.0) return false;
  }
  return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("dot product of mismatched vectors");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatentMoments marginal_moments(const GaussianBelief& belief, std::span<const double> x) {
  if (x.size() != belief.dim())
    throw DimensionError("alternative has dimension " + std::to_string(x.size()) +
                         ", belief has " + std::to_string(belief.dim()));
  LatentMoments out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    out.mu += belief.mean[j] * x[j];
    out.var += x[j] * x[j] / belief.precision[j];
  }
  return out;
}

double predict_success(const LatentMoments& moments, Link link) {
  switch (link) {
    case Link::probit:
      return normal::cdf(moments.mu / std::sqrt(1.0 + moments.var));
    case Link::logistic: {
      const double kappa = 1.0 / std::sqrt(1.0 + std::numbers::pi * moments.var / 8.0);
      return sigma(Link::logistic, kappa * moments.mu);
    }
    default:
      throw UnsupportedLinkError("no closed-form predictive for link " +
                                 std::string(to_string(link)));
  }
}

double predict_success(const GaussianBelief& belief, std::span<const double> x, Link link) {
  return predict_success(marginal_moments(belief, x), link);
}

std::size_t implementation_decision(const GaussianBelief& belief, const AlternativeSet& alts,
                                    Link link) {
  if (alts.empty()) throw DimensionError("alternative set is empty");
  std::size_t best = 0;
  double best_p = -1.0;
  for (std::size_t i = 0; i < alts.size(); ++i) {
    const double p = predict_success(belief, alts[i], link);
    if (p > best_p) {
      best_p = p;
      best = i;
    }
  }
  return best;
}

}  // namespace binkg
