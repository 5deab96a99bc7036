#pragma once

#include <string>
#include <string_view>

namespace binkg {

/// Sigmoid link sigma: R -> (0, 1), monotone increasing with log-concave sigma.
enum class Link { logistic, probit, cloglog, loglog };

/// Binary outcome of one experiment.
enum class Label : int { negative = -1, positive = 1 };

constexpr double sign(Label y) { return static_cast<double>(static_cast<int>(y)); }
constexpr Label flip(Label y) {
  return y == Label::positive ? Label::negative : Label::positive;
}

std::string_view to_string(Link link);
Link parse_link(std::string_view name);

/// sigma(a). Throws DomainError on non-finite a.
double sigma(Link link, double a);

/// log sigma(a), accurate in both tails.
double log_sigma(Link link, double a);

/// sigma'(a) / sigma(a). Non-negative and non-increasing in a.
double deriv_ratio(Link link, double a);

/// -d^2/df^2 log sigma(y f). Non-negative for every supported link.
/// For probit this is w(y f); for logistic it is sigma(f)(1 - sigma(f)).
double neg_curvature(Link link, double f, Label y);

}  // namespace binkg
